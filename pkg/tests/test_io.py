import json

import pytest

from dblcat.constructions import shape
from dblcat.core import DoubleCategory, DoubleFunctor, to_document
from dblcat.errors import DblCatError, DocumentSyntaxError, UnknownKind, ValidationError
from dblcat.io import (Document, build_corpus, load_corpus, load_value, parse_document,
                       serialize_document, write_corpus)
from dblcat.io.cli import main
from dblcat.io.corpus import corpus_entries

ONE_TEXT = """{
  "hcomp": [["id:*", "id:*", "id:*"]],
  "hmor": [{"name": "id:*", "src": "*", "tgt": "*"}],
  "kind": "double_category",
  "objects": ["*"],
  "sq_hcomp": [["box:*", "box:*", "box:*"]],
  "sq_vcomp": [["box:*", "box:*", "box:*"]],
  "squares": [{"bottom": "id:*", "left": "id:*", "name": "box:*", "right": "id:*", "top": "id:*"}],
  "vcomp": [["id:*", "id:*", "id:*"]],
  "vmor": [{"name": "id:*", "src": "*", "tgt": "*"}]
}"""


def test_parse_serialized_shape():
    doc = parse_document(serialize_document(shape("H2")))
    assert isinstance(doc, Document) and doc.kind == "double_category"
    assert load_value(doc) == shape("H2")


def test_truncated_text_is_a_syntax_error():
    text = serialize_document(shape("H2"))
    with pytest.raises(SyntaxError) as exc:
        parse_document(text[: len(text) // 2])
    assert isinstance(exc.value, DocumentSyntaxError) and exc.value.lineno >= 1


def test_unknown_kind():
    with pytest.raises(UnknownKind):
        parse_document('{"kind": "monoid"}')


def test_dangling_square_in_functor_document():
    H2 = to_document(shape("H2"))
    text = json.dumps({"kind": "double_functor", "source": H2, "target": H2,
                       "on_objects": {"0": "0", "1": "1"}, "on_hmor": {"f": "f"},
                       "on_squares": {"e:f": "missing"}})
    doc = parse_document(text)
    with pytest.raises(DblCatError) as exc:
        load_value(doc)
    assert "missing" in str(exc.value)


def test_canonical_text_of_the_point():
    assert serialize_document(shape("One")) == json.dumps(json.loads(ONE_TEXT), sort_keys=True,
                                                          indent=2) + "\n"


@pytest.mark.parametrize("name", ["One", "HxV", "Sq2", "HSigmaI", "Empty"])
def test_serialization_is_stable(name):
    text = serialize_document(shape(name))
    assert serialize_document(parse_document(text)) == text
    assert load_value(parse_document(text)) == shape(name)


def test_walking_square_text_has_one_non_identity_square():
    doc = json.loads(serialize_document(shape("HxV")))
    D = load_value(parse_document(json.dumps(doc)))
    names = [r["name"] for r in doc["squares"]]
    assert [a for a in names if not D.is_identity_square(a)] == ["(e:f,idsq:u)"]


def test_small_corpus_contents():
    names = {e.name for e in corpus_entries("small")}
    for required in ("shape:Sq2", "shape:HxV", "shape:ParSq", "HSigmaI->H2"):
        assert required in names
    functors = [e for e in corpus_entries("small") if e.is_functor]
    assert len(functors) >= 30


def test_corpus_is_stable(tmp_path):
    first = write_corpus("small", tmp_path / "a")
    corpus_entries.cache_clear()
    second = write_corpus("small", tmp_path / "b")
    assert [p.name for p in first] == [p.name for p in second]
    assert all(p.read_bytes() == q.read_bytes() for p, q in zip(first, second))


def test_corpus_round_trip(tmp_path):
    write_corpus("small", tmp_path)
    loaded = load_corpus(tmp_path)
    original = corpus_entries("small")
    assert [e.name for e in loaded] == [e.name for e in original]
    for a, b in zip(loaded, original):
        if isinstance(b.value, DoubleFunctor):
            assert a.value.on_squares == b.value.on_squares
        else:
            assert isinstance(a.value, DoubleCategory) and a.value == b.value


def test_every_corpus_document_validates():
    for doc in build_corpus("small"):
        load_value(doc)


# -- command line ---------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def write(tmp_path, name, value):
    path = tmp_path / name
    path.write_text(serialize_document(value), encoding="utf-8")
    return str(path)


def test_cli_validate(tmp_path, capsys):
    good = write(tmp_path, "hxv.json", shape("HxV"))
    code, out = run(capsys, "validate", good, "--format", "json")
    assert code == 0 and json.loads(out.out)["valid"] is True
    from fixtures import broken_interchange
    bad = write(tmp_path, "bad.json", broken_interchange())
    code, out = run(capsys, "--format", "json", "validate", bad)
    laws = {v[0] for v in json.loads(out.out)["violations"]}
    assert code == 1 and "interchange" in laws


def test_cli_input_errors(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text('{"objects": [', encoding="utf-8")
    assert run(capsys, "validate", str(broken))[0] == 2
    assert run(capsys, "validate", str(tmp_path / "absent.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_cli_classify_and_fibrant(capsys):
    code, out = run(capsys, "classify", "shape:Sq2", "--format", "json")
    table = json.loads(out.out)
    assert code == 0 and table["tr"]["fibrant"] and not table["h_eqp"]["fibrant"]
    assert run(capsys, "fibrant", "shape:Sq2", "--set", "J_tr")[0] == 0
    assert run(capsys, "fibrant", "shape:H2", "--set", "J_tr")[0] == 1
    assert run(capsys, "--bound", "1", "fibrant", "shape:HxV", "--set", "J_tr")[0] == 3


def test_cli_check_and_lift(tmp_path, capsys):
    code, out = run(capsys, "construct", "shape", "H2")
    h2 = tmp_path / "h2.json"
    h2.write_text(out.out, encoding="utf-8")
    one = write(tmp_path, "one.json", shape("One"))
    functor = tmp_path / "f.json"
    functor.write_text(json.dumps({"kind": "double_functor", "source": "h2.json",
                                   "target": "one.json", "on_objects": {"0": "*", "1": "*"},
                                   "on_hmor": {"f": "id:*"}}), encoding="utf-8")
    code, out = run(capsys, "check", str(functor), "--property", "trivial-fibration")
    assert code == 1 and "full-h" in out.out
    code, out = run(capsys, "check", str(functor), "--property", "four-tuple", "--format", "json")
    assert code == 1 and "H" in json.loads(out.out)["components"]
    assert run(capsys, "check", str(functor), "--property", "gregarious-fibration")[0] == 0
    assert run(capsys, "lift", str(functor), "--set", "J0")[0] == 0
    assert run(capsys, "lift", str(functor), "--set", "I")[0] == 1


def test_cli_construct_and_pushout(tmp_path, capsys):
    code, out = run(capsys, "construct", "product", "shape:H2", "shape:V2")
    assert code == 0 and load_value(parse_document(out.out)) == shape("HxV")
    code, out = run(capsys, "pushout", "identify", "shape:ParSq", "--squares",
                    "(e:f,idsq:u)", "(e:f,idsq:u)'")
    assert code == 0
    quotient_doc = parse_document(out.out)
    assert len(load_value(quotient_doc).squares) == len(shape("HxV").squares)
    code, out = run(capsys, "pushout", "h-edge", "shape:One", "--src", "*", "--tgt", "*",
                    "--k", "2", "--truncation")
    assert code == 2
    code, out = run(capsys, "pushout", "h-edge", "shape:One", "--src", "*", "--tgt", "*", "--k", "2")
    assert code == 0 and parse_document(out.out).kind == "presentation"
    code, out = run(capsys, "quotient", "shape:ParSq", "--pair", "(e:f,idsq:u)",
                    "(e:f,idsq:u)'")
    assert code == 0
    assert run(capsys, "pushout", "attach-object", "shape:Empty")[0] == 0


def test_cli_corpus_and_audit(tmp_path, capsys):
    out_dir = tmp_path / "corpus"
    code, out = run(capsys, "corpus", "build", "--profile", "small", "--out", str(out_dir),
                    "--format", "json")
    assert code == 0 and json.loads(out.out)["documents"] == len(list(out_dir.iterdir()))
    code, out = run(capsys, "audit-recipe", "--set", "J_tr", "--corpus", str(out_dir),
                    "--format", "json")
    report = json.loads(out.out)
    assert code == 0 and report["pass"] and report["checked"] > 0
    assert "falsification" in report["header"]


def test_cli_shapes(capsys):
    code, out = run(capsys, "shapes", "list", "--format", "json")
    data = json.loads(out.out)
    assert code == 0 and "HxV" in data["shapes"] and "J_tr" in data["sets"]
