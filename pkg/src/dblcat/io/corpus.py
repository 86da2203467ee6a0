"""The deterministic corpus of double categories, 2-categories and functors."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from ..colimits import attach_object, identify_parallel_squares
from ..constructions import (SEED_NAMES, SHAPE_NAMES, coproduct,
                             coproduct_injection, embed, embed_functor,
                             initial_functor, product, projection, seed, shape,
                             terminal_functor, transpose, transpose_functor,
                             underlying, vop)
from ..core import (DoubleCategory, DoubleFunctor, TwoCategory, functor_from_maps,
                    functor_to_document, to_document)
from .documents import Document, read_document, load_value, serialize_document

PROFILES = ("small", "standard")
MAX_OBJECTS = 8
MAX_SQUARES = 64


@dataclass(frozen=True)
class Entry:
    name: str
    value: object

    @property
    def is_functor(self) -> bool:
        return isinstance(self.value, DoubleFunctor)

    @property
    def is_two_category(self) -> bool:
        return isinstance(self.value, TwoCategory)


class _Builder:
    def __init__(self):
        self.entries: list[Entry] = []
        self.cats: dict[str, DoubleCategory] = {}

    def cat(self, name, D, cap=False):
        if cap and (len(D.objects) > MAX_OBJECTS or len(D.squares) > MAX_SQUARES):
            return None
        for e in self.entries:
            if not e.is_functor and type(e.value) is type(D) and e.value == D:
                self.cats[name] = e.value
                return e.value
        self.entries.append(Entry(name, D))
        self.cats[name] = D
        return D

    def fun(self, name, F):
        self.entries.append(Entry(name, F))
        return F


def _seed_functors() -> dict:
    one, two, I = seed("One"), seed("Two"), seed("I")
    s2, si, pair, z2 = seed("Sigma2"), seed("SigmaI"), seed("Pair"), seed("Z2")
    return {
        "I->One": terminal_functor(I, one),
        "Z2->One": terminal_functor(z2, one),
        "One->I@0": functor_from_maps(one, I, {"*": "0"}),
        "One->Z2": functor_from_maps(one, z2, {"*": "*"}),
        "Two->I": functor_from_maps(two, I, {"0": "0", "1": "1"}, {"f": "f"}),
        "Two->Pair@f": functor_from_maps(two, pair, {"0": "0", "1": "1"}, {"f": "f"}),
        "Sigma2->SigmaI": functor_from_maps(s2, si, {"0": "0", "1": "1"},
                                            {"f": "f", "g": "g"}, {}, {"alpha": "alpha"}),
        "SigmaI->Two": functor_from_maps(si, two, {"0": "0", "1": "1"}, {"f": "f", "g": "f"},
                                         {}, {"alpha": "e:f", "alpha^-1": "e:f"}),
        "Sigma2->Two": functor_from_maps(s2, two, {"0": "0", "1": "1"}, {"f": "f", "g": "f"},
                                         {}, {"alpha": "e:f"}),
    }


def _first_parallel_pair(D: DoubleCategory):
    for a, b in D.squares.items():
        for c in D.with_boundary(b):
            if c != a:
                return a, c
    return None


def _small(B: _Builder):
    for n in SHAPE_NAMES:
        B.cat(f"shape:{n}", shape(n))
    for n in SEED_NAMES:
        B.cat(f"seed:{n}", seed(n))
    for n in SEED_NAMES:
        for kind in ("Sq", "Hsim"):
            B.cat(f"{kind}({n})", embed(kind, seed(n)))
    c = B.cats
    for name, (x, y) in {"H2+One": ("shape:H2", "shape:One"),
                         "One+One": ("shape:One", "shape:One"),
                         "HSigmaI+One": ("shape:HSigmaI", "shape:One"),
                         "Sq(I)+One": ("Sq(I)", "shape:One"),
                         "ParSq+One": ("shape:ParSq", "shape:One")}.items():
        B.cat(name, coproduct(c[x], c[y])[0])
    for name, (x, y) in {"H2xH2": ("shape:H2", "shape:H2"),
                         "Sq2xOne": ("shape:Sq2", "shape:One"),
                         "V2xV2": ("shape:V2", "shape:V2"),
                         "H(I)xV2": ("seed:I", "shape:V2")}.items():
        B.cat(name, product(c[x], c[y])[0])
    for n in ("Sq(I)", "Hsim(I)", "shape:HxV", "Sq(SigmaI)", "Sq(Z2)"):
        B.cat(f"T({n})", transpose(c[n]))
        B.cat(f"vop({n})", vop(c[n]))
    for n in ("I", "Z2", "SigmaI"):
        B.cat(f"V({n})", embed("V", seed(n)))
    B.cat("U_H(HxV)", underlying("H", c["shape:HxV"]))
    B.cat("U_V(Sq(I))", underlying("V", c["Sq(I)"]))
    doubles = [e for e in B.entries if not e.is_two_category]
    for e in doubles:
        pair = _first_parallel_pair(e.value)
        if pair is not None:
            Q, q = identify_parallel_squares(e.value, *pair)
            B.cat(f"{e.name}/~", Q)
            B.fun(f"quotient:{e.name}", q)

    # functors
    for n in SHAPE_NAMES:
        B.fun(f"id:{n}", DoubleFunctor.identity(shape(n)))
    for n in ("Sq(I)", "Hsim(I)", "Sq(Z2)"):
        B.fun(f"id:{n}", DoubleFunctor.identity(c[n]))
    for e in [e for e in B.entries if not e.is_functor and not e.is_two_category]:
        if e.value.objects:
            B.fun(f"!:{e.name}", terminal_functor(e.value))
    for n in ("shape:H2", "shape:Sq2", "shape:One"):
        B.fun(f"initial:{n}", initial_functor(c[n]))
    for name, G in _seed_functors().items():
        B.fun(f"seed:{name}", G)
        for kind in ("H", "Sq", "Hsim"):
            B.fun(f"{kind}:{name}", embed_functor(kind, G))
    H2, HxV = shape("H2"), shape("HxV")
    B.fun("H2->HxV@0", functor_from_maps(H2, HxV, {"0": "(0,0)", "1": "(1,0)"},
                                         {"f": "(f,id:0)"}))
    B.fun("V2->HxV@0", functor_from_maps(shape("V2"), HxV, {"0": "(0,0)", "1": "(0,1)"},
                                         {}, {"u": "(id:0,u)"}))
    bd = shape("BoundaryHxV")
    B.fun("BoundaryHxV->HxV", functor_from_maps(
        bd, HxV, {a: a for a in bd.objects}, {f: f for f in bd.hmor},
        {u: u for u in bd.vmor}, {a: a for a in bd.squares}))
    B.fun("HSigmaI->H2", functor_from_maps(
        shape("HSigmaI"), H2, {"0": "0", "1": "1"}, {"f": "f", "g": "f"}, {},
        {"alpha": "e:f", "alpha^-1": "e:f"}))
    B.fun("VSigmaI->V2", transpose_functor(B.entries[-1].value))
    for x, y in (("shape:H2", "shape:H2"), ("shape:Sq2", "shape:One"), ("shape:V2", "shape:V2")):
        for i in (0, 1):
            B.fun(f"pr{i}:{x}x{y}", projection(i, c[x], c[y]))
    for x, y in (("shape:H2", "shape:One"), ("shape:One", "shape:One")):
        for i in (0, 1):
            B.fun(f"in{i}:{x}+{y}", coproduct_injection(i, c[x], c[y]))
    for n in ("shape:Sq2", "shape:HSigmaI", "Sq(I)"):
        B.fun(f"T:id:{n}", transpose_functor(DoubleFunctor.identity(c[n])))
    B.fun("attach:H2", attach_object(H2)[1])


def _standard(B: _Builder):
    c = B.cats
    atoms = ["shape:One", "shape:H2", "shape:V2", "shape:Sq2", "shape:HSigmaI",
             "Sq(I)", "seed:I", "shape:HxV", "shape:ParSq"]
    added = []
    for i, x in enumerate(atoms):
        for y in atoms[i:]:
            for kind, build in (("x", product), ("+", coproduct)):
                D = B.cat(f"{x}{kind}{y}", build(c[x], c[y])[0], cap=True)
                if D is not None and not isinstance(D, TwoCategory):
                    added.append((f"{x}{kind}{y}", D))
    for name, D in added:
        B.fun(f"!:{name}", terminal_functor(D))
        pair = _first_parallel_pair(D)
        if pair is not None:
            Q, q = identify_parallel_squares(D, *pair)
            if B.cat(f"{name}/~", Q, cap=True) is not None:
                B.fun(f"quotient:{name}", q)
    for x in ("shape:H2", "shape:Sq2", "shape:HSigmaI"):
        for i in (0, 1):
            B.fun(f"pr{i}:{x}x{x}", projection(i, c[x], c[x]))


@lru_cache(maxsize=None)
def corpus_entries(profile: str = "small") -> tuple:
    """Named values of the corpus, in a fixed order."""
    if profile not in PROFILES:
        raise ValueError(f"unknown corpus profile {profile!r}")
    B = _Builder()
    _small(B)
    if profile == "standard":
        _standard(B)
    return tuple(B.entries)


def _document(e: Entry) -> Document:
    if e.is_functor:
        body = functor_to_document(e.value)
    else:
        body = to_document(e.value)
    kind = body.pop("kind")
    return Document(kind, {"label": e.name, **body})


def build_corpus(profile: str = "small") -> list:
    return [_document(e) for e in corpus_entries(profile)]


def _file_name(i, label):
    safe = "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in label)
    return f"{i:03d}_{safe}.json"


def write_corpus(profile: str, out) -> list:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, doc in enumerate(build_corpus(profile)):
        p = out / _file_name(i, doc.payload["label"])
        p.write_text(serialize_document(doc), encoding="utf-8")
        paths.append(p)
    return paths


def load_corpus(directory) -> list:
    """Entries read back from a corpus directory, in file-name order."""
    out = []
    for p in sorted(Path(directory).glob("*.json")):
        doc = read_document(p)
        out.append(Entry(doc.payload.get("label", p.stem), load_value(doc, p.parent)))
    return out


def composable_triples(functors) -> list:
    """Triples (F, G, H) of corpus functors with F: A→B, G: B→C, H: C→D."""
    fs = list(functors)
    out = []
    for F in fs:
        for G in fs:
            if F.target is not G.source and F.target != G.source:
                continue
            for H in fs:
                if G.target is H.source or G.target == H.source:
                    out.append((F, G, H))
    return out
