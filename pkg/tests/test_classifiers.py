import pytest

from dblcat.classifiers import (AUDIT_HEADER, FIBRANT_OBJECTS, PROPERTIES, STRUCTURES,
                                audit_recipe, classify, property_check, structural_fibrancy)
from dblcat.constructions import SEED_NAMES, embed, seed, shape
from dblcat.errors import UncertifiedShape
from dblcat.io.corpus import corpus_entries
from dblcat.lifting import CellShape, generating_set, is_naive_fibrant


def test_point_is_fibrant_everywhere():
    t = classify(shape("One"))
    assert t.fibrant_in() == list(STRUCTURES)


def test_empty_is_fibrant_except_contractible():
    t = classify(shape("Empty"))
    assert [k for k, r in t.items() if not r.fibrant] == ["ctr"]


def test_walking_companion_pair():
    t = classify(shape("Sq2"))
    for k in ("greg", "whi", "wvi", "tr"):
        assert getattr(t, k), k
    for k in ("tr_gpd", "h_eqp"):
        assert not getattr(t, k), k
    assert t["h_eqp"].shape == "J.H2-Sq2vop"


def test_table_access():
    t = classify(shape("H2"))
    assert t["tr"].fibrant is t.tr is False
    with pytest.raises(AttributeError):
        t.nope


def test_property_examples():
    assert property_check(shape("Sq2"), "transposable").holds
    assert property_check(shape("HxV"), "cofibrant_object").holds
    assert property_check(shape("One"), "contractible").holds
    assert not property_check(shape("Empty"), "contractible").holds
    assert not property_check(seed("Z2"), "cofibrant_object").holds
    assert not property_check(shape("HSigmaI"), "double_groupoid").holds
    assert property_check(embed("Sq", seed("I")), "double_groupoid").holds
    with pytest.raises(ValueError):
        property_check(shape("One"), "nope")


def test_every_property_runs():
    for prop in PROPERTIES:
        assert property_check(shape("HxV"), prop).holds in (True, False)


@pytest.mark.parametrize("structure", sorted(FIBRANT_OBJECTS))
def test_structural_description_matches_lifting(structure, small_categories):
    for e in small_categories:
        lifted = is_naive_fibrant(e.value, STRUCTURES[structure]).fibrant
        assert structural_fibrancy(e.value, structure).holds == lifted, (e.name, structure)


@pytest.mark.parametrize("name", SEED_NAMES)
def test_square_categories_are_transposable(name):
    assert classify(embed("Sq", seed(name))).tr


def _small_corpus():
    return [e.value for e in corpus_entries("small")]


def test_audit_passes_for_transposable():
    r = audit_recipe("J_tr", _small_corpus())
    assert r.passed and r.header == AUDIT_HEADER and r.checked
    assert not r.counterexamples


def test_audit_passes_for_J0():
    assert audit_recipe("J0", _small_corpus()).passed


def test_audit_refuses_uncertified_cells():
    point_to_arrow = CellShape("point-to-arrow", ("o",), ("o", "o", "h"), (0,),
                               lambda D: [(a,) for a in D.objects],
                               lambda D: [(*D.hmor[f], f) for f in D.hmor])
    with pytest.raises(UncertifiedShape):
        audit_recipe(generating_set("J0") + [point_to_arrow], _small_corpus())
    with pytest.raises(UncertifiedShape):
        audit_recipe(generating_set("J_tr")[3:], _small_corpus())
