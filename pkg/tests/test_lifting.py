import pytest

from dblcat.constructions import coproduct, embed, one, seed, shape, terminal_functor
from dblcat.core import DoubleFunctor, count_functors, functor_from_maps, identity_companion
from dblcat.errors import BoundExceeded, UnknownSet
from dblcat.lifting import (SET_NAMES, cell_shape, enumerate_instances,
                            find_companionship, find_gregarious_adjoint_equivalence,
                            generating_set, is_naive_fibrant, lifts_against_all, solve_lifting)


def _names(setname):
    return [s.name for s in generating_set(setname)]


def test_generating_set_sizes():
    assert len(generating_set("I")) == 5
    assert len(generating_set("J0")) == 3
    extra = [n for n in _names("J_tr_gpd") if n not in _names("J_tr")]
    assert set(_names("J_tr")) <= set(_names("J_tr_gpd")) and len(extra) == 3


@pytest.mark.parametrize("name", [n for n in SET_NAMES if n != "I"])
def test_every_fibration_set_contains_J0(name):
    assert set(_names("J0")) <= set(_names(name))


def test_unknown_set():
    with pytest.raises(UnknownSet):
        generating_set("J_nope")


def test_instance_examples():
    Sq2 = shape("Sq2")
    witnesses = enumerate_instances(cell_shape("J.H2-Sq2"), "cod", Sq2)
    assert len(witnesses) == 3
    assert len(enumerate_instances(cell_shape("I.attach-hmor"), "dom", shape("H2"))) == 4
    assert enumerate_instances(cell_shape("J0.unit-SqEadj"), "cod", one()) == (
        ("*", "*", "id:*", "id:*", "box:*", "box:*", "id:*", "id:*", "box:*", "box:*",
         "box:*", "box:*"),)


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        enumerate_instances(cell_shape("I.attach-hmor"), "dom", shape("HxV"), bound=3)


# finite domain or codomain of a cell, as a catalog double category
FINITE_SIDES = [
    ("I.attach-object", "cod", lambda: one()),
    ("I.attach-hmor", "dom", lambda: coproduct(one(), one())[0]),
    ("I.attach-hmor", "cod", lambda: shape("H2")),
    ("I.attach-vmor", "cod", lambda: shape("V2")),
    ("I.square-filler", "dom", lambda: shape("BoundaryHxV")),
    ("I.square-filler", "cod", lambda: shape("HxV")),
    ("I.parallel-squares", "dom", lambda: shape("ParSq")),
    ("J.H2-Sq2", "cod", lambda: shape("Sq2")),
    ("J.H2-Sq2vop", "cod", lambda: shape("Sq2vop")),
    ("J0.H2-HSigmaI", "cod", lambda: shape("HSigmaI")),
    ("J.HSigma2-HSigmaI", "dom", lambda: shape("HSigma2")),
]


@pytest.mark.parametrize("cell,side,source", FINITE_SIDES)
def test_instances_match_functor_counts(cell, side, source, small_categories):
    for e in small_categories[:40]:
        D = e.value
        got = len(enumerate_instances(cell_shape(cell), side, D))
        assert got == count_functors(source(), D), (cell, side, e.name)


@pytest.mark.parametrize("setname", SET_NAMES)
def test_identity_lifts(setname):
    for name in ("HxV", "Sq2", "HSigmaI"):
        assert lifts_against_all(DoubleFunctor.identity(shape(name)), generating_set(setname)) is None


def test_collapse_lifts_against_I():
    F = functor_from_maps(shape("HSigmaI"), shape("H2"), {"0": "0", "1": "1"},
                          {"f": "f", "g": "f"}, {}, {"alpha": "e:f", "alpha^-1": "e:f"})
    assert all(solve_lifting(F, s).holds for s in generating_set("I"))


def test_arrow_to_point_fails_arrow_lifting():
    # nothing upstairs runs from 1 back to 0, yet the point has its identity
    F = terminal_functor(shape("H2"))
    r = solve_lifting(F, cell_shape("I.attach-hmor"))
    assert not r.holds
    assert r.counterexample[0] == ("1", "0")
    assert solve_lifting(F, cell_shape("I.square-filler")).holds
    assert solve_lifting(F, cell_shape("I.parallel-squares")).holds


def test_every_category_is_gregarious_fibrant(small_categories):
    for e in small_categories:
        F = terminal_functor(e.value)
        for s in generating_set("J0"):
            assert solve_lifting(F, s).holds, (e.name, s.name)


SUBSETS = [(a, b) for a in SET_NAMES for b in SET_NAMES
           if a != b and set(_names(a)) <= set(_names(b))]


def test_fibrancy_is_monotone(small_categories):
    assert SUBSETS
    for e in small_categories:
        verdict = {n: is_naive_fibrant(e.value, n).fibrant for n in SET_NAMES}
        for small, big in SUBSETS:
            assert not verdict[big] or verdict[small], (e.name, small, big)


def test_naive_fibrancy_examples():
    assert is_naive_fibrant(shape("Sq2"), "J_tr").fibrant
    r = is_naive_fibrant(shape("H2"), "J_tr")
    assert not r.fibrant and r.shape == "J.H2-Sq2" and "f" in r.witness
    assert not is_naive_fibrant(shape("Empty"), "J_ctr").fibrant
    assert is_naive_fibrant(shape("Empty"), "J_empty_or_ctr").fibrant


def test_find_companionship():
    assert len(find_companionship("companion", shape("Sq2"), "f")) == 1
    assert find_companionship("companion", shape("H2"), "f") == []
    assert len(find_companionship("conjoint", shape("Sq2vop"), "f")) == 1


def test_find_gregarious_adjoint_equivalence():
    One = one()
    found = find_gregarious_adjoint_equivalence(One, "*")
    assert len(found) == 1 and found[0].P == identity_companion(One, "*")
    D = embed("Sq", seed("I"))
    assert any(w.P.f == "f" for w in find_gregarious_adjoint_equivalence(D, "0"))
    H2 = shape("H2")
    found = find_gregarious_adjoint_equivalence(H2, "0")
    assert [w.P for w in found] == [identity_companion(H2, "0")]
    P = found[0].P
    assert find_gregarious_adjoint_equivalence(H2, "0", constraint=P) == found
