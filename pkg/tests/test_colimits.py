import pytest

from dblcat.colimits import (attach_object, attach_square_presentation, congruence_closure,
                             count_functors_to, free_edge_extension,
                             identify_parallel_squares, quotient)
from dblcat.constructions import coproduct, one, shape
from dblcat.classifiers import property_check
from dblcat.core import check_axioms, check_functor, count_functors, is_isomorphic
from dblcat.errors import IncompatibleBoundary, NotParallel, OutOfTruncation

SQUARE = "(e:f,idsq:u)"


def parallel_pair():
    D = shape("ParSq")
    a, b = [x for x in D.squares if not D.is_identity_square(x)]
    return D, a, b


def test_closure_examples():
    D, a, b = parallel_pair()
    assert congruence_closure(D).is_discrete()
    assert congruence_closure(D, [(a, a)]).is_discrete()
    c = congruence_closure(D, [(a, b)])
    sizes = sorted(len(x) for x in c.classes())
    assert sizes == [1] * (len(D.squares) - 2) + [2]
    assert c.same(a, b) and set(c.class_of(a)) == {a, b}


def test_closure_rejects_non_parallel(HxV):
    with pytest.raises(NotParallel):
        congruence_closure(HxV, [(SQUARE, HxV.e["(f,id:0)"])])


def test_quotient_examples():
    D, a, b = parallel_pair()
    Q, F = quotient(D, congruence_closure(D))
    assert Q == D and check_functor(F) == []
    Q, F = identify_parallel_squares(D, a, b)
    assert is_isomorphic(Q, shape("HxV")) and check_functor(F) == []
    Q2, _ = quotient(Q, congruence_closure(Q, [(F.sq(a), F.sq(b))]))
    assert Q2 == Q
    Q, _ = identify_parallel_squares(shape("HxV"), SQUARE, SQUARE)
    assert Q == shape("HxV")


def test_identification_stays_in_its_summand():
    P, a, b = parallel_pair()
    D, names = coproduct(P, one())
    a0, b0 = names.squares[("s", 0, a)], names.squares[("s", 0, b)]
    c = congruence_closure(D, [(a0, b0)])
    merged = [x for x in c.classes() if len(x) > 1]
    assert merged == [(a0, b0)] or merged == [(b0, a0)]


def test_attach_object():
    D, inc = attach_object(shape("Empty"))
    assert is_isomorphic(D, one()) and check_functor(inc) == []
    D, _ = attach_object(one())
    assert len(D.objects) == 2 and all(D.is_h_identity(f) for f in D.hmor)
    D, inc = attach_object(shape("H2"))
    assert len(D.objects) == 3 and check_functor(inc) == []
    assert property_check(D, "cofibrant_object").holds


def test_free_edge_between_distinct_points():
    O2 = coproduct(one(), one())[0]
    A, B = O2.objects
    for k in (1, 2, 4):
        model, pres = free_edge_extension(O2, "h", A, B, k)
        assert is_isomorphic(model.as_double_category(), shape("H2"))
        assert pres.hmor == (("f", A, B),)
    model, _ = free_edge_extension(O2, "v", A, B, 2)
    assert is_isomorphic(model.as_double_category(), shape("V2"))


def test_free_loop_is_truncated():
    model, _ = free_edge_extension(one(), "h", "*", "*", 3)
    assert list(model.hmor) == ["id:*", "f", "f∘f", "f∘f∘f"]
    assert model.hcompose("f", "f∘f") == "f∘f∘f" and model.grade("f∘f∘f") == 3
    with pytest.raises(OutOfTruncation):
        model.hcompose("f∘f∘f", "f")


def test_free_edge_at_grade_zero():
    model, pres = free_edge_extension(one(), "h", "*", "*", 0)
    assert model.as_double_category() == one()
    assert pres.base == one() and pres.hmor == (("f", "*", "*"),)


def test_free_edge_picks_a_fresh_name():
    Sq2 = shape("Sq2")
    model, pres = free_edge_extension(Sq2, "h", "1", "0", 1)
    edge = pres.hmor[0][0]
    assert edge not in Sq2.hmor and edge in model.hmor
    # a loop through the new edge is not closed at grade 1
    with pytest.raises(OutOfTruncation):
        model.as_double_category()


def test_closed_extension_does_not_depend_on_k():
    D, _ = coproduct(shape("Sq2"), one())
    built = [free_edge_extension(D, "h", "1", "*", k)[0].as_double_category() for k in (1, 2, 3)]
    assert check_axioms(built[0]) == [] and built[0] == built[1] == built[2]


def test_free_edge_checks_endpoints():
    with pytest.raises(IncompatibleBoundary):
        free_edge_extension(one(), "h", "*", "nope", 1)


def test_square_presentations():
    HxV = shape("HxV")
    boundary = HxV.squares[SQUARE]
    fill = attach_square_presentation(shape("BoundaryHxV"), boundary)
    second = attach_square_presentation(HxV, boundary)
    for name in ("HxV", "Sq2", "ParSq", "One", "H2", "HSigmaI", "Sq2vop"):
        target = shape(name)
        assert count_functors_to(fill, target) == count_functors(HxV, target), name
        assert count_functors_to(second, target) == count_functors(shape("ParSq"), target), name
    with pytest.raises(IncompatibleBoundary):
        attach_square_presentation(shape("Empty"), boundary)
