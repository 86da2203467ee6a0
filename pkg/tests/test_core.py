import pytest

from dblcat.constructions import SHAPE_NAMES, shape
from dblcat.core import (DoubleFunctor, check_axioms, check_functor, compose_squares,
                         functor_from_maps, invert_square, paste_grid,
                         squares_with_boundary, to_document, validate_double_category,
                         validate_double_functor)
from dblcat.errors import (AxiomViolation, FunctorValidationError, IncompatibleBoundary,
                           MalformedDocument, NotComposable, NotGlobular, PreservationViolation,
                           RaggedGrid, ValidationError)

from fixtures import SEEDED_VIOLATIONS, broken_interchange

SQUARE = "(e:f,idsq:u)"


@pytest.mark.parametrize("name", SHAPE_NAMES)
def test_catalog_shapes_satisfy_axioms(name):
    assert check_axioms(shape(name)) == []


def test_walking_square_document_validates(HxV):
    D = validate_double_category(to_document(HxV))
    assert len(D.objects) == 4
    assert [a for a in D.squares if not D.is_identity_square(a)] == [SQUARE]


def test_empty_document_is_valid():
    D = validate_double_category({})
    assert not D.objects
    assert not D.squares and not D.hmor and not D.vmor


@pytest.mark.parametrize("name", sorted(SEEDED_VIOLATIONS))
def test_seeded_violation_reports_its_law(name):
    build, law = SEEDED_VIOLATIONS[name]
    assert law in {v.law for v in build()}


def test_validator_raises_with_witness():
    with pytest.raises(ValidationError) as exc:
        validate_double_category(broken_interchange())
    interchange = [v for v in exc.value.violations if v.law == "interchange"]
    assert interchange and len(interchange[0].witness) == 4
    assert isinstance(exc.value, AxiomViolation)


def test_dangling_identifier_is_malformed():
    doc = to_document(shape("H2"))
    doc["hcomp"].append(["f", "nope", "f"])
    with pytest.raises((MalformedDocument, ValidationError)):
        validate_double_category(doc)


def test_identity_functor_is_valid():
    H2 = shape("H2")
    assert check_functor(DoubleFunctor.identity(H2)) == []


def test_collapse_functor_is_valid():
    F = functor_from_maps(shape("HSigmaI"), shape("H2"), {"0": "0", "1": "1"},
                          {"f": "f", "g": "f"}, {}, {"alpha": "e:f", "alpha^-1": "e:f"})
    assert check_functor(F) == []


def test_arrow_to_identity_breaks_preservation():
    H2 = shape("H2")
    F = functor_from_maps(H2, H2, {"0": "0", "1": "1"}, {"f": "id:0"})
    problems = check_functor(F)
    assert problems and all(isinstance(p, PreservationViolation) for p in problems)


def test_functor_document_validation_raises():
    H2 = shape("H2")
    doc = {"objects": {"0": "0", "1": "1"}, "hmor": {"f": "id:0"}}
    with pytest.raises((FunctorValidationError, MalformedDocument)):
        validate_double_functor(doc, H2, H2)


def test_squares_with_boundary(HxV):
    b = HxV.squares[SQUARE]
    assert squares_with_boundary(HxV, b) == (SQUARE,)
    H2 = shape("H2")
    assert squares_with_boundary(H2, ("f", "f", "id:0", "id:1")) == ("e:f",)
    par = shape("ParSq")
    pair = [a for a in par.squares if not par.is_identity_square(a)]
    assert len(pair) == 2
    assert set(squares_with_boundary(par, par.squares[pair[0]])) == set(pair)


def test_incompatible_boundary_raises():
    with pytest.raises(IncompatibleBoundary):
        squares_with_boundary(shape("H2"), ("f", "f", "id:1", "id:1"))


def test_identity_squares_compose():
    D = shape("HxV")
    f0, u0 = "(f,id:0)", "(id:0,u)"
    assert compose_squares("h", D.e[D.hid["(0,0)"]], D.e[f0], D) == D.e[f0]
    assert compose_squares("v", D.idsq[u0], D.idsq[D.vid["(0,1)"]], D) == D.idsq[u0]


def test_mismatched_paste_raises(HxV):
    with pytest.raises(NotComposable):
        compose_squares("h", SQUARE, SQUARE, HxV)


def test_paste_grid(HxV):
    assert paste_grid(HxV, [[SQUARE]]) == SQUARE
    e = HxV.e["(f,id:0)"]
    box = HxV.e[HxV.hid["(0,0)"]]
    assert paste_grid(HxV, [[box, e], [box, e]]) == e
    top = HxV.e["(f,id:0)"]
    assert paste_grid(HxV, [[top], [SQUARE]]) == HxV.sq_vcomp[(top, SQUARE)]
    assert paste_grid(HxV, [[top], [SQUARE]], rows_first=False) == SQUARE


def test_ragged_grid_raises(HxV):
    with pytest.raises(RaggedGrid):
        paste_grid(HxV, [[SQUARE], []])


def test_invert_square():
    H2 = shape("H2")
    assert invert_square("v", "e:f", H2) == "e:f"
    assert invert_square("v", "alpha", shape("HSigmaI")) == "alpha^-1"
    assert invert_square("v", "alpha", shape("HSigma2")) is None
    with pytest.raises(NotGlobular):
        invert_square("v", SQUARE, shape("HxV"))
