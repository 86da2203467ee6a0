"""Property tests over the small corpus, driven by hypothesis."""
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dblcat.colimits import congruence_closure, quotient
from dblcat.core import check_functor
from dblcat.equivalences import is_gregarious_equivalence, is_trivial_fibration
from dblcat.io import load_value, parse_document, serialize_document
from dblcat.io.corpus import build_corpus, composable_triples, corpus_entries

CATEGORIES = [e.value for e in corpus_entries("small") if not e.is_functor and e.value.squares]
FUNCTORS = [e.value for e in corpus_entries("small") if e.is_functor]
TRIPLES = composable_triples(FUNCTORS)
DOCUMENTS = build_corpus("small")

SETTINGS = settings(max_examples=150, deadline=None, derandomize=True,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def square_grids(draw):
    """A category and squares a, b, c, d with a|b, c|d, a/c and b/d all defined."""
    D = draw(st.sampled_from(CATEGORIES))
    a = draw(st.sampled_from(list(D.squares)))
    right = [b for b in D.squares if D.squares[b].left == D.squares[a].right]
    below = [c for c in D.squares if D.squares[c].top == D.squares[a].bottom]
    b = draw(st.sampled_from(right))
    c = draw(st.sampled_from(below))
    corner = [d for d in D.squares
              if D.squares[d].top == D.squares[b].bottom and D.squares[d].left == D.squares[c].right]
    d = draw(st.sampled_from(corner)) if corner else None
    return D, a, b, c, d


@SETTINGS
@given(square_grids())
def test_interchange(grid):
    D, a, b, c, d = grid
    if d is None:
        return
    lhs = D.vpaste(D.hpaste(a, b), D.hpaste(c, d))
    rhs = D.hpaste(D.vpaste(a, c), D.vpaste(b, d))
    assert lhs == rhs


@SETTINGS
@given(square_grids())
def test_boundaries_compose(grid):
    D, a, b, c, _ = grid
    ab, ac = D.squares[D.hpaste(a, b)], D.squares[D.vpaste(a, c)]
    A, B, C = D.squares[a], D.squares[b], D.squares[c]
    assert (ab.top, ab.bottom, ab.left, ab.right) == (
        D.hcompose(A.top, B.top), D.hcompose(A.bottom, B.bottom), A.left, B.right)
    assert (ac.top, ac.bottom, ac.left, ac.right) == (
        A.top, C.bottom, D.vcompose(A.left, C.left), D.vcompose(A.right, C.right))


@st.composite
def parallel_pairs(draw):
    D = draw(st.sampled_from(CATEGORIES))
    names = list(D.squares)
    pairs = []
    for _ in range(draw(st.integers(0, 3))):
        a = draw(st.sampled_from(names))
        pairs.append((a, draw(st.sampled_from(list(D.with_boundary(D.squares[a]))))))
    return D, pairs


@SETTINGS
@given(parallel_pairs())
def test_congruence_is_closed_and_idempotent(data):
    D, pairs = data
    c = congruence_closure(D, pairs)
    for cls in c.classes():
        assert len({D.squares[x] for x in cls}) == 1
    for table in (D.sq_hcomp, D.sq_vcomp):
        for (a, b), ab in table.items():
            for (a2, b2), ab2 in table.items():
                if c.same(a, a2) and c.same(b, b2):
                    assert c.same(ab, ab2)
    again = congruence_closure(D, [(x, c.rep[x]) for x in D.squares])
    assert again.rep == c.rep
    Q, F = quotient(D, c)
    assert check_functor(F) == []
    Q2, _ = quotient(Q, congruence_closure(Q, [(F.sq(a), F.sq(b)) for a, b in pairs]))
    assert Q2 == Q


@SETTINGS
@given(st.sampled_from(DOCUMENTS))
def test_document_round_trip(doc):
    text = serialize_document(doc)
    assert serialize_document(parse_document(text)) == text
    value = load_value(parse_document(text))
    again = load_value(parse_document(serialize_document(value)))
    if hasattr(value, "on_squares"):
        assert again.on_squares == value.on_squares and again.source == value.source
    else:
        assert again == value


@SETTINGS
@given(st.sampled_from(FUNCTORS))
def test_trivial_fibrations_are_gregarious_equivalences(F):
    if is_trivial_fibration(F).verdict:
        assert is_gregarious_equivalence(F).verdict


@SETTINGS
@given(st.sampled_from(TRIPLES))
def test_two_out_of_six(triple):
    F, G, H = triple
    if not (is_gregarious_equivalence(F.then(G)).verdict
            and is_gregarious_equivalence(G.then(H)).verdict):
        return
    for X in (F, G, H, F.then(G).then(H)):
        assert is_gregarious_equivalence(X).verdict


@SETTINGS
@given(st.sampled_from(TRIPLES))
def test_composites_are_functors(triple):
    F, G, H = triple
    assert check_functor(F.then(G).then(H)) == []
