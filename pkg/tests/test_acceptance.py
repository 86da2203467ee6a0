"""Acceptance suite: one PASS/FAIL line per criterion, each within its time budget.

Run with ``pytest -s tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import time

import pytest

from dblcat.classifiers import audit_recipe, classify, structural_fibrancy
from dblcat.colimits import (congruence_closure,
                             identify_parallel_squares, induced_quotient_functor,
                             quotient)
from dblcat.constructions import (SHAPE_NAMES, all_adjoint_equivalences,
                                  companion_2cat, coproduct_functor, embed,
                                  one, shape, sq_unit, underlying,
                                  vertical_endpoints)
from dblcat.core import (DoubleFunctor, check_axioms, companion_comparisons,
                         companions_of, invert_square)
from dblcat.equivalences import (four_tuple_witness, is_biequivalence,
                                 is_equifibration, is_gregarious_equivalence,
                                 is_trivial_fibration)
from dblcat.errors import DblCatError
from dblcat.io import load_value
from dblcat.io.corpus import build_corpus, corpus_entries
from dblcat.lifting import (find_gregarious_adjoint_equivalence,
                            generating_set, is_naive_fibrant, solve_lifting)

from fixtures import SEEDED_VIOLATIONS

PROFILE = "standard"


def _categories():
    return [e for e in corpus_entries(PROFILE) if not e.is_functor]


def _functors():
    return [e for e in corpus_entries(PROFILE) if e.is_functor]


@pytest.fixture(scope="module", autouse=True)
def _warm_corpus():
    corpus_entries(PROFILE)


def _verdict(n, title, failures, started, budget):
    elapsed = time.perf_counter() - started
    ok = not failures and elapsed < budget
    status = "PASS" if ok else "FAIL"
    note = f"{len(failures)} failure(s)" if failures else "no failures"
    print(f"\n{status} criterion {n}: {title} ({note}, {elapsed:.2f}s of {budget:g}s)")
    for f in failures[:5]:
        print(f"    {f}")
    assert not failures, failures[:5]
    assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"


def test_criterion_01_axiom_suite():
    t0 = time.perf_counter()
    failures = []
    for n in SHAPE_NAMES:
        problems = check_axioms(shape(n))
        if problems:
            failures.append((n, problems[0].law))
    for doc in build_corpus(PROFILE):
        try:
            load_value(doc)
        except DblCatError as exc:
            failures.append((doc.payload.get("label"), repr(exc)))
    for name, (build, tag) in SEEDED_VIOLATIONS.items():
        tags = {p.law for p in build()}
        if tag not in tags:
            failures.append((name, tag, sorted(tags)))
    _verdict(1, "catalog and corpus validate; seeded violations carry their tags", failures, t0, 1)


def test_criterion_02_trivial_fibration_oracle():
    t0 = time.perf_counter()
    shapes = generating_set("I")
    functors = _functors()
    failures = []
    for e in functors:
        direct = is_trivial_fibration(e.value).verdict
        lifted = all(solve_lifting(e.value, s).holds for s in shapes)
        if direct != lifted:
            failures.append((e.name, direct, lifted))
    if len(functors) < 30:
        failures.append(("corpus has fewer than 30 functors", len(functors)))
    _verdict(2, f"trivial fibration agrees with lifting over I on {len(functors)} functors",
             failures, t0, 30)


def test_criterion_03_four_tuple_oracle():
    t0 = time.perf_counter()
    failures = []
    functors = _functors()
    for e in functors:
        direct = is_gregarious_equivalence(e.value).verdict
        tuple_route = four_tuple_witness(e.value).verdict
        if direct != tuple_route:
            failures.append((e.name, direct, tuple_route))
    _verdict(3, f"gregarious equivalence agrees with the four-tuple on {len(functors)} functors",
             failures, t0, 300)


def test_criterion_04_sq_fibrancy():
    t0 = time.perf_counter()
    failures = []
    twos = [e for e in _categories() if e.is_two_category]
    for e in twos:
        S = embed("Sq", e.value)
        if not classify(S).tr:
            failures.append((e.name, "Sq not tr-fibrant"))
        unit = sq_unit(e.value)
        if unit.target != companion_2cat(S):
            failures.append((e.name, "unit does not land in the companion 2-category"))
        r = is_biequivalence(unit)
        if not r.verdict:
            failures.append((e.name, "unit", r.first))
    _verdict(4, f"Sq of {len(twos)} 2-categories is tr-fibrant and its unit is a biequivalence",
             failures, t0, 30)


def test_criterion_05_whi_cross_check():
    t0 = time.perf_counter()
    failures = []
    cats = _categories()
    for e in cats:
        D = e.value
        lifted = is_naive_fibrant(D, "J_whi").fibrant
        structural = structural_fibrancy(D, "whi").holds
        equi = is_equifibration(vertical_endpoints(D)).verdict
        if not lifted == structural == equi:
            failures.append((e.name, lifted, structural, equi))
    _verdict(5, f"whi by lifting, companions and equifibration agree on {len(cats)} categories",
             failures, t0, 120)


LATTICE = (
    ("tr_adj", ("tr_ladj",)),
    ("tr_ladj", ("tr", "h_eqp")),
    ("h_eqp", ("whi",)),
    ("tr", ("whi", "wvi")),
    ("ctr", ("empty_or_ctr",)),
)


def test_criterion_06_fibrancy_lattice():
    t0 = time.perf_counter()
    failures = []
    for e in _categories():
        t = classify(e.value)
        if not t.greg:
            failures.append((e.name, "greg"))
        for stronger, weaker in LATTICE:
            for w in weaker:
                if getattr(t, stronger) and not getattr(t, w):
                    failures.append((e.name, stronger, w))
    _verdict(6, "fibrancy inclusions hold across the corpus", failures, t0, 60)


def _parallel_pairs(D):
    seen = set()
    for a, b in D.squares.items():
        for c in D.with_boundary(b):
            if a < c and (a, c) not in seen:
                seen.add((a, c))
                yield a, c


def test_criterion_07_pushout_stability():
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for e in _functors():
        P = e.value
        if not is_trivial_fibration(P).verdict:
            continue
        induced = coproduct_functor(P, DoubleFunctor.identity(one()))
        checked += 1
        if not is_trivial_fibration(induced).verdict:
            failures.append((e.name, "attach-object"))
        for a, b in _parallel_pairs(P.source):
            _, qs = identify_parallel_squares(P.source, a, b)
            c = congruence_closure(P.target, [(P.sq(a), P.sq(b))])
            _, qt = quotient(P.target, c)
            checked += 1
            if not is_trivial_fibration(induced_quotient_functor(P, qs, qt)).verdict:
                failures.append((e.name, "identify", a, b))
    if not checked:
        failures.append("no trivial fibration in the corpus")
    _verdict(7, f"trivial fibrations survive {checked} pushouts", failures, t0, 60)


def test_criterion_08_companion_uniqueness():
    t0 = time.perf_counter()
    failures = []
    pairs = 0
    for e in _categories():
        D = e.value
        for f in D.hmor:
            ws = companions_of(D, f)
            if len(ws) < 2:
                continue
            for P in ws:
                for Q in ws:
                    pairs += 1
                    found = companion_comparisons(D, P, Q)
                    if len(found) != 1 or invert_square("h", found[0], D) is None:
                        failures.append((e.name, P, Q, found))
    _verdict(8, f"{pairs} pairs of companions linked by a unique invertible comparison",
             failures, t0, 60)


def test_criterion_09_adjoint_equivalence_lifting():
    t0 = time.perf_counter()
    failures = []
    instances = 0
    for e in _categories():
        D = e.value
        for d in all_adjoint_equivalences(underlying("H", D)):
            if not (companions_of(D, d.f) and companions_of(D, d.g)):
                continue
            instances += 1
            found = [w for w in find_gregarious_adjoint_equivalence(D, D.hsrc(d.f))
                     if (w.P.f, w.Q.f, w.eta, w.eps) == (d.f, d.g, d.eta, d.eps)]
            if not found:
                failures.append((e.name, d))
    _verdict(9, f"{instances} adjoint equivalences with companions extend to gregarious ones",
             failures, t0, 60)


def test_criterion_10_endpoints_and_groupoids():
    t0 = time.perf_counter()
    failures = []
    t_one = classify(shape("One"))
    failures += [("One", k) for k, r in t_one.items() if not r.fibrant]
    t_empty = classify(shape("Empty"))
    failures += [("Empty", k) for k, r in t_empty.items() if r.fibrant == (k == "ctr")]
    for e in _categories():
        lifted = is_naive_fibrant(e.value, "J_tr_gpd").fibrant
        structural = structural_fibrancy(e.value, "tr_gpd").holds
        if lifted != structural:
            failures.append((e.name, lifted, structural))
    _verdict(10, "One and Empty endpoints; tr_gpd lifting matches the structural check",
             failures, t0, 60)


def test_criterion_11_recipe_audit():
    t0 = time.perf_counter()
    failures = []
    corpus = [e.value for e in corpus_entries(PROFILE)]
    for name in ("J_tr", "J_tr_gpd"):
        r = audit_recipe(name, corpus)
        if not r.passed:
            failures += [(name, *c) for c in r.counterexamples]
        if not r.checked:
            failures.append((name, "nothing checked"))
    _verdict(11, "recipe audit passes for J_tr and J_tr_gpd", failures, t0, 300)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
