"""2-categorical helpers: locally discrete 2-categories, (adjoint) equivalences, cores.

These work on any double category through its horizontal-globular squares,
so they apply equally to a TwoCategory and to the underlying horizontal
2-category of a double category.
"""
from __future__ import annotations

from typing import NamedTuple

from ..core import (DoubleCategory, TwoCategory, VERTICAL, as_two_category,
                    invert_square)


class AdjointEquivalenceData(NamedTuple):
    """f: A→B, g: B→A, eta: id_A ⇒ g∘f and eps: f∘g ⇒ id_B."""
    f: str
    g: str
    eta: str
    eps: str


class EquivalenceData(NamedTuple):
    g: str
    eta: str
    eps: str


def vertical_inverse(D: DoubleCategory, a):
    """Vertical inverse of a horizontal-globular square, memoised per category."""
    cache = D.memo("vertical_inverse", dict)
    if a not in cache:
        cache[a] = invert_square(VERTICAL, a, D) if D.is_h_globular(a) else None
    return cache[a]


def is_invertible_cell(D, a) -> bool:
    return vertical_inverse(D, a) is not None


def invertible_cells(D, f, g):
    return [a for a in D.globular(f, g) if is_invertible_cell(D, a)]


def is_isomorphic_1cells(D, f, g) -> bool:
    return bool(invertible_cells(D, f, g))


def triangle_identities(D, f, g, eta, eps) -> bool:
    ef, eg = D.e[f], D.e[g]
    first = D.sq_vcomp.get((D.sq_hcomp.get((eta, ef)), D.sq_hcomp.get((ef, eps))))
    second = D.sq_vcomp.get((D.sq_hcomp.get((eg, eta)), D.sq_hcomp.get((eps, eg))))
    return first == ef and second == eg


def enumerate_adjoint_equivalences(C: DoubleCategory, a, b) -> list:
    """All adjoint equivalence data from ``a`` to ``b`` in deterministic order."""
    out = []
    for f in C.hhom(a, b):
        for g in C.hhom(b, a):
            gf, fg = C.hcompose(f, g), C.hcompose(g, f)
            etas = invertible_cells(C, C.hid[a], gf)
            if not etas:
                continue
            for eps in invertible_cells(C, fg, C.hid[b]):
                for eta in etas:
                    if triangle_identities(C, f, g, eta, eps):
                        out.append(AdjointEquivalenceData(f, g, eta, eps))
    # group by (f, g, eta, eps) order for determinism
    out.sort(key=lambda d: (list(C.hmor).index(d.f), list(C.hmor).index(d.g),
                            list(C.squares).index(d.eta), list(C.squares).index(d.eps)))
    return out


def all_adjoint_equivalences(C: DoubleCategory) -> tuple:
    def build():
        return tuple(d for a in C.objects for b in C.objects
                     for d in enumerate_adjoint_equivalences(C, a, b))
    return C.memo("adjoint_equivalences", build)


def equivalence_data(C: DoubleCategory, f):
    """Some (g, eta, eps) exhibiting ``f`` as an equivalence, or None."""
    a, b = C.hmor[f]
    for g in C.hhom(b, a):
        etas = invertible_cells(C, C.hid[a], C.hcompose(f, g))
        if not etas:
            continue
        epss = invertible_cells(C, C.hcompose(g, f), C.hid[b])
        if epss:
            return EquivalenceData(g, etas[0], epss[0])
    return None


def equivalences(C: DoubleCategory) -> frozenset:
    """The horizontal morphisms of ``C`` that are equivalences."""
    return C.memo("equivalences",
                  lambda: frozenset(f for f in C.hmor if equivalence_data(C, f) is not None))


def promote_to_adjoint(C: DoubleCategory, f, data: EquivalenceData):
    """Adjoint equivalence data on ``f`` with the same inverse, found by search."""
    a, b = C.hmor[f]
    for d in enumerate_adjoint_equivalences(C, a, b):
        if d.f == f and d.g == data.g:
            return d
    for d in enumerate_adjoint_equivalences(C, a, b):
        if d.f == f:
            return d
    return None


def core_2gpd(C: DoubleCategory) -> TwoCategory:
    """Largest sub-2-category with equivalence 1-cells and invertible 2-cells."""
    current = as_two_category(C)
    while True:
        keep_h = {f for f in current.hmor if current.is_h_identity(f)} | set(equivalences(current))
        keep_sq = {a for a, b in current.squares.items()
                   if b.top in keep_h and b.bottom in keep_h and is_invertible_cell(current, a)}
        if keep_h == set(current.hmor) and keep_sq == set(current.squares):
            return current
        current = _restrict(current, keep_h, keep_sq)


def _restrict(C, keep_h, keep_sq) -> TwoCategory:
    return TwoCategory(
        objects=C.objects,
        hmor={f: v for f, v in C.hmor.items() if f in keep_h},
        vmor=dict(C.vmor),
        hcomp={k: v for k, v in C.hcomp.items() if k[0] in keep_h and k[1] in keep_h},
        vcomp=dict(C.vcomp),
        squares={a: b for a, b in C.squares.items() if a in keep_sq},
        sq_hcomp={k: v for k, v in C.sq_hcomp.items() if k[0] in keep_sq and k[1] in keep_sq},
        sq_vcomp={k: v for k, v in C.sq_vcomp.items() if k[0] in keep_sq and k[1] in keep_sq},
        hid=dict(C.hid), vid=dict(C.vid),
        e={f: a for f, a in C.e.items() if f in keep_h},
        idsq=dict(C.idsq),
    )
