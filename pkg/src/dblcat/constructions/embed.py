"""Double categories built from 2-categories: H, V, Sq, SqVop, Hsim and Vsim."""
from __future__ import annotations

from ..core import (DoubleCategory, DoubleFunctor, SquareBoundary, TwoCategory,
                    as_two_category, assemble, plain)
from .basic import transpose, transpose_functor, vop, vop_functor
from .twocat import AdjointEquivalenceData, all_adjoint_equivalences


class _Verticals:
    """A category of vertical arrows, each carrying a 1-cell of the base."""

    def __init__(self, cells, src, tgt, comp, ident, one_cell, label):
        self.cells, self.src, self.tgt = cells, src, tgt
        self.comp, self.ident = comp, ident
        self.one_cell = one_cell
        self.label = label


def _sq_like(C: TwoCategory, V: _Verticals):
    """Squares (t, b, l, r, α) with α a 2-cell r∘t ⇒ b∘l, where l, r act through V."""
    cell = V.one_cell
    squares = {}
    by_left = {}
    by_top = {}
    for t, (a, b) in C.hmor.items():
        for l in V.cells:
            if V.src[l] != a:
                continue
            for r in V.cells:
                if V.src[r] != b:
                    continue
                for bot in C.hhom(V.tgt[l], V.tgt[r]):
                    for alpha in C.globular(C.hcompose(t, cell(r)), C.hcompose(cell(l), bot)):
                        key = (t, bot, l, r, alpha)
                        squares[key] = SquareBoundary(t, bot, l, r)
                        by_left.setdefault(l, []).append(key)
                        by_top.setdefault(t, []).append(key)

    def hpaste(x, y):
        t, b, l, r, alpha = x
        t2, b2, _, r2, beta = y
        first = C.whisker_right(beta, t)
        second = C.whisker_left(b2, alpha)
        return (C.hcompose(t, t2), C.hcompose(b, b2), l, r2, C.vpaste(first, second))

    def vpaste(x, y):
        t, b, l, r, alpha = x
        _, b2, l2, r2, gamma = y
        first = C.whisker_left(cell(r2), alpha)
        second = C.whisker_right(gamma, cell(l))
        return (t, b2, V.comp[(l, l2)], V.comp[(r, r2)], C.vpaste(first, second))

    sq_hcomp = {(x, y): hpaste(x, y) for x in squares for y in by_left.get(x[3], ())}
    sq_vcomp = {(x, y): vpaste(x, y) for x in squares for y in by_top.get(x[1], ())}
    e = {f: (f, f, V.ident[a], V.ident[b], C.e[f]) for f, (a, b) in C.hmor.items()}
    idsq = {u: (C.hid[V.src[u]], C.hid[V.tgt[u]], u, u, C.e[cell(u)]) for u in V.cells}

    hlabel = {f: f for f in C.hmor}

    def label(key):
        if isinstance(key, tuple) and len(key) == 5:
            t, b, l, r, alpha = key
            base = f"[{hlabel[t]}|{hlabel[b]}|{V.label(l)}|{V.label(r)}"
            bnd = C.squares[alpha]
            trivial = C.e.get(bnd.top) == alpha
            return base + ("]" if trivial else f":{alpha}]")
        if key in V.cells:
            return V.label(key)
        return str(key)

    return assemble(
        objects=C.objects, hmor=dict(C.hmor),
        vmor={u: (V.src[u], V.tgt[u]) for u in V.cells},
        hcomp=dict(C.hcomp), vcomp=dict(V.comp), squares=squares,
        sq_hcomp=sq_hcomp, sq_vcomp=sq_vcomp,
        hid=dict(C.hid), vid=dict(V.ident), e=e, idsq=idsq, label=label)


def _sq_with_names(C: TwoCategory):
    def build():
        V = _Verticals(
            cells=list(C.hmor), src={f: s for f, (s, _) in C.hmor.items()},
            tgt={f: t for f, (_, t) in C.hmor.items()}, comp=dict(C.hcomp),
            ident=dict(C.hid), one_cell=lambda f: f, label=str)
        return _sq_like(C, V)
    return C.memo("Sq", build)


def square_category(C: TwoCategory) -> DoubleCategory:
    """Sq C: horizontal and vertical morphisms are the 1-cells of ``C`` and a
    square with boundary (f, f', u, v) is a 2-cell v∘f ⇒ f'∘u."""
    return _sq_with_names(as_two_category(C))[0]


def sq_square_name(C: TwoCategory, key) -> str:
    """Name in Sq C of the square keyed (top, bottom, left, right, 2-cell)."""
    return _sq_with_names(as_two_category(C))[1].squares[key]


def compose_adjoint_equivalences(C: TwoCategory, first, second) -> AdjointEquivalenceData:
    """``second ∘ first`` with the standard pasted unit and counit."""
    f, g, eta, eps = first
    f2, g2, eta2, eps2 = second
    unit = C.vpaste(eta, C.whisker_left(g, C.whisker_right(eta2, f)))
    counit = C.vpaste(C.whisker_left(f2, C.whisker_right(eps, g2)), eps2)
    return AdjointEquivalenceData(C.hcompose(f, f2), C.hcompose(g2, g), unit, counit)


def identity_adjoint_equivalence(C: TwoCategory, a) -> AdjointEquivalenceData:
    i = C.hid[a]
    return AdjointEquivalenceData(i, i, C.e[i], C.e[i])


def _hsim_with_names(C: TwoCategory):
    def build():
        data = list(all_adjoint_equivalences(C))
        known = set(data)
        comp = {}
        for d in data:
            for d2 in data:
                if C.htgt(d.f) != C.hsrc(d2.f):
                    continue
                c = compose_adjoint_equivalences(C, d, d2)
                if c not in known:
                    raise AssertionError(f"composite {c} escaped the enumeration")
                comp[(d, d2)] = c
        counts = {}
        for d in data:
            counts[(d.f, d.g)] = counts.get((d.f, d.g), 0) + 1

        def label(d):
            if counts[(d.f, d.g)] == 1:
                return f"{d.f}-|{d.g}"
            return f"{d.f}-|{d.g}[{d.eta},{d.eps}]"

        V = _Verticals(
            cells=data, src={d: C.hsrc(d.f) for d in data}, tgt={d: C.htgt(d.f) for d in data},
            comp=comp, ident={a: identity_adjoint_equivalence(C, a) for a in C.objects},
            one_cell=lambda d: d.f, label=label)
        return _sq_like(C, V)
    return C.memo("Hsim", build)


def homotopical_embedding(C: TwoCategory) -> DoubleCategory:
    """Vertical morphisms are the adjoint equivalence data of ``C``."""
    return _hsim_with_names(as_two_category(C))[0]


def embed(kind: str, C) -> DoubleCategory:
    """One of H, V, Sq, SqVop, Hsim, Vsim applied to a 2-category."""
    C = as_two_category(C)
    if kind == "H":
        return plain(C)
    if kind == "V":
        return transpose(plain(C))
    if kind == "Sq":
        return square_category(C)
    if kind == "SqVop":
        return vop(square_category(C))
    if kind == "Hsim":
        return homotopical_embedding(C)
    if kind == "Vsim":
        return transpose(homotopical_embedding(C))
    raise ValueError(f"unknown embedding {kind!r}")


def _sq_like_functor(G: DoubleFunctor, src_build, tgt_build, vmap):
    S, s_names = src_build(as_two_category(G.source))
    T, t_names = tgt_build(as_two_category(G.target))
    t_vname = t_names.vmor
    on_vmor = {name: t_vname[vmap(k)] for k, name in s_names.vmor.items()}
    on_squares = {}
    for (t, b, l, r, alpha), name in s_names.squares.items():
        key = (G.h(t), G.h(b), vmap(l), vmap(r), G.sq(alpha))
        on_squares[name] = t_names.squares[key]
    return DoubleFunctor(S, T, dict(G.on_objects), dict(G.on_hmor), on_vmor, on_squares)


def embed_functor(kind: str, G: DoubleFunctor) -> DoubleFunctor:
    """The image of a 2-functor under ``embed(kind, -)``."""
    if kind == "H":
        return DoubleFunctor(plain(G.source), plain(G.target), dict(G.on_objects),
                             dict(G.on_hmor), dict(G.on_vmor), dict(G.on_squares))
    if kind == "V":
        return transpose_functor(embed_functor("H", G))
    if kind == "Sq":
        return _sq_like_functor(G, _sq_with_names, _sq_with_names, G.h)
    if kind == "SqVop":
        return vop_functor(embed_functor("Sq", G))
    if kind == "Hsim":
        def vmap(d):
            return AdjointEquivalenceData(G.h(d.f), G.h(d.g), G.sq(d.eta), G.sq(d.eps))
        return _sq_like_functor(G, _hsim_with_names, _hsim_with_names, vmap)
    if kind == "Vsim":
        return transpose_functor(embed_functor("Hsim", G))
    raise ValueError(f"unknown embedding {kind!r}")
