"""The strict internal hom [X, A] for finite X.

Objects are double functors X → A, horizontal morphisms are horizontal
transformations, vertical morphisms are vertical transformations and squares
are modifications.  A horizontal transformation τ: F ⇒ G has a horizontal
component τ_a: Fa → Ga per object and a square τ_u with boundary
(τ_a, τ_a', Fu, Gu) per vertical u: a → a', subject to

* Gf∘τ_a = τ_b∘Ff for every horizontal f: a → b,
* τ_{v∘u} = τ_u / τ_v and τ_{id_a} = e(τ_a),
* Fα | τ_v = τ_u | Gα for every square α with left u and right v.

Vertical transformations are the transposed notion.  A modification μ with
boundary (τ, σ, ρ, ρ') has a square μ_a with boundary (τ_a, σ_a, ρ_a, ρ'_a)
per object, such that ρ_f | μ_b = μ_a | ρ'_f for every horizontal f: a → b
and τ_u / μ_a' = μ_a / σ_u for every vertical u: a → a'.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from ..core import (DoubleCategory, DoubleFunctor, SquareBoundary, TwoCategory,
                    as_two_category, assemble, enumerate_functors)
from .basic import product, underlying


class Transformation(NamedTuple):
    source: int                 # index of the source functor
    target: int
    components: tuple           # per object of X, in order
    cells: tuple                # per transverse morphism of X, in order


class Modification(NamedTuple):
    top: int
    bottom: int
    left: int
    right: int
    components: tuple           # per object of X


class _Direction:
    """The horizontal (``along=True``) or vertical reading of the definitions."""

    def __init__(self, X: DoubleCategory, A: DoubleCategory, along_h: bool):
        self.h = along_h
        if along_h:
            self.x_mor, self.x_trans = X.hmor, X.vmor
            self.x_trans_comp = X.vcomp
            self.x_trans_id = X.vid
            self.a_hom, self.a_comp = A.hhom, A.hcomp
            self.a_paste_same, self.a_paste_trans = A.sq_hcomp, A.sq_vcomp
            self.a_unit = A.e
        else:
            self.x_mor, self.x_trans = X.vmor, X.hmor
            self.x_trans_comp = X.hcomp
            self.x_trans_id = X.hid
            self.a_hom, self.a_comp = A.vhom, A.vcomp
            self.a_paste_same, self.a_paste_trans = A.sq_vcomp, A.sq_hcomp
            self.a_unit = A.idsq
        self.X, self.A = X, A

    def along(self, F: DoubleFunctor, m):
        return F.h(m) if self.h else F.v(m)

    def trans(self, F: DoubleFunctor, m):
        return F.v(m) if self.h else F.h(m)

    def cell_boundary(self, c_src, c_tgt, Fm, Gm):
        if self.h:
            return (c_src, c_tgt, Fm, Gm)
        return (Fm, Gm, c_src, c_tgt)

    def trans_sides(self, b: SquareBoundary):
        return (b.left, b.right) if self.h else (b.top, b.bottom)


def _transformations(X, A, functors, along_h: bool) -> list:
    d = _Direction(X, A, along_h)
    objects = list(X.objects)
    trans = list(d.x_trans)
    free_trans = [m for m in trans if d.x_trans_id.get(d.x_trans[m][0]) != m]
    out = []

    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            comp_choices = [d.a_hom(F.obj(a), G.obj(a)) for a in objects]

            def comps(k, acc):
                if k == len(objects):
                    yield tuple(acc)
                    return
                for c in comp_choices[k]:
                    acc.append(c)
                    yield from comps(k + 1, acc)
                    acc.pop()

            for comp in comps(0, []):
                comp_of = dict(zip(objects, comp))
                if not all(d.a_comp.get((d.along(F, m), comp_of[t]))
                           == d.a_comp.get((comp_of[s], d.along(G, m)))
                           for m, (s, t) in d.x_mor.items()):
                    continue
                for cells in _fill_cells(d, F, G, comp_of, free_trans):
                    full = []
                    for m in trans:
                        if m in cells:
                            full.append(cells[m])
                        else:
                            full.append(d.a_unit[comp_of[d.x_trans[m][0]]])
                    out.append(Transformation(i, j, comp, tuple(full)))
    return out


def _fill_cells(d: _Direction, F, G, comp_of, free_trans):
    """Backtrack over the transverse cells, checking each law once it is decidable."""
    X, A = d.X, d.A
    assigned = {}

    def cell(m):
        if m in assigned:
            return assigned[m]
        s = d.x_trans[m][0]
        if d.x_trans_id.get(s) == m:
            return d.a_unit[comp_of[s]]
        return None

    def laws_hold():
        for (m, n), w in d.x_trans_comp.items():
            x, y, z = cell(m), cell(n), cell(w)
            if x is not None and y is not None and z is not None:
                if d.a_paste_trans.get((x, y)) != z:
                    return False
        for a, b in X.squares.items():
            left, right = d.trans_sides(b)
            x, y = cell(left), cell(right)
            if x is None or y is None:
                continue
            if d.a_paste_same.get((F.sq(a), y)) != d.a_paste_same.get((x, G.sq(a))):
                return False
        return True

    if not laws_hold():
        return

    def rec(k):
        if k == len(free_trans):
            yield dict(assigned)
            return
        m = free_trans[k]
        s, t = d.x_trans[m]
        b = d.cell_boundary(comp_of[s], comp_of[t], d.trans(F, m), d.trans(G, m))
        for c in A.with_boundary(b):
            assigned[m] = c
            if laws_hold():
                yield from rec(k + 1)
            del assigned[m]

    yield from rec(0)


@dataclass
class HomData:
    """Everything needed to read the cells of [X, A] back as components."""
    X: DoubleCategory
    A: DoubleCategory
    functors: list
    htrans: list
    vtrans: list
    mods: list
    names: object = None
    keys: dict = field(default_factory=dict)
    index: dict = field(default_factory=dict)

    def functor(self, name) -> DoubleFunctor:
        return self.functors[self.keys["objects"][name]]

    def horizontal(self, name) -> Transformation:
        return self.htrans[self.keys["hmor"][name]]

    def vertical(self, name) -> Transformation:
        return self.vtrans[self.keys["vmor"][name]]

    def modification(self, name) -> Modification:
        return self.mods[self.keys["squares"][name]]

    def h_component(self, name, a):
        return self.horizontal(name).components[list(self.X.objects).index(a)]

    def h_cell(self, name, u):
        return self.horizontal(name).cells[list(self.X.vmor).index(u)]

    def v_component(self, name, a):
        return self.vertical(name).components[list(self.X.objects).index(a)]

    def v_cell(self, name, f):
        return self.vertical(name).cells[list(self.X.hmor).index(f)]

    def m_component(self, name, a):
        return self.modification(name).components[list(self.X.objects).index(a)]


def _identity_h(X, A, F, i):
    return Transformation(i, i, tuple(A.hid[F.obj(a)] for a in X.objects),
                          tuple(A.idsq[F.v(u)] for u in X.vmor))


def _identity_v(X, A, F, i):
    return Transformation(i, i, tuple(A.vid[F.obj(a)] for a in X.objects),
                          tuple(A.e[F.h(f)] for f in X.hmor))


def _modifications(X, A, htrans, vtrans):
    objects = list(X.objects)
    by_src_h, by_src_v = {}, {}
    for k, t in enumerate(htrans):
        by_src_h.setdefault(t.source, []).append(k)
    for k, r in enumerate(vtrans):
        by_src_v.setdefault(r.source, []).append(k)
    hpos = {f: i for i, f in enumerate(X.hmor)}
    vpos = {u: i for i, u in enumerate(X.vmor)}
    out = []
    for ti, tau in enumerate(htrans):
        for ri in by_src_v.get(tau.source, ()):
            rho = vtrans[ri]
            for rj in by_src_v.get(tau.target, ()):
                rho2 = vtrans[rj]
                for si in by_src_h.get(rho.target, ()):
                    sigma = htrans[si]
                    if sigma.target != rho2.target:
                        continue
                    choices = [A.with_boundary((tau.components[k], sigma.components[k],
                                                rho.components[k], rho2.components[k]))
                               for k in range(len(objects))]
                    for comp in _product(choices):
                        m_of = dict(zip(objects, comp))
                        if all(A.sq_hcomp.get((rho.cells[hpos[f]], m_of[t]))
                               == A.sq_hcomp.get((m_of[s], rho2.cells[hpos[f]]))
                               for f, (s, t) in X.hmor.items()) and \
                           all(A.sq_vcomp.get((tau.cells[vpos[u]], m_of[t]))
                               == A.sq_vcomp.get((m_of[s], sigma.cells[vpos[u]]))
                               for u, (s, t) in X.vmor.items()):
                            out.append(Modification(ti, si, ri, rj, comp))
    return out


def _product(choices):
    if not choices:
        yield ()
        return
    head, rest = choices[0], choices[1:]
    for c in head:
        for tail in _product(rest):
            yield (c,) + tail


def _build(X: DoubleCategory, A: DoubleCategory, horizontal_only: bool):
    functors = list(enumerate_functors(X, A))
    htrans = _transformations(X, A, functors, True)
    if horizontal_only:
        vtrans = [_identity_v(X, A, F, i) for i, F in enumerate(functors)]
    else:
        vtrans = _transformations(X, A, functors, False)
    mods = _modifications(X, A, htrans, vtrans)

    h_index = {t: k for k, t in enumerate(htrans)}
    v_index = {r: k for k, r in enumerate(vtrans)}
    m_index = {m: k for k, m in enumerate(mods)}
    n = len(functors)
    hid = {i: h_index[_identity_h(X, A, F, i)] for i, F in enumerate(functors)}
    vid = {i: v_index[_identity_v(X, A, F, i)] for i, F in enumerate(functors)}

    def h_then(t, t2):
        return Transformation(t.source, t2.target,
                              tuple(A.hcomp[(x, y)] for x, y in zip(t.components, t2.components)),
                              tuple(A.sq_hcomp[(x, y)] for x, y in zip(t.cells, t2.cells)))

    def v_then(r, r2):
        return Transformation(r.source, r2.target,
                              tuple(A.vcomp[(x, y)] for x, y in zip(r.components, r2.components)),
                              tuple(A.sq_vcomp[(x, y)] for x, y in zip(r.cells, r2.cells)))

    hcomp = {}
    for k, t in enumerate(htrans):
        for k2, t2 in enumerate(htrans):
            if t.target == t2.source:
                hcomp[(("t", k), ("t", k2))] = ("t", h_index[h_then(t, t2)])
    vcomp = {}
    for k, r in enumerate(vtrans):
        for k2, r2 in enumerate(vtrans):
            if r.target == r2.source:
                vcomp[(("r", k), ("r", k2))] = ("r", v_index[v_then(r, r2)])

    by_left, by_top = {}, {}
    for k, m in enumerate(mods):
        by_left.setdefault(m.left, []).append(k)
        by_top.setdefault(m.top, []).append(k)
    sq_hcomp, sq_vcomp = {}, {}
    for k, m in enumerate(mods):
        for k2 in by_left.get(m.right, ()):
            m2 = mods[k2]
            c = Modification(h_index[h_then(htrans[m.top], htrans[m2.top])],
                             h_index[h_then(htrans[m.bottom], htrans[m2.bottom])],
                             m.left, m2.right,
                             tuple(A.sq_hcomp[(x, y)] for x, y in zip(m.components, m2.components)))
            sq_hcomp[(("m", k), ("m", k2))] = ("m", m_index[c])
        for k2 in by_top.get(m.bottom, ()):
            m2 = mods[k2]
            c = Modification(m.top, m2.bottom,
                             v_index[v_then(vtrans[m.left], vtrans[m2.left])],
                             v_index[v_then(vtrans[m.right], vtrans[m2.right])],
                             tuple(A.sq_vcomp[(x, y)] for x, y in zip(m.components, m2.components)))
            sq_vcomp[(("m", k), ("m", k2))] = ("m", m_index[c])

    e = {}
    for k, t in enumerate(htrans):
        unit = Modification(k, k, vid[t.source], vid[t.target],
                            tuple(A.e[c] for c in t.components))
        e[("t", k)] = ("m", m_index[unit])
    idsq = {}
    for k, r in enumerate(vtrans):
        unit = Modification(hid[r.source], hid[r.target], k, k,
                            tuple(A.idsq[c] for c in r.components))
        idsq[("r", k)] = ("m", m_index[unit])

    label = {"o": "F", "t": "t", "r": "r", "m": "m"}
    D, naming = assemble(
        objects=[("o", i) for i in range(n)],
        hmor={("t", k): (("o", t.source), ("o", t.target)) for k, t in enumerate(htrans)},
        vmor={("r", k): (("o", r.source), ("o", r.target)) for k, r in enumerate(vtrans)},
        hcomp=hcomp, vcomp=vcomp,
        squares={("m", k): SquareBoundary(("t", m.top), ("t", m.bottom), ("r", m.left), ("r", m.right))
                 for k, m in enumerate(mods)},
        sq_hcomp=sq_hcomp, sq_vcomp=sq_vcomp,
        hid={("o", i): ("t", hid[i]) for i in range(n)},
        vid={("o", i): ("r", vid[i]) for i in range(n)},
        e=e, idsq=idsq,
        label=lambda key: f"{label[key[0]]}{key[1]}",
        cls=TwoCategory if horizontal_only else DoubleCategory)
    keys = {sort: {name: key[1] for key, name in getattr(naming, sort).items()}
            for sort in ("objects", "hmor", "vmor", "squares")}
    index = {"functors": {_functor_key(F): i for i, F in enumerate(functors)},
             "htrans": h_index, "vtrans": v_index, "mods": m_index}
    return D, HomData(X, A, functors, htrans, vtrans, mods, naming, keys, index)


def _functor_key(F: DoubleFunctor):
    return (tuple(sorted(F.on_objects.items())), tuple(sorted(F.on_hmor.items())),
            tuple(sorted(F.on_vmor.items())), tuple(sorted(F.on_squares.items())))


def strict_hom_data(X: DoubleCategory, A: DoubleCategory, horizontal_only: bool = False):
    """``([X, A], HomData)``, cached on ``A`` per source and mode."""
    entries = A.memo("strict_hom", list)
    for key_X, mode, value in entries:
        if mode == horizontal_only and (key_X is X or key_X == X):
            return value
    value = _build(X, A, horizontal_only)
    entries.append((X, horizontal_only, value))
    return value


def strict_hom(X: DoubleCategory, A: DoubleCategory, horizontal_only: bool = False) -> DoubleCategory:
    """[X, A]; with ``horizontal_only`` the underlying horizontal 2-category of it."""
    return strict_hom_data(X, A, horizontal_only)[0]


def hom_2category(X: DoubleCategory, A: DoubleCategory) -> TwoCategory:
    """Underlying horizontal 2-category of [X, A], computed without vertical transformations."""
    return strict_hom(X, A, horizontal_only=True)


def strict_hom_functor(X: DoubleCategory, F: DoubleFunctor, horizontal_only: bool = False) -> DoubleFunctor:
    """Postcomposition [X, A] → [X, B] with F: A → B."""
    S, sd = strict_hom_data(X, F.source, horizontal_only)
    T, td = strict_hom_data(X, F.target, horizontal_only)
    t_names = td.names
    fi = td.index["functors"]

    def obj(i):
        return fi[_functor_key(sd.functors[i].then(F))]

    def trans(t, along_h):
        comp = tuple(F.h(c) if along_h else F.v(c) for c in t.components)
        cells = tuple(F.sq(c) for c in t.cells)
        return Transformation(obj(t.source), obj(t.target), comp, cells)

    on_objects = {name: t_names.objects[("o", obj(i))] for (_, i), name in sd.names.objects.items()}
    on_hmor = {name: t_names.hmor[("t", td.index["htrans"][trans(sd.htrans[k], True)])]
               for (_, k), name in sd.names.hmor.items()}
    on_vmor = {name: t_names.vmor[("r", td.index["vtrans"][trans(sd.vtrans[k], False)])]
               for (_, k), name in sd.names.vmor.items()}
    on_squares = {}
    for (_, k), name in sd.names.squares.items():
        m = sd.mods[k]
        image = Modification(
            td.index["htrans"][trans(sd.htrans[m.top], True)],
            td.index["htrans"][trans(sd.htrans[m.bottom], True)],
            td.index["vtrans"][trans(sd.vtrans[m.left], False)],
            td.index["vtrans"][trans(sd.vtrans[m.right], False)],
            tuple(F.sq(c) for c in m.components))
        on_squares[name] = t_names.squares[("m", td.index["mods"][image])]
    return DoubleFunctor(S, T, on_objects, on_hmor, on_vmor, on_squares)


def vertical_endpoints(D: DoubleCategory) -> DoubleFunctor:
    """H[V2, D] → H D × H D, sending a vertical morphism to its source and target.

    Horizontal transformations go to their two components, modifications
    to their two component squares.
    """
    S, data = strict_hom_data(_walking_vertical(), D, horizontal_only=True)
    UH = underlying("H", D)
    P, names = product(UH, UH)
    T = as_two_category(P)
    ends = ("0", "1")

    def pair(sort, read, name):
        return getattr(names, sort)[tuple(read(name, x) for x in ends)]

    return DoubleFunctor(
        S, T,
        {n: pair("objects", lambda n, x: data.functor(n).obj(x), n) for n in S.objects},
        {n: pair("hmor", data.h_component, n) for n in S.hmor},
        {n: pair("vmor", lambda n, x: D.vid[data.functor(S.vsrc(n)).obj(x)], n) for n in S.vmor},
        {n: pair("squares", data.m_component, n) for n in S.squares})


def _walking_vertical() -> DoubleCategory:
    from .shapes import shape
    return shape("V2")
