"""Congruences, quotients and pushouts along the generating cells."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from .constructions import (coproduct, coproduct_injection, one, transpose,
                            transpose_square_names)
from .core import (DoubleCategory, DoubleFunctor, SquareBoundary, assemble,
                   enumerate_functors, validate_double_category)
from .errors import IncompatibleBoundary, NotParallel, OutOfTruncation

# -- congruences ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Congruence:
    """An equivalence relation on parallel squares, closed under | and /.

    ``rep`` sends every square of ``host`` to the representative of its class.
    """
    host: DoubleCategory
    rep: dict

    def same(self, a, b) -> bool:
        return self.rep[a] == self.rep[b]

    def class_of(self, a) -> tuple:
        r = self.rep[a]
        return tuple(x for x in self.host.squares if self.rep[x] == r)

    def classes(self) -> list:
        out = {}
        for a in self.host.squares:
            out.setdefault(self.rep[a], []).append(a)
        return [tuple(c) for c in out.values()]

    def is_discrete(self) -> bool:
        return all(self.rep[a] == a for a in self.host.squares)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def _representatives(D: DoubleCategory, uf: _UnionFind) -> dict:
    """Prefer an identity square as the name of its class, else the first in order."""
    best = {}
    for a in D.squares:
        r = uf.find(a)
        current = best.get(r)
        if current is None or (D.is_identity_square(a) and not D.is_identity_square(current)):
            best[r] = a
    return {a: best[uf.find(a)] for a in D.squares}


def congruence_closure(D: DoubleCategory, pairs=()) -> Congruence:
    """The least congruence relating every given pair of parallel squares."""
    uf = _UnionFind(D.squares)
    for a, b in pairs:
        if D.squares[a] != D.squares[b]:
            raise NotParallel(f"{a!r} and {b!r} have different boundaries")
        uf.union(a, b)
    changed = True
    while changed:
        changed = False
        for table in (D.sq_hcomp, D.sq_vcomp):
            first = {}
            for (a, b), c in table.items():
                key = (uf.find(a), uf.find(b))
                if key in first:
                    changed |= uf.union(first[key], c)
                else:
                    first[key] = c
    return Congruence(D, _representatives(D, uf))


def quotient(D: DoubleCategory, c: Congruence):
    """``(D/c, canonical functor)``; squares are renamed to their class representatives."""
    rep = c.rep
    keep = {a for a in D.squares if rep[a] == a}
    Q = type(D)(
        objects=D.objects, hmor=dict(D.hmor), vmor=dict(D.vmor),
        hcomp=dict(D.hcomp), vcomp=dict(D.vcomp),
        squares={a: b for a, b in D.squares.items() if a in keep},
        sq_hcomp={(rep[a], rep[b]): rep[x] for (a, b), x in D.sq_hcomp.items()},
        sq_vcomp={(rep[a], rep[b]): rep[x] for (a, b), x in D.sq_vcomp.items()},
        hid=dict(D.hid), vid=dict(D.vid),
        e={f: rep[a] for f, a in D.e.items()},
        idsq={u: rep[a] for u, a in D.idsq.items()})
    F = DoubleFunctor(D, Q, {a: a for a in D.objects}, {f: f for f in D.hmor},
                      {u: u for u in D.vmor}, dict(rep))
    return Q, F


def identify_parallel_squares(D: DoubleCategory, a, b):
    """Pushout along the cell that glues two parallel squares into one."""
    return quotient(D, congruence_closure(D, [(a, b)]))


def induced_quotient_functor(F: DoubleFunctor, source_quotient: DoubleFunctor,
                             target_quotient: DoubleFunctor) -> DoubleFunctor:
    """The functor between quotients induced by ``F``.

    Well defined when the target congruence contains the image of the source one.
    """
    S, T = source_quotient.target, target_quotient.target
    on_squares = {}
    for a in F.source.squares:
        on_squares.setdefault(source_quotient.sq(a), target_quotient.sq(F.sq(a)))
    return DoubleFunctor(S, T, dict(F.on_objects),
                         {f: target_quotient.h(F.h(f)) for f in S.hmor},
                         {u: target_quotient.v(F.v(u)) for u in S.vmor}, on_squares)


def attach_object(D: DoubleCategory):
    """``D ⊔ One`` together with the inclusion of ``D``."""
    P, _ = coproduct(D, one())
    return P, coproduct_injection(0, D, one())


# -- presentations --------------------------------------------------------


@dataclass
class Presentation:
    """A double category given by a finite base plus free generators.

    ``hmor``/``vmor`` hold (name, src, tgt) triples, ``squares`` holds
    (name, SquareBoundary) pairs and ``identify`` pairs of squares to glue.
    Generator boundaries may refer to base cells and to earlier generators.
    """
    base: DoubleCategory
    objects: tuple = ()
    hmor: tuple = ()
    vmor: tuple = ()
    squares: tuple = ()
    identify: tuple = ()

    def generators(self) -> dict:
        return {"objects": list(self.objects), "hmor": [list(x) for x in self.hmor],
                "vmor": [list(x) for x in self.vmor],
                "squares": [[n, *b] for n, b in self.squares],
                "identify": [list(p) for p in self.identify]}


def attach_square_presentation(D: DoubleCategory, boundary, name="sq") -> Presentation:
    """Presentation of the pushout along the inclusion of a square's boundary."""
    b = SquareBoundary(*boundary)
    if not D.corner_compatible(b):
        raise IncompatibleBoundary(f"{tuple(b)!r} is not a boundary in the host")
    while name in D.squares:
        name += "'"
    return Presentation(D, squares=((name, b),))


def count_functors_to(P: Presentation, X: DoubleCategory) -> int:
    """Number of double functors from the presented double category to ``X``.

    Uses the universal property: a functor is a functor on the base plus an
    image for each generator, subject to the boundary and gluing constraints.
    """
    total = 0
    for F in enumerate_functors(P.base, X):
        for objs in cartesian(X.objects, repeat=len(P.objects)):
            o = dict(F.on_objects)
            o.update(zip(P.objects, objs))
            h_choices = [X.hhom(o[s], o[t]) for _, s, t in P.hmor]
            v_choices = [X.vhom(o[s], o[t]) for _, s, t in P.vmor]
            for hs in cartesian(*h_choices):
                h = dict(F.on_hmor)
                h.update(zip((n for n, _, _ in P.hmor), hs))
                for vs in cartesian(*v_choices):
                    v = dict(F.on_vmor)
                    v.update(zip((n for n, _, _ in P.vmor), vs))
                    total += _count_squares(P, X, F, h, v)
    return total


def _count_squares(P, X, F, h, v) -> int:
    choices = [X.with_boundary((h[b.top], h[b.bottom], v[b.left], v[b.right]))
               for _, b in P.squares]
    count = 0
    for sqs in cartesian(*choices):
        s = dict(F.on_squares)
        s.update(zip((n for n, _ in P.squares), sqs))
        if all(s[a] == s[b] for a, b in P.identify):
            count += 1
    return count


# -- free edge extension --------------------------------------------------


class _Words:
    """Alternating words for a free horizontal edge ``edge: A → B`` over ``H``.

    A morphism of grade n is (c0, ..., cn) standing for cn∘edge∘...∘edge∘c0;
    a square of grade n is (g0, ..., gn) standing for g0|e_edge|...|e_edge|gn.
    Words are taken up to the unit laws only.
    """

    def __init__(self, H: DoubleCategory, A, B, edge, k):
        self.H, self.A, self.B, self.edge, self.k = H, A, B, edge, k
        into_a = [c for c, (s, t) in H.hmor.items() if t == A]
        b_to_a = list(H.hhom(B, A))
        out_b = list(H.hout(B))
        va, vb = H.vid[A], H.vid[B]
        first = [g for g, bd in H.squares.items() if bd.right == va]
        middle = [g for g, bd in H.squares.items() if bd.left == vb and bd.right == va]
        last = [g for g, bd in H.squares.items() if bd.left == vb]
        self.morphisms = [(c,) for c in H.hmor]
        self.squares = [(g,) for g in H.squares]
        for n in range(1, k + 1):
            self.morphisms += list(cartesian(into_a, *[b_to_a] * (n - 1), out_b))
            self.squares += list(cartesian(first, *[middle] * (n - 1), last))

    def src(self, w):
        return self.H.hmor[w[0]][0]

    def tgt(self, w):
        return self.H.hmor[w[-1]][1]

    def boundary(self, w) -> SquareBoundary:
        bds = [self.H.squares[g] for g in w]
        return SquareBoundary(tuple(b.top for b in bds), tuple(b.bottom for b in bds),
                              bds[0].left, bds[-1].right)

    def _check(self, grade):
        if grade > self.k:
            raise OutOfTruncation(f"composite has {grade} occurrences of the new edge, "
                                  f"truncation keeps {self.k}")

    def compose(self, w1, w2):
        self._check(len(w1) + len(w2) - 2)
        return w1[:-1] + (self.H.hcompose(w1[-1], w2[0]),) + w2[1:]

    def hpaste(self, w1, w2):
        self._check(len(w1) + len(w2) - 2)
        return w1[:-1] + (self.H.hpaste(w1[-1], w2[0]),) + w2[1:]

    def vpaste(self, w1, w2):
        return tuple(self.H.vpaste(a, b) for a, b in zip(w1, w2))

    def morphism_name(self, w):
        if len(w) == 1:
            return w[0]
        parts = []
        for i, c in enumerate(reversed(w)):
            if i:
                parts.append(self.edge)
            if not self.H.is_h_identity(c):
                parts.append(c)
        return "∘".join(parts)

    def is_unit_word(self, w):
        return all(g == self.H.e[c] for g, c in zip(w, self.boundary(w).top))

    def square_name(self, w, rename, unit_prefix, joiner):
        if len(w) == 1:
            return rename(w[0])
        if self.is_unit_word(w):
            return unit_prefix + self.morphism_name(self.boundary(w).top)
        parts = []
        for i, g in enumerate(w):
            if i:
                parts.append(unit_prefix + self.edge)
            top = self.H.squares[g].top
            if not (self.H.is_h_identity(top) and g == self.H.e[top]):
                parts.append(rename(g))
        return joiner.join(parts)


@dataclass
class TruncatedExtension:
    """Cells of the free edge extension with at most ``k`` occurrences of the edge.

    Morphisms and squares are stored by name; ``words`` maps each name to its
    alternating word.  Composition along the edge's direction raises
    OutOfTruncation past grade ``k``.
    """
    direction: str
    edge: str
    k: int
    objects: tuple
    hmor: dict
    vmor: dict
    squares: dict
    words: dict
    _w: _Words = field(repr=False, default=None)
    _names: dict = field(repr=False, default_factory=dict)

    def grade(self, name) -> int:
        return len(self.words[name]) - 1

    def _along(self, x, y, op):
        w = op(self.words[x], self.words[y])
        return self._names[w]

    def hcompose(self, f, g):
        """g∘f."""
        if self.direction == "h":
            return self._along(f, g, self._w.compose)
        return self._w.H.vcompose(f, g)

    def vcompose(self, u, v):
        if self.direction == "v":
            return self._along(u, v, self._w.compose)
        return self._w.H.vcompose(u, v)

    def hpaste(self, a, b):
        return self._along(a, b, self._w.hpaste if self.direction == "h" else self._w.vpaste)

    def vpaste(self, a, c):
        return self._along(a, c, self._w.vpaste if self.direction == "h" else self._w.hpaste)

    def as_double_category(self) -> DoubleCategory:
        """The truncation as a double category, when it is closed under composition."""
        W, H = self._w, self._w.H
        ms, ss = W.morphisms, W.squares
        hcomp = {}
        for w1 in ms:
            for w2 in ms:
                if W.tgt(w1) == W.src(w2):
                    hcomp[(w1, w2)] = W.compose(w1, w2)
        sq_h, sq_v = {}, {}
        bds = {w: W.boundary(w) for w in ss}
        for w1 in ss:
            for w2 in ss:
                if bds[w1].right == bds[w2].left:
                    sq_h[(w1, w2)] = W.hpaste(w1, w2)
                if bds[w1].bottom == bds[w2].top:
                    sq_v[(w1, w2)] = W.vpaste(w1, w2)
        names = {}
        names.update({w: self._names[w] for w in ms})
        names.update({w: self._names[w] for w in ss})
        built, _ = assemble(
            H.objects, {w: (W.src(w), W.tgt(w)) for w in ms}, dict(H.vmor), hcomp,
            dict(H.vcomp), {w: tuple(bds[w]) for w in ss}, sq_h, sq_v,
            {a: (H.hid[a],) for a in H.objects}, dict(H.vid),
            {w: tuple(H.e[c] for c in w) for w in ms}, {u: (H.idsq[u],) for u in H.vmor},
            label=lambda x: names.get(x, x))
        out = built if self.direction == "h" else transpose(built)
        return validate_double_category(out)


def free_edge_extension(D: DoubleCategory, direction: str, A, B, k: int, edge=None):
    """Freely adjoin a horizontal ("h") or vertical ("v") morphism ``edge: A → B``.

    Without ``edge`` a fresh name is made from "f".  Returns
    ``(TruncatedExtension, Presentation)``.
    """
    if edge is None:
        edge = "f"
        while edge in D.hmor or edge in D.vmor:
            edge += "'"
    if k < 0:
        raise ValueError("truncation bound must be non-negative")
    if direction not in ("h", "v"):
        raise ValueError(f"direction must be 'h' or 'v', not {direction!r}")
    if A not in D.objects or B not in D.objects:
        raise IncompatibleBoundary(f"{A!r} or {B!r} is not an object")
    if edge in D.hmor or edge in D.vmor:
        raise ValueError(f"edge name {edge!r} is already in use")
    H = D if direction == "h" else transpose(D)
    back = {}
    if direction == "v":
        back = {t: s for s, t in transpose_square_names(D).items()}
    rename = lambda g: back.get(g, g)
    W = _Words(H, A, B, edge, k)
    m_names = {w: W.morphism_name(w) for w in W.morphisms}
    prefix, joiner = ("e:", "|") if direction == "h" else ("idsq:", "/")
    s_names = {w: W.square_name(w, rename, prefix, joiner) for w in W.squares}
    names = {**m_names, **s_names}
    along = {m_names[w]: (W.src(w), W.tgt(w)) for w in W.morphisms}
    across = dict(H.vmor)
    squares = {}
    for w in W.squares:
        b = W.boundary(w)
        top, bottom = m_names[b.top], m_names[b.bottom]
        squares[s_names[w]] = (SquareBoundary(top, bottom, b.left, b.right) if direction == "h"
                               else SquareBoundary(b.left, b.right, top, bottom))
    words = {n: w for w, n in names.items()}
    model = TruncatedExtension(
        direction, edge, k, tuple(D.objects),
        along if direction == "h" else across, across if direction == "h" else along,
        squares, words, W, names)
    gens = ((edge, A, B),)
    pres = Presentation(D, hmor=gens) if direction == "h" else Presentation(D, vmor=gens)
    return model, pres


__all__ = [
    "Congruence", "Presentation", "TruncatedExtension", "attach_object",
    "attach_square_presentation", "congruence_closure", "count_functors_to",
    "free_edge_extension", "identify_parallel_squares", "induced_quotient_functor",
    "quotient",
]
