"""Brute-force enumeration of double functors between finite double categories."""
from __future__ import annotations

from typing import Iterator

from .model import DoubleCategory, DoubleFunctor


def _plan(X: DoubleCategory):
    """Variable order plus, for every variable, the constraints it completes."""
    id_h = {f for f in X.hmor if X.is_h_identity(f)}
    id_v = {u for u in X.vmor if X.is_v_identity(u)}
    id_sq = set(X.e.values()) | set(X.idsq.values())
    variables = ([("o", a) for a in X.objects]
                 + [("h", f) for f in X.hmor if f not in id_h]
                 + [("v", u) for u in X.vmor if u not in id_v]
                 + [("s", a) for a in X.squares if a not in id_sq])
    index = {var: i for i, var in enumerate(variables)}

    ident_of = {a: ("v", u) for u, a in X.idsq.items()}
    ident_of.update({a: ("h", f) for f, a in X.e.items()})

    # identity cells are determined by the variable they hang off
    def dep(kind, name):
        if (kind, name) in index:
            return index[(kind, name)]
        if kind == "h":
            return index[("o", X.hmor[name][0])]
        if kind == "v":
            return index[("o", X.vmor[name][0])]
        return dep(*ident_of[name])

    checks = [[] for _ in variables]
    for kind, horizontal, table, ident in (("h", True, X.hcomp, id_h),
                                           ("v", False, X.vcomp, id_v),
                                           ("s", True, X.sq_hcomp, id_sq),
                                           ("s", False, X.sq_vcomp, id_sq)):
        for (x, y), z in table.items():
            if x in ident and y in ident and z in ident:
                continue
            last = max(dep(kind, x), dep(kind, y), dep(kind, z))
            checks[last].append((kind, horizontal, x, y, z))
    return variables, checks, ident_of


def enumerate_functors(X: DoubleCategory, A: DoubleCategory,
                       injective: bool = False) -> Iterator[DoubleFunctor]:
    """Yield every double functor X -> A in a deterministic order."""
    if not X.objects:
        yield DoubleFunctor(X, A, {}, {}, {}, {})
        return
    if not A.objects:
        return
    variables, checks, ident_of = X.memo("functor_plan", lambda: _plan(X))
    value = {"o": {}, "h": {}, "v": {}, "s": {}}
    used = {"o": set(), "h": set(), "v": set(), "s": set()}

    def derived(kind, name):
        m = value[kind]
        if name in m:
            return m[name]
        if kind == "h":
            return A.hid[value["o"][X.hmor[name][0]]]
        if kind == "v":
            return A.vid[value["o"][X.vmor[name][0]]]
        raise KeyError(name)

    def resolve_square(a):
        if a in value["s"]:
            return value["s"][a]
        kind, m = ident_of[a]
        return A.e[derived("h", m)] if kind == "h" else A.idsq[derived("v", m)]

    def get(kind, name):
        return resolve_square(name) if kind == "s" else derived(kind, name)

    def ok(i):
        for kind, horizontal, x, y, z in checks[i]:
            if kind == "h":
                table = A.hcomp
            elif kind == "v":
                table = A.vcomp
            else:
                table = A.sq_hcomp if horizontal else A.sq_vcomp
            if table.get((get(kind, x), get(kind, y))) != get(kind, z):
                return False
        return True

    def candidates(kind, name):
        if kind == "o":
            return A.objects
        if kind == "h":
            s, t = X.hmor[name]
            return A.hhom(value["o"][s], value["o"][t])
        if kind == "v":
            s, t = X.vmor[name]
            return A.vhom(value["o"][s], value["o"][t])
        b = X.squares[name]
        return A.with_boundary((derived("h", b.top), derived("h", b.bottom),
                                derived("v", b.left), derived("v", b.right)))

    def reserved(kind, name):
        # under injectivity, identity images are taken by the identities of X
        if kind == "h":
            return A.is_h_identity(name)
        if kind == "v":
            return A.is_v_identity(name)
        if kind == "s":
            return A.is_identity_square(name)
        return False

    def finish():
        on_o = dict(value["o"])
        on_h = {f: derived("h", f) for f in X.hmor}
        on_v = {u: derived("v", u) for u in X.vmor}
        on_s = {a: resolve_square(a) for a in X.squares}
        if injective and not (len(set(on_h.values())) == len(on_h)
                              and len(set(on_v.values())) == len(on_v)
                              and len(set(on_s.values())) == len(on_s)):
            return None
        return DoubleFunctor(X, A, on_o, on_h, on_v, on_s)

    def rec(i):
        if i == len(variables):
            F = finish()
            if F is not None:
                yield F
            return
        kind, name = variables[i]
        for c in candidates(kind, name):
            if injective and (c in used[kind] or reserved(kind, c)):
                continue
            value[kind][name] = c
            used[kind].add(c)
            if ok(i):
                yield from rec(i + 1)
            used[kind].discard(c)
            del value[kind][name]

    yield from rec(0)


def count_functors(X, A) -> int:
    return sum(1 for _ in enumerate_functors(X, A))


def find_isomorphism(X: DoubleCategory, A: DoubleCategory):
    """An invertible double functor X -> A, or None."""
    if X.size() != A.size():
        return None
    return next(enumerate_functors(X, A, injective=True), None)


def is_isomorphic(X, A) -> bool:
    return find_isomorphism(X, A) is not None
