"""Companion and conjoint pairs binding a horizontal to a vertical morphism."""
from __future__ import annotations

from typing import NamedTuple

from .model import DoubleCategory


class CompanionWitness(NamedTuple):
    """f: A→B horizontal, u: A→B vertical.

    phi has top f, left u and identity bottom/right; psi has identity
    top/left, bottom f and right u.  Then psi|phi = e_f and psi/phi = id_u.
    """
    f: str
    u: str
    phi: str
    psi: str


class ConjointWitness(NamedTuple):
    """f: A→B horizontal, u: B→A vertical.

    phi has top id_B, left u, bottom f, right id_B; psi has top f, left id_A,
    right u, bottom id_A.  Then psi|phi = e_f and phi/psi = id_u.
    """
    f: str
    u: str
    phi: str
    psi: str


def is_companion(D: DoubleCategory, w) -> bool:
    f, u, phi, psi = w
    if f not in D.hmor or u not in D.vmor or D.hmor[f] != D.vmor[u]:
        return False
    a, b = D.hmor[f]
    return (D.squares.get(phi) == (f, D.hid[b], u, D.vid[b])
            and D.squares.get(psi) == (D.hid[a], f, D.vid[a], u)
            and D.sq_hcomp.get((psi, phi)) == D.e[f]
            and D.sq_vcomp.get((psi, phi)) == D.idsq[u])


def is_conjoint(D: DoubleCategory, w) -> bool:
    f, u, phi, psi = w
    if f not in D.hmor or u not in D.vmor:
        return False
    a, b = D.hmor[f]
    if D.vmor[u] != (b, a):
        return False
    return (D.squares.get(phi) == (D.hid[b], f, u, D.vid[b])
            and D.squares.get(psi) == (f, D.hid[a], D.vid[a], u)
            and D.sq_hcomp.get((psi, phi)) == D.e[f]
            and D.sq_vcomp.get((phi, psi)) == D.idsq[u])


def _companions_of_h(D, f):
    a, b = D.hmor[f]
    out = []
    for u in D.vhom(a, b):
        for phi in D.with_boundary((f, D.hid[b], u, D.vid[b])):
            for psi in D.with_boundary((D.hid[a], f, D.vid[a], u)):
                if (D.sq_hcomp.get((psi, phi)) == D.e[f]
                        and D.sq_vcomp.get((psi, phi)) == D.idsq[u]):
                    out.append(CompanionWitness(f, u, phi, psi))
    return out


def _conjoints_of_h(D, f):
    a, b = D.hmor[f]
    out = []
    for u in D.vhom(b, a):
        for phi in D.with_boundary((D.hid[b], f, u, D.vid[b])):
            for psi in D.with_boundary((f, D.hid[a], D.vid[a], u)):
                if (D.sq_hcomp.get((psi, phi)) == D.e[f]
                        and D.sq_vcomp.get((phi, psi)) == D.idsq[u]):
                    out.append(ConjointWitness(f, u, phi, psi))
    return out


def all_companions(D: DoubleCategory) -> tuple:
    """Every companion pair, ordered by horizontal morphism then search order."""
    return D.memo("companions", lambda: tuple(w for f in D.hmor for w in _companions_of_h(D, f)))


def all_conjoints(D: DoubleCategory) -> tuple:
    return D.memo("conjoints", lambda: tuple(w for f in D.hmor for w in _conjoints_of_h(D, f)))


def companions_of(D: DoubleCategory, m, side="h") -> tuple:
    """Companion pairs whose horizontal (side='h') or vertical (side='v') part is m."""
    idx = D.memo(("companions_by", side), lambda: _group(all_companions(D), side))
    return idx.get(m, ())


def conjoints_of(D: DoubleCategory, m, side="h") -> tuple:
    idx = D.memo(("conjoints_by", side), lambda: _group(all_conjoints(D), side))
    return idx.get(m, ())


def _group(witnesses, side):
    out = {}
    for w in witnesses:
        out.setdefault(w.f if side == "h" else w.u, []).append(w)
    return {k: tuple(v) for k, v in out.items()}


def identity_companion(D: DoubleCategory, a) -> CompanionWitness:
    box = D.e[D.hid[a]]
    return CompanionWitness(D.hid[a], D.vid[a], box, box)


def companion_comparisons(D: DoubleCategory, P: CompanionWitness, Q: CompanionWitness) -> list:
    """Squares theta: Q.u ⇒ P.u with identity top and bottom, theta|P.phi = Q.phi and Q.psi|theta = P.psi."""
    if P.f != Q.f:
        raise ValueError(f"companions on different morphisms {P.f!r} and {Q.f!r}")
    a, b = D.hmor[P.f]
    return [t for t in D.with_boundary((D.hid[a], D.hid[b], Q.u, P.u))
            if D.sq_hcomp.get((t, P.phi)) == Q.phi and D.sq_hcomp.get((Q.psi, t)) == P.psi]
