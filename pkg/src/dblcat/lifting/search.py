"""Searches for companion pairs, conjoint pairs and gregarious adjoint equivalences."""
from __future__ import annotations

from typing import NamedTuple

from ..constructions import (all_adjoint_equivalences, companion_2cat,
                             companion_2cat_keys)
from ..core import (CompanionWitness, DoubleCategory, companions_of,
                    conjoints_of)


class GregariousAdjEquivWitness(NamedTuple):
    """Companion pairs P on f: A→B and Q on g: B→A with eta: id ⇒ g∘f, eps: f∘g ⇒ id."""
    P: CompanionWitness
    Q: CompanionWitness
    eta: str
    eps: str

    def as_tuple(self, D: DoubleCategory) -> tuple:
        """Flat form (A, B, f, u, phi, psi, g, v, chi, omega, eta, eps)."""
        a, b = D.hmor[self.P.f]
        return (a, b, *self.P, *self.Q, self.eta, self.eps)


def find_companionship(kind: str, D: DoubleCategory, m, side=None) -> list:
    """All companion (or conjoint) witnesses whose horizontal or vertical part is ``m``.

    ``side`` is "h" or "v"; by default horizontal names win over vertical ones.
    """
    if side is None:
        side = "h" if m in D.hmor else "v"
    if kind == "companion":
        return list(companions_of(D, m, side))
    if kind == "conjoint":
        return list(conjoints_of(D, m, side))
    raise ValueError(f"unknown pairing {kind!r}")


def all_gregarious_adjoint_equivalences(D: DoubleCategory) -> tuple:
    """Adjoint equivalences in the companion-pair 2-category, read back in ``D``."""
    def build():
        R = companion_2cat(D)
        cell_of, two_cell_of = companion_2cat_keys(D)
        out = []
        for d in all_adjoint_equivalences(R):
            out.append(GregariousAdjEquivWitness(
                cell_of[d.f], cell_of[d.g], two_cell_of[d.eta][2], two_cell_of[d.eps][2]))
        return tuple(out)
    return D.memo("gregarious", build)


def find_gregarious_adjoint_equivalence(D: DoubleCategory, a, constraint=None) -> list:
    """Witnesses starting at object ``a``; with ``constraint`` only those whose P equals it."""
    out = []
    for w in all_gregarious_adjoint_equivalences(D):
        if D.hsrc(w.P.f) != a:
            continue
        if constraint is not None and tuple(w.P) != tuple(constraint):
            continue
        out.append(w)
    return out


def gregarious_equivalent(D: DoubleCategory, a, b) -> bool:
    """Whether some gregarious adjoint equivalence runs from ``a`` to ``b``."""
    idx = D.memo("gregarious_pairs", lambda: {(D.hsrc(w.P.f), D.htgt(w.P.f))
                                              for w in all_gregarious_adjoint_equivalences(D)})
    return (a, b) in idx
