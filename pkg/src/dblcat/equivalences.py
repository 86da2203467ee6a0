"""Decision procedures for the morphism classes between finite double categories.

Every checker returns a CheckReport holding at most one failure: the first
one met in canonical order.
"""
from __future__ import annotations

from typing import NamedTuple

from .constructions import (companion_2cat_functor, equivalence_data,
                            equivalences, hom_2category, invertible_cells,
                            strict_hom_data, strict_hom_functor, shape,
                            transpose, transpose_functor, transpose_square_names,
                            underlying, underlying_functor, vertical_inverse)
from .core import (DoubleCategory, DoubleFunctor, HORIZONTAL, companions_of,
                   invert_square, is_companion)
from .errors import MissingCompanionData
from .lifting import all_gregarious_adjoint_equivalences, gregarious_equivalent


class Failure(NamedTuple):
    tag: str
    witness: tuple


class CheckReport(NamedTuple):
    verdict: bool
    failures: tuple = ()
    details: dict = None

    def __bool__(self):
        return self.verdict

    @property
    def first(self):
        return self.failures[0] if self.failures else None


class Verdict(NamedTuple):
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def _report(failure=None, details=None) -> CheckReport:
    if failure is None:
        return CheckReport(True, (), details)
    return CheckReport(False, (Failure(*failure),), details)


# -- shared pieces --------------------------------------------------------


def _boundaries(D: DoubleCategory):
    for t, (a, b) in D.hmor.items():
        for l in D.vout(a):
            for r in D.vout(b):
                for bot in D.hhom(D.vtgt(l), D.vtgt(r)):
                    yield (t, bot, l, r)


def _square_bijection(F: DoubleFunctor, faithful_tag: str, full_tag: str):
    """First boundary on which F fails to biject squares, as (tag, witness)."""
    S, T = F.source, F.target
    for b in _boundaries(S):
        ups = S.with_boundary(b)
        image = (F.h(b[0]), F.h(b[1]), F.v(b[2]), F.v(b[3]))
        seen = {}
        for a in ups:
            c = F.sq(a)
            if c in seen:
                return faithful_tag, (*b, seen[c], a)
            seen[c] = a
        for c in T.with_boundary(image):
            if c not in seen:
                return full_tag, (*b, c)
    return None


def _full(F, hom_src, hom_tgt, mapper, tag):
    S = F.source
    for a in S.objects:
        for c in S.objects:
            images = {mapper(f) for f in hom_src(a, c)}
            for g in hom_tgt(F.obj(a), F.obj(c)):
                if g not in images:
                    return tag, (a, c, g)
    return None


# -- trivial fibrations ---------------------------------------------------


def is_trivial_fibration(F: DoubleFunctor) -> CheckReport:
    """Surjective on objects, full on both kinds of morphism, bijective on squares per boundary."""
    S, T = F.source, F.target
    hit = set(F.on_objects.values())
    for b in T.objects:
        if b not in hit:
            return _report(("surjective-objects", (b,)))
    failure = (_full(F, S.hhom, T.hhom, F.h, "full-h")
               or _full(F, S.vhom, T.vhom, F.v, "full-v")
               or _square_bijection(F, "faithful-squares", "full-squares"))
    return _report(failure)


# -- gregarious fibrations and equivalences -------------------------------


def _local_isofibration(F: DoubleFunctor, tag):
    """Every invertible globular β: Ff ⇒ g downstairs is the image of an invertible α: f ⇒ h."""
    S, T = F.source, F.target
    for f, (a, c) in S.hmor.items():
        lifted = {F.sq(al) for h in S.hhom(a, c) for al in invertible_cells(S, f, h)}
        for g in T.hhom(F.obj(a), F.obj(c)):
            for beta in invertible_cells(T, F.h(f), g):
                if beta not in lifted:
                    return tag, (f, beta)
    return None


def _gregarious_lifting(F: DoubleFunctor):
    S, T = F.source, F.target
    images = {}
    for w in all_gregarious_adjoint_equivalences(S):
        image = (tuple(F.h(x) if i == 0 else F.v(x) if i == 1 else F.sq(x)
                       for i, x in enumerate(w.P)),
                 tuple(F.h(x) if i == 0 else F.v(x) if i == 1 else F.sq(x)
                       for i, x in enumerate(w.Q)),
                 F.sq(w.eta), F.sq(w.eps))
        images.setdefault(S.hsrc(w.P.f), set()).add(image)
    down = all_gregarious_adjoint_equivalences(T)
    for a in S.objects:
        lifted = images.get(a, set())
        for w in down:
            if T.hsrc(w.P.f) != F.obj(a):
                continue
            if (tuple(w.P), tuple(w.Q), w.eta, w.eps) not in lifted:
                return "f1", (a, *w.as_tuple(T))
    return None


def is_gregarious_fibration(F: DoubleFunctor) -> CheckReport:
    """(f1) gregarious adjoint equivalences lift from image objects; (f2)/(f3) the
    underlying horizontal and vertical 2-functors are local isofibrations."""
    failure = _gregarious_lifting(F)
    if failure is None:
        failure = _local_isofibration(underlying_functor("H", F), "f2")
    if failure is None:
        failure = _local_isofibration(underlying_functor("V", F), "f3")
    return _report(failure)


def _essentially_full(G: DoubleFunctor, tag):
    """For g: Fa → Fc some f: a → c has an invertible 2-cell Ff ⇒ g."""
    S, T = G.source, G.target
    for a in S.objects:
        for c in S.objects:
            candidates = [G.h(f) for f in S.hhom(a, c)]
            for g in T.hhom(G.obj(a), G.obj(c)):
                if not any(invertible_cells(T, h, g) for h in candidates):
                    return tag, (a, c, g)
    return None


def is_gregarious_equivalence(F: DoubleFunctor) -> CheckReport:
    S, T = F.source, F.target
    images = list(dict.fromkeys(F.on_objects.values()))
    for b in T.objects:
        if not any(gregarious_equivalent(T, b, x) or gregarious_equivalent(T, x, b)
                   for x in images):
            return _report(("g1", (b,)))
    failure = (_essentially_full(underlying_functor("H", F), "g2")
               or _essentially_full(underlying_functor("V", F), "g3")
               or _square_bijection(F, "g4", "g4"))
    return _report(failure)


# -- 2-functors -----------------------------------------------------------


def is_biequivalence(G: DoubleFunctor) -> CheckReport:
    """(b1)-(b3) for a functor between 2-categories (stored horizontally)."""
    S, T = G.source, G.target
    eq = equivalences(T)
    images = list(dict.fromkeys(G.on_objects.values()))
    for b in T.objects:
        if not any(f in eq for x in images for f in T.hhom(x, b)):
            return _report(("b1", (b,)))
    failure = _essentially_full(G, "b2")
    if failure is None:
        for f, (a, c) in S.hmor.items():
            for h in S.hhom(a, c):
                seen = {}
                for al in S.globular(f, h):
                    beta = G.sq(al)
                    if beta in seen:
                        failure = "b3", (f, h, seen[beta], al)
                        break
                    seen[beta] = al
                if failure:
                    break
                for beta in T.globular(G.h(f), G.h(h)):
                    if beta not in seen:
                        failure = "b3", (f, h, beta)
                        break
                if failure:
                    break
            if failure:
                break
    return _report(failure)


def is_equifibration(G: DoubleFunctor) -> CheckReport:
    S, T = G.source, G.target
    eq_s, eq_t = equivalences(S), equivalences(T)
    for a in S.objects:
        lifted = {G.h(f) for f in S.hout(a) if f in eq_s}
        for g in T.hout(G.obj(a)):
            if g in eq_t and g not in lifted:
                return _report(("f1", (a, g)))
    return _report(_local_isofibration(G, "f2"))


def is_equivalence_1cell(C: DoubleCategory, f) -> Verdict:
    """Whether the 1-cell ``f`` of a 2-category has a weak inverse; returns (g, η, ε)."""
    data = equivalence_data(C, f)
    return Verdict(data is not None, data)


# -- four-tuple criterion -------------------------------------------------


def four_tuple_functors(F: DoubleFunctor) -> dict:
    V2 = shape("V2")
    return {
        "R": companion_2cat_functor(F),
        "H": underlying_functor("H", F),
        "V": underlying_functor("V", F),
        "HV2": strict_hom_functor(V2, F, horizontal_only=True),
    }


def four_tuple_witness(F: DoubleFunctor) -> CheckReport:
    """Biequivalence of the four induced 2-functors R F, H F, V F and H[V2, F].

    ``details`` keeps each component's own report; the headline failure is
    the first failing component, tag prefixed by its key.
    """
    reports = {k: is_biequivalence(G) for k, G in four_tuple_functors(F).items()}
    details = dict(reports)
    for k, r in reports.items():
        if not r.verdict:
            tag, witness = r.first
            return _report((f"{k}:{tag}", witness), details)
    return _report(None, details)


# -- squares --------------------------------------------------------------


def _vertical_arrow_cell(D: DoubleCategory, a):
    """The 1-cell of H[V2, D] whose component square is ``a``."""
    V2 = shape("V2")
    H, data = strict_hom_data(V2, D, horizontal_only=True)
    (u,) = [u for u in V2.vmor if not V2.is_v_identity(u)]
    for name in H.hmor:
        if data.h_cell(name, u) == a:
            return H, name
    raise AssertionError(f"square {a!r} has no transformation")


def is_weakly_h_invertible(D: DoubleCategory, a) -> bool:
    """``a`` is an equivalence when read as a 1-cell of H[V2, D]."""
    H, name = _vertical_arrow_cell(D, a)
    return name in equivalences(H)


def is_weakly_v_invertible(D: DoubleCategory, a) -> bool:
    return is_weakly_h_invertible(transpose(D), transpose_square_names(D)[a])


def is_companionable(D: DoubleCategory, a, data=None) -> bool:
    """Whether ψ / a / φ' is horizontally invertible for companion data on top and bottom.

    ``data`` is a pair of companion witnesses for top(a) and bottom(a); when
    omitted the first available witnesses are used.
    """
    b = D.squares[a]
    if data is None:
        tops, bottoms = companions_of(D, b.top), companions_of(D, b.bottom)
        if not tops or not bottoms:
            raise MissingCompanionData(f"no companion data on the horizontal boundary of {a!r}")
        data = (tops[0], bottoms[0])
    P, Q = data
    if P.f != b.top or Q.f != b.bottom or not is_companion(D, P) or not is_companion(D, Q):
        raise MissingCompanionData(f"companion data {data!r} does not fit {a!r}")
    pasted = D.vcolumn(P.psi, a, Q.phi)
    return invert_square(HORIZONTAL, pasted, D) is not None


def vertically_invertible(D: DoubleCategory, a) -> bool:
    return D.is_h_globular(a) and vertical_inverse(D, a) is not None


__all__ = [
    "CheckReport", "Failure", "Verdict", "four_tuple_functors", "four_tuple_witness",
    "hom_2category", "is_biequivalence", "is_companionable", "is_equifibration",
    "is_equivalence_1cell", "is_gregarious_equivalence", "is_gregarious_fibration",
    "is_trivial_fibration", "is_weakly_h_invertible", "is_weakly_v_invertible",
    "underlying", "transpose_functor", "vertically_invertible",
]
