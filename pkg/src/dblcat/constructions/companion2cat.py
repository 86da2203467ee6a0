"""The 2-category of companion pairs of a double category, and the unit C → R(Sq C)."""
from __future__ import annotations

from ..core import (CompanionWitness, DoubleCategory, DoubleFunctor,
                    SquareBoundary, TwoCategory, all_companions, as_two_category,
                    assemble, identity_companion)
from .embed import _sq_with_names


def compose_companions(D: DoubleCategory, P, Q) -> CompanionWitness:
    """Companion pair of ``Q.f ∘ P.f`` pasted from ``P`` then ``Q``."""
    f, u, phi, psi = P
    f2, u2, phi2, psi2 = Q
    new_phi = D.vpaste(D.hpaste(phi, D.e[f2]), D.hpaste(D.idsq[u2], phi2))
    new_psi = D.vpaste(psi, D.hpaste(D.e[f], psi2))
    return CompanionWitness(D.hcompose(f, f2), D.vcompose(u, u2), new_phi, new_psi)


def _witness_label(P):
    return f"<{P.f},{P.u},{P.phi},{P.psi}>"


def _companion_2cat_with_names(D: DoubleCategory):
    def build():
        pairs = list(all_companions(D))
        known = set(pairs)
        ident = {a: identity_companion(D, a) for a in D.objects}
        src = {P: D.hsrc(P.f) for P in pairs}
        tgt = {P: D.htgt(P.f) for P in pairs}
        by_src = {}
        for P in pairs:
            by_src.setdefault(src[P], []).append(P)
        comp = {}
        for P in pairs:
            for Q in by_src.get(tgt[P], ()):
                R = compose_companions(D, P, Q)
                if R not in known:
                    raise AssertionError(f"pasted pair {R} is not a companion pair")
                comp[(P, Q)] = R
        by_ends = {}
        for P in pairs:
            by_ends.setdefault((src[P], tgt[P]), []).append(P)
        cells = {}
        for group in by_ends.values():
            for P in group:
                for Q in group:
                    for alpha in D.globular(P.f, Q.f):
                        cells[(P, Q, alpha)] = SquareBoundary(
                            P, Q, ident[src[P]], ident[tgt[P]])
        by_top = {}
        by_left = {}
        for key in cells:
            by_top.setdefault(key[0], []).append(key)
            by_left.setdefault(src[key[0]], []).append(key)
        sq_vcomp = {(x, y): (x[0], y[1], D.vpaste(x[2], y[2]))
                    for x in cells for y in by_top.get(x[1], ())}
        sq_hcomp = {(x, y): (comp[(x[0], y[0])], comp[(x[1], y[1])], D.hpaste(x[2], y[2]))
                    for x in cells for y in by_left.get(tgt[x[0]], ())}
        idents = {ident[a] for a in D.objects}
        counts = {}
        for P in pairs:
            counts[(P.f, P.u)] = counts.get((P.f, P.u), 0) + 1

        def label(key):
            if isinstance(key, CompanionWitness):
                if counts[(key.f, key.u)] == 1:
                    return f"<{key.f},{key.u}>"
                return _witness_label(key)
            if isinstance(key, tuple) and len(key) == 3 and key[0] in known:
                return f"{key[2]}:{label(key[0])}=>{label(key[1])}"
            return str(key)

        return assemble(
            objects=D.objects, hmor={P: (src[P], tgt[P]) for P in pairs},
            vmor={ident[a]: (a, a) for a in D.objects},
            hcomp=comp,
            vcomp={(ident[a], ident[a]): ident[a] for a in D.objects},
            squares=cells, sq_hcomp=sq_hcomp, sq_vcomp=sq_vcomp,
            hid=ident, vid=ident,
            e={P: (P, P, D.e[P.f]) for P in pairs},
            idsq={i: (i, i, D.e[i.f]) for i in idents},
            label=label, cls=TwoCategory)
    return D.memo("R", build)


def companion_2cat(D: DoubleCategory) -> TwoCategory:
    """1-cells are companion pairs, 2-cells P ⇒ Q are globular squares P.f ⇒ Q.f."""
    return _companion_2cat_with_names(D)[0]


def companion_1cell_name(D: DoubleCategory, P) -> str:
    return _companion_2cat_with_names(D)[1].hmor[CompanionWitness(*P)]


def companion_2cell_name(D: DoubleCategory, P, Q, alpha) -> str:
    return _companion_2cat_with_names(D)[1].squares[(P, Q, alpha)]


def companion_2cat_keys(D: DoubleCategory):
    """Inverse naming: 1-cell name -> witness and 2-cell name -> (P, Q, α)."""
    def build():
        naming = _companion_2cat_with_names(D)[1]
        return ({v: CompanionWitness(*k) for k, v in naming.hmor.items()},
                {v: k for k, v in naming.squares.items()})
    return D.memo("R_keys", build)


def companion_2cat_functor(F: DoubleFunctor) -> DoubleFunctor:
    S, s_names = _companion_2cat_with_names(F.source)
    T, t_names = _companion_2cat_with_names(F.target)

    def image(P):
        return CompanionWitness(F.h(P.f), F.v(P.u), F.sq(P.phi), F.sq(P.psi))

    on_hmor = {name: t_names.hmor[image(CompanionWitness(*P))] for P, name in s_names.hmor.items()}
    on_vmor = {S.vid[a]: T.vid[F.obj(a)] for a in S.objects}
    on_squares = {name: t_names.squares[(image(P), image(Q), F.sq(alpha))]
                  for (P, Q, alpha), name in s_names.squares.items()}
    return DoubleFunctor(S, T, dict(F.on_objects), on_hmor, on_vmor, on_squares)


def sq_unit(C) -> DoubleFunctor:
    """C → R(Sq C): a 1-cell f goes to its canonical companion pair in Sq C."""
    C = as_two_category(C)
    Sq, sq_names = _sq_with_names(C)
    R, r_names = _companion_2cat_with_names(Sq)

    def witness(f):
        a, b = C.hmor[f]
        ia, ib = C.hid[a], C.hid[b]
        phi = sq_names.squares[(f, ib, f, ib, C.e[f])]
        psi = sq_names.squares[(ia, f, ia, f, C.e[f])]
        return CompanionWitness(f, f, phi, psi)

    on_hmor = {f: r_names.hmor[witness(f)] for f in C.hmor}
    on_squares = {}
    for alpha, b in C.squares.items():
        a, c = C.hmor[b.top]
        cell = sq_names.squares[(b.top, b.bottom, C.hid[a], C.hid[c], alpha)]
        on_squares[alpha] = r_names.squares[(witness(b.top), witness(b.bottom), cell)]
    return DoubleFunctor(C, R, {a: a for a in C.objects}, on_hmor,
                         {u: R.vid[C.vsrc(u)] for u in C.vmor}, on_squares)
