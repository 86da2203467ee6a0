"""Generating cells as finite instance semantics.

A cell shape ``i: S → T`` is never materialised.  Instead it knows how to list
the functors ``S → D`` (domain instances) and ``T → D`` (codomain instances)
as tuples of cell names, and how a codomain instance restricts along ``i``.
Each tuple comes with a kind signature over "o", "h", "v", "s" so a double
functor can act on it entry by entry.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..constructions import (all_adjoint_equivalences, transpose,
                             transpose_square_names, underlying)
from ..core import (DoubleCategory, SquareBoundary, all_companions,
                    all_conjoints, invert_square)
from ..errors import UnknownSet, UnknownShape
from .search import all_gregarious_adjoint_equivalences

_SWAP = {"o": "o", "h": "v", "v": "h", "s": "s"}


@dataclass(frozen=True)
class CellShape:
    name: str
    dom_kinds: tuple
    cod_kinds: tuple
    restrict_index: tuple
    dom: Callable
    cod: Callable
    description: str = ""

    def restrict(self, y: tuple) -> tuple:
        return tuple(y[i] for i in self.restrict_index)

    def image(self, F, x: tuple, side: str) -> tuple:
        kinds = self.dom_kinds if side == "dom" else self.cod_kinds
        return tuple(F.map(k, n) for k, n in zip(kinds, x))

    def instances(self, side: str, D: DoubleCategory) -> tuple:
        build = self.dom if side == "dom" else self.cod
        return D.memo(("instances", self.name, side), lambda: tuple(build(D)))

    def transposed(self, name: str, description: str = "") -> "CellShape":
        """The same cell read in the transposed double category."""
        base = self

        def back(kinds, side):
            def run(D):
                T = transpose(D)
                inverse = {v: k for k, v in transpose_square_names(D).items()}
                return [tuple(inverse[n] if k == "s" else n for k, n in zip(kinds, x))
                        for x in base.instances(side, T)]
            return run

        return CellShape(name, tuple(_SWAP[k] for k in self.dom_kinds),
                         tuple(_SWAP[k] for k in self.cod_kinds), self.restrict_index,
                         back(self.dom_kinds, "dom"), back(self.cod_kinds, "cod"),
                         description)


# -- instance builders ----------------------------------------------------


def _objects(D):
    return [(a,) for a in D.objects]


def _object_pairs(D):
    return [(a, b) for a in D.objects for b in D.objects]


def _hmor(D):
    return [(s, t, f) for f, (s, t) in D.hmor.items()]


def _vmor(D):
    return [(s, t, u) for u, (s, t) in D.vmor.items()]


def _boundaries(D):
    out = []
    for t, (a, b) in D.hmor.items():
        for l in D.vout(a):
            for r in D.vout(b):
                for bot in D.hhom(D.vtgt(l), D.vtgt(r)):
                    out.append((t, bot, l, r))
    return out


def _squares(D):
    return [(*b, a) for a, b in D.squares.items()]


def _parallel_pairs(D):
    return [(a, c) for a, b in D.squares.items() for c in D.with_boundary(b)]


def _single_squares(D):
    return [(a,) for a in D.squares]


def _companions(D):
    return [(*D.hmor[w.f], *w) for w in all_companions(D)]


def _conjoints(D):
    return [(*D.hmor[w.f], *w) for w in all_conjoints(D)]


def _gregarious(D):
    return [w.as_tuple(D) for w in all_gregarious_adjoint_equivalences(D)]


def _h_adjoint_equivalences(D):
    H = underlying("H", D)
    return [(*D.hmor[d.f], *d) for d in all_adjoint_equivalences(H)]


def _globular_cells(D):
    return [(*D.hmor[b.top], b.top, b.bottom, a) for a, b in D.squares.items()
            if D.is_h_globular(a)]


def _invertible_globular(D):
    out = []
    for a, b in D.squares.items():
        if not D.is_h_globular(a):
            continue
        inv = invert_square("vertical", a, D)
        if inv is not None:
            out.append((*D.hmor[b.top], b.top, b.bottom, a, inv))
    return out


def _unit(D):
    return [()]


_W = ("o", "o", "h", "v", "s", "s", "h", "v", "s", "s", "s", "s")
_COMPANION = ("o", "o", "h", "v", "s", "s")
_SIGMA_I = ("o", "o", "h", "h", "s", "s")

_BASE = [
    CellShape("I.attach-object", (), ("o",), (), _unit, _objects,
              "empty → point"),
    CellShape("I.attach-hmor", ("o", "o"), ("o", "o", "h"), (0, 1), _object_pairs, _hmor,
              "two points → horizontal arrow"),
    CellShape("I.attach-vmor", ("o", "o"), ("o", "o", "v"), (0, 1), _object_pairs, _vmor,
              "two points → vertical arrow"),
    CellShape("I.square-filler", ("h", "h", "v", "v"), ("h", "h", "v", "v", "s"),
              (0, 1, 2, 3), _boundaries, _squares, "boundary of a square → square"),
    CellShape("I.parallel-squares", ("s", "s"), ("s",), (0, 0), _parallel_pairs,
              _single_squares, "two parallel squares → one square"),
    CellShape("J0.unit-SqEadj", ("o",), _W, (0,), _objects, _gregarious,
              "point → gregarious adjoint equivalence"),
    CellShape("J0.H2-HSigmaI", ("o", "o", "h"), _SIGMA_I, (0, 1, 2), _hmor, _invertible_globular,
              "horizontal arrow → invertible globular 2-cell"),
    CellShape("J.HEadj-SqEadj", ("o", "o", "h", "h", "s", "s"), _W, (0, 1, 2, 6, 10, 11),
              _h_adjoint_equivalences, _gregarious,
              "horizontal adjoint equivalence → gregarious adjoint equivalence"),
    CellShape("J.H2-Sq2", ("o", "o", "h"), _COMPANION, (0, 1, 2), _hmor, _companions,
              "horizontal arrow → companion pair"),
    CellShape("J.V2-Sq2", ("o", "o", "v"), _COMPANION, (0, 1, 3), _vmor, _companions,
              "vertical arrow → companion pair"),
    CellShape("J.H2-Sq2vop", ("o", "o", "h"), _COMPANION, (0, 1, 2), _hmor, _conjoints,
              "horizontal arrow → conjoint pair"),
    CellShape("J.V2-Sq2vop", ("o", "o", "v"), _COMPANION, (1, 0, 3), _vmor, _conjoints,
              "vertical arrow → conjoint pair"),
    CellShape("J.Sq2-SqEadj", _COMPANION, _W, (0, 1, 2, 3, 4, 5), _companions, _gregarious,
              "companion pair → gregarious adjoint equivalence"),
    CellShape("J.HSigma2-HSigmaI", ("o", "o", "h", "h", "s"), _SIGMA_I, (0, 1, 2, 3, 4),
              _globular_cells, _invertible_globular,
              "globular 2-cell → invertible globular 2-cell"),
]

CATALOG = {s.name: s for s in _BASE}
CATALOG["J0.V2-VSigmaI"] = CATALOG["J0.H2-HSigmaI"].transposed(
    "J0.V2-VSigmaI", "vertical arrow → invertible vertical 2-cell")
CATALOG["J.VSigma2-VSigmaI"] = CATALOG["J.HSigma2-HSigmaI"].transposed(
    "J.VSigma2-VSigmaI", "vertical globular 2-cell → invertible one")


def cell_shape(name: str) -> CellShape:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownShape(name) from None


def _transposed_name(name: str) -> str:
    return name + "^t"


def transposed_shape(shape: CellShape) -> CellShape:
    """Transpose of a catalog shape; J0 shapes map to J0 shapes."""
    pairs = {"J0.H2-HSigmaI": "J0.V2-VSigmaI", "J0.V2-VSigmaI": "J0.H2-HSigmaI",
             "J.HSigma2-HSigmaI": "J.VSigma2-VSigmaI", "J.VSigma2-VSigmaI": "J.HSigma2-HSigmaI"}
    if shape.name in pairs:
        return CATALOG[pairs[shape.name]]
    name = _transposed_name(shape.name)
    if name not in CATALOG:
        CATALOG[name] = shape.transposed(name, f"transpose of {shape.name}")
    return CATALOG[name]


_I = ["I.attach-object", "I.attach-hmor", "I.attach-vmor", "I.square-filler",
      "I.parallel-squares"]
_J0 = ["J0.unit-SqEadj", "J0.H2-HSigmaI", "J0.V2-VSigmaI"]
_J_TR = _J0 + ["J.H2-Sq2", "J.V2-Sq2"]
_J_TR_LADJ = _J_TR + ["J.H2-Sq2vop"]

_SETS = {
    "I": _I,
    "J0": _J0,
    "J_whi": _J0 + ["J.HEadj-SqEadj"],
    "J_heqp": _J0 + ["J.H2-Sq2", "J.H2-Sq2vop"],
    "J_tr": _J_TR,
    "J_tr_ladj": _J_TR_LADJ,
    "J_tr_adj": _J_TR_LADJ + ["J.V2-Sq2vop"],
    "J_tr_gpd": _J_TR + ["J.Sq2-SqEadj", "J.HSigma2-HSigmaI", "J.VSigma2-VSigmaI"],
    "J_empty_or_ctr": _J0 + _I[1:],
    "J_ctr": _J0 + _I,
}

# obtained from the sets above by transposing the cells beyond J0
_TRANSPOSED = {"J_wvi": "J_whi", "J_veqp": "J_heqp", "J_tr_radj": "J_tr_ladj"}

SET_NAMES = ("I", "J0", "J_whi", "J_heqp", "J_veqp", "J_tr", "J_tr_ladj", "J_tr_radj",
             "J_tr_adj", "J_tr_gpd", "J_empty_or_ctr", "J_ctr", "J_wvi")


def generating_set(name: str) -> list:
    """The named list of cell shapes."""
    if name in _SETS:
        return [CATALOG[n] for n in _SETS[name]]
    if name in _TRANSPOSED:
        base = generating_set(_TRANSPOSED[name])
        return [CATALOG[n] for n in _J0] + [transposed_shape(s) for s in base[len(_J0):]]
    raise UnknownSet(name)


def is_certified(shape: CellShape) -> bool:
    """Whether the shape is one of the catalogued cells (or a catalogued transpose)."""
    return CATALOG.get(shape.name) is shape
