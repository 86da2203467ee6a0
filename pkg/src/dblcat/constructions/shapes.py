"""The fixed catalog of small double categories and 2-category seeds."""
from __future__ import annotations

from functools import lru_cache

from ..core import (DoubleCategory, SquareBoundary, TwoCategory,
                    validate_double_category, validate_two_category)
from ..errors import UnknownShape
from .basic import empty, one, product, transpose, vop
from .embed import embed

SHAPE_NAMES = ("Empty", "One", "H2", "V2", "HxV", "BoundaryHxV", "ParSq", "Sq2",
               "Sq2vop", "HSigma2", "HSigmaI", "VSigma2", "VSigmaI")

# the non-identity square of HxV and its parallel copy in ParSq
WALKING_SQUARE = "(e:f,idsq:u)"
PARALLEL_COPY = WALKING_SQUARE + "'"

_SEEDS = {
    "One": {"objects": ["*"]},
    "Two": {"objects": ["0", "1"], "hmor": [{"name": "f", "src": "0", "tgt": "1"}]},
    "I": {
        "objects": ["0", "1"],
        "hmor": [{"name": "f", "src": "0", "tgt": "1"}, {"name": "g", "src": "1", "tgt": "0"}],
        "hcomp": [["g", "f", "id:0"], ["f", "g", "id:1"]],
    },
    "Sigma2": {
        "objects": ["0", "1"],
        "hmor": [{"name": "f", "src": "0", "tgt": "1"}, {"name": "g", "src": "0", "tgt": "1"}],
        "squares": [{"name": "alpha", "top": "f", "bottom": "g", "left": "id:0", "right": "id:1"}],
    },
    "SigmaI": {
        "objects": ["0", "1"],
        "hmor": [{"name": "f", "src": "0", "tgt": "1"}, {"name": "g", "src": "0", "tgt": "1"}],
        "squares": [
            {"name": "alpha", "top": "f", "bottom": "g", "left": "id:0", "right": "id:1"},
            {"name": "alpha^-1", "top": "g", "bottom": "f", "left": "id:0", "right": "id:1"},
        ],
        "sq_vcomp": [["alpha", "alpha^-1", "e:f"], ["alpha^-1", "alpha", "e:g"]],
    },
    "Pair": {
        "objects": ["0", "1", "2"],
        "hmor": [{"name": "f", "src": "0", "tgt": "1"}, {"name": "g", "src": "1", "tgt": "2"},
                 {"name": "h", "src": "0", "tgt": "2"}],
        "hcomp": [["g", "f", "h"]],
    },
    "Z2": {
        "objects": ["*"],
        "hmor": [{"name": "s", "src": "*", "tgt": "*"}],
        "hcomp": [["s", "s", "id:*"]],
    },
}

SEED_NAMES = tuple(_SEEDS)


@lru_cache(maxsize=None)
def seed(name: str) -> TwoCategory:
    """A 2-category seed: One, Two, I, Sigma2, SigmaI, Pair or Z2."""
    try:
        doc = _SEEDS[name]
    except KeyError:
        raise UnknownShape(name) from None
    return validate_two_category(doc)


def _hxv():
    h2 = embed("H", seed("Two"))
    v2 = validate_double_category(
        {"objects": ["0", "1"], "vmor": [{"name": "u", "src": "0", "tgt": "1"}]})
    return h2, v2, product(h2, v2)[0]


def _without(D: DoubleCategory, drop) -> DoubleCategory:
    return DoubleCategory(
        objects=D.objects, hmor=dict(D.hmor), vmor=dict(D.vmor),
        hcomp=dict(D.hcomp), vcomp=dict(D.vcomp),
        squares={a: b for a, b in D.squares.items() if a != drop},
        sq_hcomp={k: c for k, c in D.sq_hcomp.items() if drop not in k and c != drop},
        sq_vcomp={k: c for k, c in D.sq_vcomp.items() if drop not in k and c != drop},
        hid=dict(D.hid), vid=dict(D.vid), e=dict(D.e), idsq=dict(D.idsq))


def _with_parallel_copy(D: DoubleCategory, square, copy) -> DoubleCategory:
    """Add ``copy`` beside ``square``, composing exactly like it with identities."""
    squares = dict(D.squares)
    squares[copy] = D.squares[square]
    sq_hcomp, sq_vcomp = dict(D.sq_hcomp), dict(D.sq_vcomp)
    b = D.squares[square]
    sq_hcomp[(D.idsq[b.left], copy)] = copy
    sq_hcomp[(copy, D.idsq[b.right])] = copy
    sq_vcomp[(D.e[b.top], copy)] = copy
    sq_vcomp[(copy, D.e[b.bottom])] = copy
    return DoubleCategory(D.objects, dict(D.hmor), dict(D.vmor), dict(D.hcomp),
                          dict(D.vcomp), squares, sq_hcomp, sq_vcomp,
                          dict(D.hid), dict(D.vid), dict(D.e), dict(D.idsq))


def _build(name: str) -> DoubleCategory:
    if name == "Empty":
        return empty()
    if name == "One":
        return one()
    if name == "H2":
        return embed("H", seed("Two"))
    if name == "V2":
        return _hxv()[1]
    if name == "HxV":
        return _hxv()[2]
    if name == "BoundaryHxV":
        return _without(_hxv()[2], WALKING_SQUARE)
    if name == "ParSq":
        return _with_parallel_copy(_hxv()[2], WALKING_SQUARE, PARALLEL_COPY)
    if name == "Sq2":
        return embed("Sq", seed("Two"))
    if name == "Sq2vop":
        return vop(embed("Sq", seed("Two")))
    if name == "HSigma2":
        return embed("H", seed("Sigma2"))
    if name == "HSigmaI":
        return embed("H", seed("SigmaI"))
    if name == "VSigma2":
        return transpose(embed("H", seed("Sigma2")))
    if name == "VSigmaI":
        return transpose(embed("H", seed("SigmaI")))
    raise UnknownShape(name)


@lru_cache(maxsize=None)
def shape(name: str) -> DoubleCategory:
    """A validated catalog double category (see SHAPE_NAMES)."""
    if name not in SHAPE_NAMES:
        raise UnknownShape(name)
    return validate_double_category(_build(name))


def from_category(objects, morphisms=(), comp=()) -> TwoCategory:
    """The locally discrete 2-category on a finite category.

    ``morphisms`` holds (name, src, tgt) triples, ``comp`` holds rows
    (g, f, g∘f); compositions with identities may be omitted.
    """
    hmor = []
    for m in morphisms:
        name, s, t = (m["name"], m["src"], m["tgt"]) if isinstance(m, dict) else m
        hmor.append({"name": name, "src": s, "tgt": t})
    return validate_two_category({"objects": list(objects), "hmor": hmor,
                                  "hcomp": [list(r) for r in comp]})

