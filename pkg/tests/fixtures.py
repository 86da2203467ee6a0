"""Seeded violation fixtures: valid categories with one table entry broken."""
from __future__ import annotations

from dblcat.constructions import shape
from dblcat.core import DoubleCategory, SquareBoundary, check_axioms


def _rebuild(D: DoubleCategory, **tables) -> DoubleCategory:
    parts = dict(objects=D.objects, hmor=D.hmor, vmor=D.vmor, hcomp=D.hcomp, vcomp=D.vcomp,
                 squares=D.squares, sq_hcomp=D.sq_hcomp, sq_vcomp=D.sq_vcomp,
                 hid=D.hid, vid=D.vid, e=D.e, idsq=D.idsq)
    parts.update(tables)
    return DoubleCategory(**parts)


def broken_interchange() -> DoubleCategory:
    """The walking square with one vertical composite redirected."""
    D = shape("HxV")
    sq_vcomp = dict(D.sq_vcomp)
    sq_vcomp[("(e:f,idsq:u)", "e:(f,id:1)")] = "e:(f,id:0)"
    return _rebuild(D, sq_vcomp=sq_vcomp)


def broken_associativity() -> DoubleCategory:
    """The free square on H2 with one horizontal composite redirected."""
    D = shape("Sq2")
    sq_hcomp = dict(D.sq_hcomp)
    sq_hcomp[("[id:0|f|id:0|f]", "[f|id:1|f|id:1]")] = "box:1"
    return _rebuild(D, sq_hcomp=sq_hcomp)


def broken_corners() -> DoubleCategory:
    """The walking square whose top edge starts at the wrong corner."""
    D = shape("HxV")
    squares = dict(D.squares)
    squares["(e:f,idsq:u)"] = SquareBoundary(*squares["(e:f,idsq:u)"])._replace(top="(f,id:1)")
    return _rebuild(D, squares=squares)


SEEDED_VIOLATIONS = {
    "interchange": (lambda: check_axioms(broken_interchange()), "interchange"),
    "associativity": (lambda: check_axioms(broken_associativity()), "sq-h-assoc"),
    "corners": (lambda: check_axioms(broken_corners()), "square-corners"),
}
