"""Right lifting properties decided by exhaustive instance enumeration."""
from __future__ import annotations

from typing import NamedTuple

from ..constructions import terminal_functor
from ..core import DoubleCategory, DoubleFunctor
from ..errors import BoundExceeded
from .shapes import CellShape, generating_set


class LiftingResult(NamedTuple):
    holds: bool
    counterexample: tuple = None      # (dom instance upstairs, cod instance downstairs)

    def __bool__(self):
        return self.holds


class FibrancyResult(NamedTuple):
    fibrant: bool
    shape: str = None
    witness: tuple = None

    def __bool__(self):
        return self.fibrant


def enumerate_instances(shape: CellShape, side: str, D: DoubleCategory, bound=None) -> tuple:
    """All instances of one side of ``shape`` in ``D``, in canonical order."""
    if side not in ("dom", "cod"):
        raise ValueError(f"side must be 'dom' or 'cod', not {side!r}")
    out = shape.instances(side, D)
    if bound is not None and len(out) > bound:
        raise BoundExceeded(shape.name, bound)
    return out


def solve_lifting(F: DoubleFunctor, shape: CellShape, bound=None) -> LiftingResult:
    """Decide whether ``F`` has the right lifting property against ``shape``."""
    upstairs = enumerate_instances(shape, "cod", F.source, bound)
    lifted = {(shape.restrict(y), shape.image(F, y, "cod")) for y in upstairs}
    downstairs = {}
    for y in enumerate_instances(shape, "cod", F.target, bound):
        downstairs.setdefault(shape.restrict(y), []).append(y)
    for x in enumerate_instances(shape, "dom", F.source, bound):
        for y in downstairs.get(shape.image(F, x, "dom"), ()):
            if (x, y) not in lifted:
                return LiftingResult(False, (x, y))
    return LiftingResult(True)


def lifts_against_all(F: DoubleFunctor, shapes, bound=None):
    """First failing (shape name, counterexample) over ``shapes``, or None."""
    for s in shapes:
        r = solve_lifting(F, s, bound)
        if not r.holds:
            return s.name, r.counterexample
    return None


def is_naive_fibrant(D: DoubleCategory, setname, bound=None) -> FibrancyResult:
    """Right lifting property of ``D → One`` against a generating set.

    ``setname`` is a set name or an explicit list of shapes.  The witness is
    the first domain instance that admits no extension.
    """
    shapes = generating_set(setname) if isinstance(setname, str) else list(setname)
    F = terminal_functor(D)
    for s in shapes:
        r = solve_lifting(F, s, bound)
        if not r.holds:
            return FibrancyResult(False, s.name, r.counterexample[0])
    return FibrancyResult(True)
