"""Fibrancy across the model structures, direct structural checks and the recipe audit."""
from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import equivalences, terminal_functor, underlying
from .core import DoubleCategory, DoubleFunctor, companions_of, conjoints_of
from .equivalences import (Verdict, is_gregarious_fibration, is_trivial_fibration,
                           is_weakly_h_invertible, is_weakly_v_invertible)
from .errors import UncertifiedShape
from .lifting import (CellShape, FibrancyResult, generating_set, is_certified,
                      is_naive_fibrant, solve_lifting)

# model structure -> generating set of its naive fibrations
STRUCTURES = {
    "greg": "J0",
    "whi": "J_whi",
    "wvi": "J_wvi",
    "h_eqp": "J_heqp",
    "v_eqp": "J_veqp",
    "tr": "J_tr",
    "tr_ladj": "J_tr_ladj",
    "tr_radj": "J_tr_radj",
    "tr_adj": "J_tr_adj",
    "tr_gpd": "J_tr_gpd",
    "empty_or_ctr": "J_empty_or_ctr",
    "ctr": "J_ctr",
}


@dataclass
class FibrancyTable:
    entries: dict = field(default_factory=dict)

    def __getitem__(self, name) -> FibrancyResult:
        return self.entries[name]

    def __getattr__(self, name):
        entries = self.__dict__.get("entries", {})
        if name in entries:
            return entries[name].fibrant
        raise AttributeError(name)

    def __iter__(self):
        return iter(self.entries)

    def items(self):
        return self.entries.items()

    def fibrant_in(self) -> list:
        return [k for k, r in self.entries.items() if r.fibrant]


def classify(D: DoubleCategory, bound=None) -> FibrancyTable:
    """Naive fibrancy of ``D`` for every model structure in STRUCTURES."""
    return FibrancyTable({k: is_naive_fibrant(D, s, bound) for k, s in STRUCTURES.items()})


# -- structural checks ----------------------------------------------------


def _first_missing(items, test):
    for x in items:
        if not test(x):
            return x
    return None


def _comp_h(D):
    return _first_missing(D.hmor, lambda f: companions_of(D, f, "h"))


def _comp_v(D):
    return _first_missing(D.vmor, lambda u: companions_of(D, u, "v"))


def _conj_h(D):
    return _first_missing(D.hmor, lambda f: conjoints_of(D, f, "h"))


def _conj_v(D):
    return _first_missing(D.vmor, lambda u: conjoints_of(D, u, "v"))


def _all(*checks):
    """Run (label, thunk) pairs in order; the first non-None result is the witness."""
    for label, check in checks:
        x = check()
        if x is not None:
            return Verdict(False, (label, x))
    return Verdict(True)


def _equip_h(D):
    return _all(("no-companion-h", lambda: _comp_h(D)), ("no-conjoint-h", lambda: _conj_h(D)))


def _equip_v(D):
    return _all(("no-companion-v", lambda: _comp_v(D)), ("no-conjoint-v", lambda: _conj_v(D)))


def _transposable(D):
    return _all(("no-companion-h", lambda: _comp_h(D)), ("no-companion-v", lambda: _comp_v(D)))


def _whi(D):
    eq = equivalences(underlying("H", D))
    return _all(("no-companion-h",
                 lambda: _first_missing(sorted(eq, key=list(D.hmor).index),
                                        lambda f: companions_of(D, f, "h"))))


def _wvi(D):
    eq = equivalences(underlying("V", D))
    return _all(("no-companion-v",
                 lambda: _first_missing(sorted(eq, key=list(D.vmor).index),
                                        lambda u: companions_of(D, u, "v"))))


def _double_groupoid(D):
    eq_h, eq_v = equivalences(underlying("H", D)), equivalences(underlying("V", D))
    return _all(
        ("not-h-equivalence", lambda: _first_missing(D.hmor, lambda f: f in eq_h)),
        ("not-v-equivalence", lambda: _first_missing(D.vmor, lambda u: u in eq_v)),
        ("not-weakly-h-invertible",
         lambda: _first_missing(D.squares, lambda a: is_weakly_h_invertible(D, a))),
        ("not-weakly-v-invertible",
         lambda: _first_missing(D.squares, lambda a: is_weakly_v_invertible(D, a))),
    )


def _contractible(D):
    r = is_trivial_fibration(terminal_functor(D))
    return Verdict(True) if r.verdict else Verdict(False, tuple(r.first))


def _free_category(objects, mor, comp, ident) -> tuple:
    """None if the finite category is free, else a witness of why not."""
    identities = set(ident.values())
    non_id = [m for m in mor if m not in identities]
    for m in non_id:
        s, t = mor[m]
        if s == t:
            return ("endomorphism", m)
    decomposable = {gf for (f, g), gf in comp.items() if f not in identities and g not in identities}
    indecomposable = [m for m in non_id if m not in decomposable]
    out = {}
    for m in indecomposable:
        out.setdefault(mor[m][0], []).append(m)
    seen = {}
    stack = [((m,), m) for m in indecomposable]
    while stack:
        path, value = stack.pop()
        if value in seen and seen[value] != path:
            return ("two-factorizations", value, seen[value], path)
        seen[value] = path
        visited = {mor[path[0]][0]} | {mor[m][1] for m in path}
        for n in out.get(mor[path[-1]][1], ()):
            if mor[n][1] in visited:
                return ("cycle", path + (n,))
            stack.append((path + (n,), comp[(value, n)]))
    for m in non_id:
        if m not in seen:
            return ("no-factorization", m)
    return None


def _cofibrant_object(D):
    return _all(
        ("horizontal-not-free", lambda: _free_category(D.objects, D.hmor, D.hcomp, D.hid)),
        ("vertical-not-free", lambda: _free_category(D.objects, D.vmor, D.vcomp, D.vid)),
    )


def _and(*checks):
    for check in checks:
        r = check()
        if not r.holds:
            return r
    return Verdict(True)


PROPERTIES = {
    "transposable": _transposable,
    "equip_h": _equip_h,
    "equip_v": _equip_v,
    "whi": _whi,
    "wvi": _wvi,
    "double_groupoid": _double_groupoid,
    "contractible": _contractible,
    "cofibrant_object": _cofibrant_object,
}

# structural description of the fibrant objects of each model structure
FIBRANT_OBJECTS = {
    "greg": lambda D: Verdict(True),
    "whi": _whi,
    "wvi": _wvi,
    "h_eqp": _equip_h,
    "v_eqp": _equip_v,
    "tr": _transposable,
    "tr_ladj": lambda D: _and(lambda: _equip_h(D), lambda: _transposable(D)),
    "tr_radj": lambda D: _and(lambda: _transposable(D), lambda: _equip_v(D)),
    "tr_adj": lambda D: _and(lambda: _equip_h(D), lambda: _equip_v(D)),
    "tr_gpd": lambda D: _and(lambda: _transposable(D), lambda: _double_groupoid(D)),
    "empty_or_ctr": lambda D: Verdict(True) if not D.objects else _contractible(D),
    "ctr": _contractible,
}


def property_check(D: DoubleCategory, prop: str) -> Verdict:
    """Decide a structural property directly, without lifting problems."""
    try:
        check = PROPERTIES[prop]
    except KeyError:
        raise ValueError(f"unknown property {prop!r}; expected one of {sorted(PROPERTIES)}") from None
    return check(D)


def structural_fibrancy(D: DoubleCategory, structure: str) -> Verdict:
    """The fibrant-object description of a model structure, checked structurally."""
    return FIBRANT_OBJECTS[structure](D)


# -- recipe audit ---------------------------------------------------------

AUDIT_HEADER = ("falsification run: a pass means no counterexample exists in this "
                "corpus, not that the recipe holds in general")


@dataclass
class AuditReport:
    header: str
    passed: bool
    checked: list
    skipped: list
    counterexamples: list


def _certify(shapes) -> list:
    shapes = list(shapes)
    for s in shapes:
        if not isinstance(s, CellShape) or not is_certified(s):
            raise UncertifiedShape(f"{getattr(s, 'name', s)!r} is not a catalogued cell")
    names = {s.name for s in shapes}
    missing = [s.name for s in generating_set("J0") if s.name not in names]
    if missing:
        raise UncertifiedShape(f"generating set lacks the cells {missing}")
    return shapes


def audit_recipe(Jset, corpus, bound=None) -> AuditReport:
    """Check that gregarious fibrations between fibrant objects lift against ``Jset``.

    ``corpus`` holds functors and double categories; a double category D
    stands for its terminal functor.  Every counterexample is reported as
    (corpus index, shape name, counterexample).
    """
    shapes = _certify(generating_set(Jset) if isinstance(Jset, str) else Jset)
    fibrant = {}

    def is_fibrant(D):
        key = id(D)
        if key not in fibrant:
            fibrant[key] = (D, is_naive_fibrant(D, shapes, bound).fibrant)
        return fibrant[key][1]

    checked, skipped, found = [], [], []
    for i, item in enumerate(corpus):
        F = item if isinstance(item, DoubleFunctor) else terminal_functor(item)
        if not (is_fibrant(F.source) and is_fibrant(F.target)
                and is_gregarious_fibration(F).verdict):
            skipped.append(i)
            continue
        checked.append(i)
        for s in shapes:
            r = solve_lifting(F, s, bound)
            if not r.holds:
                found.append((i, s.name, r.counterexample))
    return AuditReport(AUDIT_HEADER, not found, checked, skipped, found)


__all__ = [
    "AUDIT_HEADER", "AuditReport", "FIBRANT_OBJECTS", "FibrancyTable", "PROPERTIES",
    "STRUCTURES", "audit_recipe", "classify", "property_check", "structural_fibrancy",
]
