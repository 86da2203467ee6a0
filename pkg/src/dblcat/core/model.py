"""Finite double categories: the data model, axiom checks and square calculus.

Conventions used throughout the package:

* composition tables are keyed in diagrammatic order, so ``hcomp[(f, g)]`` is
  ``g∘f`` (first ``f``, then ``g``);
* ``sq_hcomp[(a, b)]`` is ``a|b`` (``right(a) == left(b)``) and
  ``sq_vcomp[(a, c)]`` is ``a/c`` (``bottom(a) == top(c)``);
* identity cells have canonical names ``id:A``, ``e:f``, ``idsq:u`` and
  ``box:A`` (the square that is both ``e`` of ``id:A`` and ``idsq`` of ``id:A``).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, NamedTuple

from ..errors import (AxiomViolation, FunctorValidationError,
                     IncompatibleBoundary, MalformedDocument,
                     NotComposable, NotGlobular, PreservationViolation,
                     RaggedGrid, ValidationError)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


class SquareBoundary(NamedTuple):
    top: str
    bottom: str
    left: str
    right: str


def h_identity_name(obj):
    return f"id:{obj}"


def box_name(obj):
    return f"box:{obj}"


def _direction(dir):
    if dir in ("h", HORIZONTAL):
        return HORIZONTAL
    if dir in ("v", VERTICAL):
        return VERTICAL
    raise ValueError(f"unknown direction {dir!r}")


@dataclass(frozen=True, eq=False)
class DoubleCategory:
    objects: tuple
    hmor: dict        # name -> (src, tgt)
    vmor: dict
    hcomp: dict       # (f, g) -> g∘f
    vcomp: dict       # (u, v) -> v∘u
    squares: dict     # name -> SquareBoundary
    sq_hcomp: dict    # (a, b) -> a|b
    sq_vcomp: dict    # (a, c) -> a/c
    hid: dict         # object -> identity hmor
    vid: dict         # object -> identity vmor
    e: dict           # hmor -> vertical identity square e_f
    idsq: dict        # vmor -> horizontal identity square id_u
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def _key(self):
        return (frozenset(self.objects), self.hmor, self.vmor, self.hcomp,
                self.vcomp, self.squares, self.sq_hcomp, self.sq_vcomp,
                self.hid, self.vid, self.e, self.idsq)

    def __eq__(self, other):
        if not isinstance(other, DoubleCategory):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash((frozenset(self.objects), frozenset(self.hmor),
                     frozenset(self.vmor), frozenset(self.squares)))

    def __repr__(self):
        return (f"{type(self).__name__}({len(self.objects)} objects, "
                f"{len(self.hmor)} hmor, {len(self.vmor)} vmor, "
                f"{len(self.squares)} squares)")

    def memo(self, key, build: Callable):
        """Cache a derived value on this (immutable) category."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = build()
            return value

    # -- boundaries -------------------------------------------------------

    def hsrc(self, f):
        return self.hmor[f][0]

    def htgt(self, f):
        return self.hmor[f][1]

    def vsrc(self, u):
        return self.vmor[u][0]

    def vtgt(self, u):
        return self.vmor[u][1]

    def boundary(self, a) -> SquareBoundary:
        return self.squares[a]

    def is_h_identity(self, f):
        return self.hid.get(self.hmor[f][0]) == f

    def is_v_identity(self, u):
        return self.vid.get(self.vmor[u][0]) == u

    def is_identity_square(self, a):
        return a in self._identity_squares

    @property
    def _identity_squares(self):
        return self.memo("identity_squares",
                         lambda: frozenset(self.e.values()) | frozenset(self.idsq.values()))

    def is_h_globular(self, a):
        b = self.squares[a]
        return self.is_v_identity(b.left) and self.is_v_identity(b.right)

    def is_v_globular(self, a):
        b = self.squares[a]
        return self.is_h_identity(b.top) and self.is_h_identity(b.bottom)

    @property
    def is_two_category(self):
        return all(self.is_v_identity(u) for u in self.vmor)

    def corner_compatible(self, b: SquareBoundary) -> bool:
        try:
            top, bottom, left, right = (self.hmor[b.top], self.hmor[b.bottom],
                                        self.vmor[b.left], self.vmor[b.right])
        except KeyError:
            return False
        return (top[0] == left[0] and top[1] == right[0]
                and bottom[0] == left[1] and bottom[1] == right[1])

    # -- indexes ----------------------------------------------------------

    def _index(self, name, table, pos):
        def build():
            out = defaultdict(list)
            for k, v in table.items():
                out[v[pos] if pos is not None else v].append(k)
            return {k: tuple(v) for k, v in out.items()}
        return self.memo(name, build)

    def hhom(self, a, b):
        idx = self.memo("hhom", lambda: _group(self.hmor.items(), lambda kv: kv[1]))
        return idx.get((a, b), ())

    def vhom(self, a, b):
        idx = self.memo("vhom", lambda: _group(self.vmor.items(), lambda kv: kv[1]))
        return idx.get((a, b), ())

    def hout(self, a):
        return self._index("hout", self.hmor, 0).get(a, ())

    def vout(self, a):
        return self._index("vout", self.vmor, 0).get(a, ())

    def with_boundary(self, b) -> tuple:
        idx = self._index("by_boundary", self.squares, None)
        return idx.get(SquareBoundary(*b), ())

    def squares_by(self, side):
        """Map from a morphism to the squares having it on ``side``."""
        pos = SquareBoundary._fields.index(side)
        return self._index("by_" + side, self.squares, pos)

    def globular(self, f, g):
        """Horizontal-globular squares from ``f`` to ``g`` (2-cells f ⇒ g)."""
        a, b = self.hmor[f]
        return self.with_boundary((f, g, self.vid[a], self.vid[b]))

    def vglobular(self, u, v):
        a, b = self.vmor[u]
        return self.with_boundary((self.hid[a], self.hid[b], u, v))

    # -- composition ------------------------------------------------------

    def hcompose(self, f, g):
        """g∘f."""
        try:
            return self.hcomp[(f, g)]
        except KeyError:
            raise NotComposable(HORIZONTAL, f, g) from None

    def vcompose(self, u, v):
        """v∘u."""
        try:
            return self.vcomp[(u, v)]
        except KeyError:
            raise NotComposable(VERTICAL, u, v) from None

    def hpaste(self, a, b):
        """a|b."""
        try:
            return self.sq_hcomp[(a, b)]
        except KeyError:
            raise NotComposable(HORIZONTAL, a, b) from None

    def vpaste(self, a, c):
        """a/c."""
        try:
            return self.sq_vcomp[(a, c)]
        except KeyError:
            raise NotComposable(VERTICAL, a, c) from None

    def hpath(self, *fs):
        out = fs[0]
        for f in fs[1:]:
            out = self.hcompose(out, f)
        return out

    def vpath(self, *us):
        out = us[0]
        for u in us[1:]:
            out = self.vcompose(out, u)
        return out

    def hrow(self, *squares):
        out = squares[0]
        for a in squares[1:]:
            out = self.hpaste(out, a)
        return out

    def vcolumn(self, *squares):
        out = squares[0]
        for a in squares[1:]:
            out = self.vpaste(out, a)
        return out

    def size(self):
        return len(self.objects), len(self.hmor), len(self.vmor), len(self.squares)


class TwoCategory(DoubleCategory):
    """A 2-category stored as a double category with identity verticals only.

    1-cells are the horizontal morphisms, 2-cells ``f ⇒ g`` are the squares
    with top ``f`` and bottom ``g``; ``|`` is horizontal composition of 2-cells
    and ``/`` is vertical composition.
    """

    def cells(self, f, g):
        return self.globular(f, g)

    def whisker_left(self, h, a):
        """h∘a, with ``h`` applied after the 2-cell ``a``."""
        return self.hpaste(a, self.e[h])

    def whisker_right(self, a, k):
        """a∘k, with ``k`` applied before the 2-cell ``a``."""
        return self.hpaste(self.e[k], a)


def _group(items, key):
    out = defaultdict(list)
    for item in items:
        out[key(item)].append(item[0])
    return {k: tuple(v) for k, v in out.items()}


# ---------------------------------------------------------------------------
# Assembly from arbitrary keys


class Naming(NamedTuple):
    objects: dict
    hmor: dict
    vmor: dict
    squares: dict


def assemble(objects, hmor, vmor, hcomp, vcomp, squares, sq_hcomp, sq_vcomp,
             hid, vid, e, idsq, label: Callable[[Hashable], str] = str,
             cls=DoubleCategory):
    """Build a category from tables whose keys are arbitrary hashables.

    ``hmor``/``vmor`` map keys to (src, tgt) keys and ``squares`` maps keys to
    (top, bottom, left, right) keys.  Identity cells get the canonical names,
    every other key is named by ``label``.  Returns ``(category, naming)``
    where ``naming`` maps keys to the chosen names.
    """
    on = {k: label(k) for k in objects}
    hid_of = {hid[a]: a for a in objects}
    vid_of = {vid[a]: a for a in objects}
    hn = {k: h_identity_name(on[hid_of[k]]) if k in hid_of else label(k) for k in hmor}
    vn = {k: h_identity_name(on[vid_of[k]]) if k in vid_of else label(k) for k in vmor}
    e_of = {e[f]: f for f in hmor}
    idsq_of = {idsq[u]: u for u in vmor}
    sn = {}
    for k in squares:
        if k in e_of:
            f = e_of[k]
            sn[k] = box_name(on[hid_of[f]]) if f in hid_of else f"e:{hn[f]}"
        elif k in idsq_of:
            u = idsq_of[k]
            sn[k] = box_name(on[vid_of[u]]) if u in vid_of else f"idsq:{vn[u]}"
        else:
            sn[k] = label(k)
    for what, names in (("object", on), ("hmor", hn), ("vmor", vn), ("square", sn)):
        if len(set(names.values())) != len(names):
            seen, dup = set(), []
            for n in names.values():
                if n in seen:
                    dup.append(n)
                seen.add(n)
            raise ValueError(f"duplicate {what} names: {dup[:5]}")
    D = cls(
        objects=tuple(on[a] for a in objects),
        hmor={hn[k]: (on[s], on[t]) for k, (s, t) in hmor.items()},
        vmor={vn[k]: (on[s], on[t]) for k, (s, t) in vmor.items()},
        hcomp={(hn[f], hn[g]): hn[h] for (f, g), h in hcomp.items()},
        vcomp={(vn[u], vn[v]): vn[w] for (u, v), w in vcomp.items()},
        squares={sn[k]: SquareBoundary(hn[t], hn[b], vn[l], vn[r])
                 for k, (t, b, l, r) in squares.items()},
        sq_hcomp={(sn[a], sn[b]): sn[c] for (a, b), c in sq_hcomp.items()},
        sq_vcomp={(sn[a], sn[b]): sn[c] for (a, b), c in sq_vcomp.items()},
        hid={on[a]: hn[hid[a]] for a in objects},
        vid={on[a]: vn[vid[a]] for a in objects},
        e={hn[f]: sn[e[f]] for f in hmor},
        idsq={vn[u]: sn[idsq[u]] for u in vmor},
    )
    return D, Naming(on, hn, vn, sn)


def as_two_category(D: DoubleCategory) -> TwoCategory:
    if isinstance(D, TwoCategory):
        return D
    if not D.is_two_category:
        raise ValueError("vertical morphisms are not all identities")
    return TwoCategory(D.objects, D.hmor, D.vmor, D.hcomp, D.vcomp, D.squares,
                       D.sq_hcomp, D.sq_vcomp, D.hid, D.vid, D.e, D.idsq)


def plain(D: DoubleCategory) -> DoubleCategory:
    """The same data typed as a plain DoubleCategory."""
    if type(D) is DoubleCategory:
        return D
    return DoubleCategory(D.objects, D.hmor, D.vmor, D.hcomp, D.vcomp, D.squares,
                          D.sq_hcomp, D.sq_vcomp, D.hid, D.vid, D.e, D.idsq)


# ---------------------------------------------------------------------------
# Documents -> DoubleCategory


def _records(doc, key):
    out = {}
    for rec in doc.get(key, []) or []:
        if not isinstance(rec, Mapping):
            raise MalformedDocument(f"{key}: expected an object, got {rec!r}")
        try:
            name = str(rec["name"])
        except KeyError:
            raise MalformedDocument(f"{key}: record without a name: {rec!r}") from None
        if name in out:
            raise MalformedDocument(f"{key}: duplicate name {name!r}")
        out[name] = rec
    return out


def _triples(doc, key):
    out = []
    for row in doc.get(key, []) or []:
        if not isinstance(row, (list, tuple)) or len(row) != 3:
            raise MalformedDocument(f"{key}: expected [x, y, result], got {row!r}")
        out.append(tuple(str(x) for x in row))
    return out


def _fields(rec, names, where):
    try:
        return tuple(str(rec[n]) for n in names)
    except KeyError as exc:
        raise MalformedDocument(f"{where}: missing field {exc.args[0]!r}") from None


def double_category_from_document(doc: Mapping, cls=DoubleCategory) -> DoubleCategory:
    """Resolve names and synthesize omitted identities; no axiom checks."""
    if not isinstance(doc, Mapping):
        raise MalformedDocument("document must be a JSON object")
    objects = tuple(str(a) for a in doc.get("objects", []) or [])
    if len(set(objects)) != len(objects):
        raise MalformedDocument("duplicate object names")
    obj_set = set(objects)
    dangling = []

    def morphisms(key):
        out = {}
        for name, rec in _records(doc, key).items():
            s, t = _fields(rec, ("src", "tgt"), f"{key} {name}")
            for x in (s, t):
                if x not in obj_set:
                    dangling.append((key, name, x))
            out[name] = (s, t)
        for a in objects:
            out.setdefault(h_identity_name(a), (a, a))
        return out

    hmor = morphisms("hmor")
    vmor = morphisms("vmor")
    hid = {a: h_identity_name(a) for a in objects}
    vid = dict(hid)

    squares = {}
    for name, rec in _records(doc, "squares").items():
        t, b, l, r = _fields(rec, SquareBoundary._fields, f"square {name}")
        for x, pool, kind in ((t, hmor, "hmor"), (b, hmor, "hmor"),
                              (l, vmor, "vmor"), (r, vmor, "vmor")):
            if x not in pool:
                dangling.append(("squares", name, x))
        squares[name] = SquareBoundary(t, b, l, r)

    def e_name(f):
        s, t = hmor[f]
        return box_name(s) if f == hid.get(s) else f"e:{f}"

    def idsq_name(u):
        s, t = vmor[u]
        return box_name(s) if u == vid.get(s) else f"idsq:{u}"

    e = {f: e_name(f) for f in hmor}
    idsq = {u: idsq_name(u) for u in vmor}
    for f, a in e.items():
        s, t = hmor[f]
        if s in obj_set and t in obj_set:
            squares.setdefault(a, SquareBoundary(f, f, vid[s], vid[t]))
    for u, a in idsq.items():
        s, t = vmor[u]
        if s in obj_set and t in obj_set:
            squares.setdefault(a, SquareBoundary(hid[s], hid[t], u, u))

    def table(key, pool, swap):
        out = {}
        for x, y, z in _triples(doc, key):
            for w in (x, y, z):
                if w not in pool:
                    dangling.append((key, (x, y, z), w))
            k = (y, x) if swap else (x, y)
            if k in out and out[k] != z:
                dangling.append((key, (x, y, z), "conflicting entry"))
            out[k] = z
        return out

    # hcomp/vcomp rows are [g, f, g∘f]; square rows are [a, b, a|b] / [a, c, a/c]
    hcomp = table("hcomp", hmor, True)
    vcomp = table("vcomp", vmor, True)
    sq_hcomp = table("sq_hcomp", squares, False)
    sq_vcomp = table("sq_vcomp", squares, False)
    if dangling:
        raise MalformedDocument("unresolved identifiers: " + ", ".join(map(repr, dangling[:10])))

    for f, (s, t) in hmor.items():
        hcomp.setdefault((hid[s], f), f)
        hcomp.setdefault((f, hid[t]), f)
    for u, (s, t) in vmor.items():
        vcomp.setdefault((vid[s], u), u)
        vcomp.setdefault((u, vid[t]), u)
    for a, b in squares.items():
        if b.left in idsq and b.right in idsq:
            sq_hcomp.setdefault((idsq[b.left], a), a)
            sq_hcomp.setdefault((a, idsq[b.right]), a)
        if b.top in e and b.bottom in e:
            sq_vcomp.setdefault((e[b.top], a), a)
            sq_vcomp.setdefault((a, e[b.bottom]), a)
    for (f, g), h in list(hcomp.items()):
        sq_hcomp.setdefault((e[f], e[g]), e[h])
    for (u, v), w in list(vcomp.items()):
        sq_vcomp.setdefault((idsq[u], idsq[v]), idsq[w])

    return cls(objects, hmor, vmor, hcomp, vcomp, squares, sq_hcomp, sq_vcomp,
               hid, vid, e, idsq)


# ---------------------------------------------------------------------------
# Axioms


def check_axioms(D: DoubleCategory) -> list:
    """Every violated double-category law, each with a witness tuple."""
    out = []

    def bad(law, *witness):
        out.append(AxiomViolation(law, witness))

    for a in D.objects:
        for kind, mor, ident in (("h", D.hmor, D.hid), ("v", D.vmor, D.vid)):
            i = ident.get(a)
            if i is None or mor.get(i) != (a, a):
                bad(f"{kind}-identity", a)
    if out:
        return out

    for kind, mor, comp, ident, out_of in (("h", D.hmor, D.hcomp, D.hid, D.hout),
                                           ("v", D.vmor, D.vcomp, D.vid, D.vout)):
        for (f, g), h in comp.items():
            if mor[f][1] != mor[g][0]:
                bad(f"{kind}comp-domain", f, g)
            elif mor[h] != (mor[f][0], mor[g][1]):
                bad(f"{kind}comp-boundary", f, g, h)
        for f, (s, t) in mor.items():
            for g in out_of(t):
                if (f, g) not in comp:
                    bad(f"{kind}comp-total", f, g)
            if comp.get((ident[s], f)) != f or comp.get((f, ident[t])) != f:
                bad(f"{kind}-unit", f)
        for (f, g), fg in comp.items():
            for h in out_of(mor[g][1]):
                gh = comp.get((g, h))
                left, right = comp.get((fg, h)), comp.get((f, gh))
                if gh is not None and left is not None and left != right:
                    bad(f"{kind}-assoc", f, g, h)

    for a, b in D.squares.items():
        if not D.corner_compatible(b):
            bad("square-corners", a)
    for f, a in D.e.items():
        s, t = D.hmor[f]
        if D.squares.get(a) != (f, f, D.vid[s], D.vid[t]):
            bad("e-boundary", f, a)
    for u, a in D.idsq.items():
        s, t = D.vmor[u]
        if D.squares.get(a) != (D.hid[s], D.hid[t], u, u):
            bad("idsq-boundary", u, a)
    for a in D.objects:
        if D.e.get(D.hid[a]) != D.idsq.get(D.vid[a]):
            bad("double-identity", a)
    if out:
        return out

    sq = D.squares
    by_left, by_top = D.squares_by("left"), D.squares_by("top")

    for (a, b), c in D.sq_hcomp.items():
        A, B = sq[a], sq[b]
        if A.right != B.left:
            bad("sq-hcomp-domain", a, b)
            continue
        want = (D.hcomp.get((A.top, B.top)), D.hcomp.get((A.bottom, B.bottom)), A.left, B.right)
        if tuple(sq[c]) != want:
            bad("sq-hcomp-boundary", a, b, c)
    for (a, c), d in D.sq_vcomp.items():
        A, C = sq[a], sq[c]
        if A.bottom != C.top:
            bad("sq-vcomp-domain", a, c)
            continue
        want = (A.top, C.bottom, D.vcomp.get((A.left, C.left)), D.vcomp.get((A.right, C.right)))
        if tuple(sq[d]) != want:
            bad("sq-vcomp-boundary", a, c, d)

    for a, A in sq.items():
        for b in by_left.get(A.right, ()):
            if (a, b) not in D.sq_hcomp:
                bad("sq-hcomp-total", a, b)
        for c in by_top.get(A.bottom, ()):
            if (a, c) not in D.sq_vcomp:
                bad("sq-vcomp-total", a, c)
        if (D.sq_hcomp.get((D.idsq[A.left], a)) != a
                or D.sq_hcomp.get((a, D.idsq[A.right])) != a):
            bad("sq-h-unit", a)
        if (D.sq_vcomp.get((D.e[A.top], a)) != a
                or D.sq_vcomp.get((a, D.e[A.bottom])) != a):
            bad("sq-v-unit", a)

    for law, comp, side, nxt in (("sq-h-assoc", D.sq_hcomp, "right", by_left),
                                 ("sq-v-assoc", D.sq_vcomp, "bottom", by_top)):
        for (a, b), ab in comp.items():
            for c in nxt.get(getattr(sq[b], side), ()):
                bc = comp.get((b, c))
                if bc is None:
                    continue
                x, y = comp.get((ab, c)), comp.get((a, bc))
                if x is not None and x != y:
                    bad(law, a, b, c)

    for (f, g), h in D.hcomp.items():
        if D.sq_hcomp.get((D.e[f], D.e[g])) != D.e.get(h):
            bad("e-comp", f, g)
    for (u, v), w in D.vcomp.items():
        if D.sq_vcomp.get((D.idsq[u], D.idsq[v])) != D.idsq.get(w):
            bad("idsq-comp", u, v)

    below = defaultdict(list)
    for (a, c) in D.sq_vcomp:
        below[a].append(c)
    for (a, b), ab in D.sq_hcomp.items():
        for c in below.get(a, ()):
            for d in below.get(b, ()):
                if sq[c].right != sq[d].left:
                    continue
                cd, ac, bd = D.sq_hcomp.get((c, d)), D.sq_vcomp[(a, c)], D.sq_vcomp[(b, d)]
                if cd is None:
                    continue  # already reported as a totality failure
                lhs, rhs = D.sq_vcomp.get((ab, cd)), D.sq_hcomp.get((ac, bd))
                if lhs is None or lhs != rhs:
                    bad("interchange", a, b, c, d)
    return out


def diagnose_double_category(doc) -> list:
    """All axiom violations of a raw document (empty list when valid)."""
    D = doc if isinstance(doc, DoubleCategory) else double_category_from_document(doc)
    return check_axioms(D)


def validate_double_category(doc, cls=DoubleCategory) -> DoubleCategory:
    """Resolve and check a raw document; raise ValidationError on failure."""
    D = doc if isinstance(doc, DoubleCategory) else double_category_from_document(doc, cls)
    problems = check_axioms(D)
    if problems:
        raise ValidationError(problems)
    return D


def validate_two_category(doc) -> TwoCategory:
    D = validate_double_category(doc, TwoCategory)
    if not D.is_two_category:
        raise ValidationError([AxiomViolation("two-category-verticals",
                                              [u for u in D.vmor if not D.is_v_identity(u)])])
    return as_two_category(D)


# ---------------------------------------------------------------------------
# Functors


@dataclass(frozen=True, eq=False)
class DoubleFunctor:
    source: DoubleCategory
    target: DoubleCategory
    on_objects: dict
    on_hmor: dict
    on_vmor: dict
    on_squares: dict

    def __eq__(self, other):
        if not isinstance(other, DoubleFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.on_objects == other.on_objects and self.on_hmor == other.on_hmor
                and self.on_vmor == other.on_vmor and self.on_squares == other.on_squares)

    def __hash__(self):
        return hash((self.source, self.target))

    def __repr__(self):
        return f"DoubleFunctor({self.source!r} -> {self.target!r})"

    def obj(self, a):
        return self.on_objects[a]

    def h(self, f):
        return self.on_hmor[f]

    def v(self, u):
        return self.on_vmor[u]

    def sq(self, a):
        return self.on_squares[a]

    def map(self, kind, name):
        return {"o": self.on_objects, "h": self.on_hmor,
                "v": self.on_vmor, "s": self.on_squares}[kind][name]

    def then(self, G: "DoubleFunctor") -> "DoubleFunctor":
        """Composite ``G∘self``."""
        return DoubleFunctor(
            self.source, G.target,
            {a: G.on_objects[b] for a, b in self.on_objects.items()},
            {a: G.on_hmor[b] for a, b in self.on_hmor.items()},
            {a: G.on_vmor[b] for a, b in self.on_vmor.items()},
            {a: G.on_squares[b] for a, b in self.on_squares.items()},
        )

    @staticmethod
    def identity(D: DoubleCategory) -> "DoubleFunctor":
        return DoubleFunctor(D, D, {a: a for a in D.objects}, {f: f for f in D.hmor},
                             {u: u for u in D.vmor}, {a: a for a in D.squares})


def functor_from_maps(src, tgt, on_objects, on_hmor=None, on_vmor=None, on_squares=None):
    """Build a functor from partial maps, filling in the identity cells."""
    on_objects = {str(k): str(v) for k, v in on_objects.items()}
    on_hmor = {str(k): str(v) for k, v in (on_hmor or {}).items()}
    on_vmor = {str(k): str(v) for k, v in (on_vmor or {}).items()}
    on_squares = {str(k): str(v) for k, v in (on_squares or {}).items()}
    missing = [a for a in src.objects if a not in on_objects]
    if missing:
        raise MalformedDocument(f"object map misses {missing}")
    for a in src.objects:
        fa = on_objects[a]
        if fa not in tgt.hid:
            raise MalformedDocument(f"object {a!r} sent to unknown object {fa!r}")
        on_hmor.setdefault(src.hid[a], tgt.hid[fa])
        on_vmor.setdefault(src.vid[a], tgt.vid[fa])
    for f in src.hmor:
        if f in on_hmor and on_hmor[f] in tgt.e:
            on_squares.setdefault(src.e[f], tgt.e[on_hmor[f]])
    for u in src.vmor:
        if u in on_vmor and on_vmor[u] in tgt.idsq:
            on_squares.setdefault(src.idsq[u], tgt.idsq[on_vmor[u]])
    dangling = []
    for m, pool_src, pool_tgt, what in ((on_hmor, src.hmor, tgt.hmor, "hmor"),
                                        (on_vmor, src.vmor, tgt.vmor, "vmor"),
                                        (on_squares, src.squares, tgt.squares, "square")):
        for k in pool_src:
            if k not in m:
                dangling.append((what, k, "unmapped"))
        for k, v in m.items():
            if k not in pool_src:
                dangling.append((what, k, "not in source"))
            elif v not in pool_tgt:
                dangling.append((what, v, "not in target"))
    for k in on_objects:
        if k not in src.hid:
            dangling.append(("object", k, "not in source"))
    if dangling:
        raise MalformedDocument("unresolved functor identifiers: " +
                                ", ".join(map(repr, dangling[:10])))
    return DoubleFunctor(src, tgt, {a: on_objects[a] for a in src.objects},
                         {f: on_hmor[f] for f in src.hmor},
                         {u: on_vmor[u] for u in src.vmor},
                         {a: on_squares[a] for a in src.squares})


def check_functor(F: DoubleFunctor) -> list:
    out = []
    S, T = F.source, F.target

    def bad(law, *witness):
        out.append(PreservationViolation(law, witness))

    for f, (s, t) in S.hmor.items():
        if T.hmor[F.h(f)] != (F.obj(s), F.obj(t)):
            bad("hmor-boundary", f)
    for u, (s, t) in S.vmor.items():
        if T.vmor[F.v(u)] != (F.obj(s), F.obj(t)):
            bad("vmor-boundary", u)
    for a, b in S.squares.items():
        if T.squares[F.sq(a)] != (F.h(b.top), F.h(b.bottom), F.v(b.left), F.v(b.right)):
            bad("square-boundary", a)
    for a in S.objects:
        if F.h(S.hid[a]) != T.hid[F.obj(a)]:
            bad("h-identity", a)
        if F.v(S.vid[a]) != T.vid[F.obj(a)]:
            bad("v-identity", a)
    for f in S.hmor:
        if F.sq(S.e[f]) != T.e[F.h(f)]:
            bad("e-identity", f)
    for u in S.vmor:
        if F.sq(S.idsq[u]) != T.idsq[F.v(u)]:
            bad("idsq-identity", u)
    for law, table, tt, m in (("hcomp", S.hcomp, T.hcomp, F.on_hmor),
                              ("vcomp", S.vcomp, T.vcomp, F.on_vmor),
                              ("sq-hcomp", S.sq_hcomp, T.sq_hcomp, F.on_squares),
                              ("sq-vcomp", S.sq_vcomp, T.sq_vcomp, F.on_squares)):
        for (x, y), z in table.items():
            if tt.get((m[x], m[y])) != m[z]:
                bad(law, x, y)
    return out


def validate_double_functor(doc, src: DoubleCategory, tgt: DoubleCategory) -> DoubleFunctor:
    """Build a functor from a mapping document and check every preservation law."""
    if isinstance(doc, DoubleFunctor):
        F = doc
    else:
        if not isinstance(doc, Mapping):
            raise MalformedDocument("functor document must be a JSON object")
        F = functor_from_maps(src, tgt, doc.get("on_objects") or {}, doc.get("on_hmor"),
                              doc.get("on_vmor"), doc.get("on_squares"))
    problems = check_functor(F)
    if problems:
        raise FunctorValidationError(problems)
    return F


# ---------------------------------------------------------------------------
# Square calculus


def squares_with_boundary(D: DoubleCategory, b) -> tuple:
    b = SquareBoundary(*b)
    if not D.corner_compatible(b):
        raise IncompatibleBoundary(f"boundary {tuple(b)} is not corner compatible")
    return D.with_boundary(b)


def compose_squares(dir, a, b, D: DoubleCategory):
    if _direction(dir) == HORIZONTAL:
        return D.hpaste(a, b)
    return D.vpaste(a, b)


def paste_grid(D: DoubleCategory, grid: Iterable[Iterable[str]], rows_first=True):
    """Composite of a rectangular grid; ``grid[i][j]`` is row i, column j."""
    rows = [list(r) for r in grid]
    if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
        raise RaggedGrid(f"grid shape {[len(r) for r in rows]} is not rectangular")
    if rows_first:
        return D.vcolumn(*(D.hrow(*r) for r in rows))
    cols = list(zip(*rows))
    return D.hrow(*(D.vcolumn(*c) for c in cols))


def invert_square(dir, a, D: DoubleCategory):
    """The inverse of a globular square in direction ``dir``, or None."""
    b = D.squares[a]
    if _direction(dir) == VERTICAL:
        if not D.is_h_globular(a):
            raise NotGlobular(f"{a!r} does not have identity verticals")
        found = [c for c in D.with_boundary((b.bottom, b.top, b.left, b.right))
                 if D.sq_vcomp.get((a, c)) == D.e[b.top]
                 and D.sq_vcomp.get((c, a)) == D.e[b.bottom]]
    else:
        if not D.is_v_globular(a):
            raise NotGlobular(f"{a!r} does not have identity horizontals")
        found = [c for c in D.with_boundary((b.top, b.bottom, b.right, b.left))
                 if D.sq_hcomp.get((a, c)) == D.idsq[b.left]
                 and D.sq_hcomp.get((c, a)) == D.idsq[b.right]]
    if len(found) > 1:
        raise AxiomViolation("inverse-uniqueness", (a, *found))
    return found[0] if found else None


def is_vertically_invertible(D, a):
    return D.is_h_globular(a) and invert_square(VERTICAL, a, D) is not None


# ---------------------------------------------------------------------------
# DoubleCategory -> document


def to_document(D: DoubleCategory, kind=None) -> dict:
    """Plain-data form with every identity listed explicitly."""
    if kind is None:
        kind = "two_category" if isinstance(D, TwoCategory) else "double_category"
    return {
        "kind": kind,
        "objects": list(D.objects),
        "hmor": [{"name": f, "src": s, "tgt": t} for f, (s, t) in D.hmor.items()],
        "vmor": [{"name": u, "src": s, "tgt": t} for u, (s, t) in D.vmor.items()],
        "hcomp": [[g, f, h] for (f, g), h in D.hcomp.items()],
        "vcomp": [[v, u, w] for (u, v), w in D.vcomp.items()],
        "squares": [dict(name=a, **b._asdict()) for a, b in D.squares.items()],
        "sq_hcomp": [[a, b, c] for (a, b), c in D.sq_hcomp.items()],
        "sq_vcomp": [[a, b, c] for (a, b), c in D.sq_vcomp.items()],
    }


def functor_to_document(F: DoubleFunctor, source=None, target=None) -> dict:
    """``source``/``target`` default to inline documents of the endpoints."""
    return {
        "kind": "double_functor",
        "source": source if source is not None else to_document(F.source),
        "target": target if target is not None else to_document(F.target),
        "on_objects": dict(F.on_objects),
        "on_hmor": dict(F.on_hmor),
        "on_vmor": dict(F.on_vmor),
        "on_squares": dict(F.on_squares),
    }
