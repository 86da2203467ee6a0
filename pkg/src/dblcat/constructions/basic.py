"""Duals, products, coproducts, underlying 2-categories and the terminal maps."""
from __future__ import annotations

from ..core import (DoubleCategory, DoubleFunctor, SquareBoundary, TwoCategory,
                    assemble, plain, validate_double_category)


def _parts(D: DoubleCategory):
    return dict(objects=D.objects, hmor=D.hmor, vmor=D.vmor, hcomp=D.hcomp,
                vcomp=D.vcomp, squares=D.squares, sq_hcomp=D.sq_hcomp,
                sq_vcomp=D.sq_vcomp, hid=D.hid, vid=D.vid, e=D.e, idsq=D.idsq)


# -- vertical opposite ----------------------------------------------------


def vop(D: DoubleCategory) -> DoubleCategory:
    """Reverse the vertical morphisms; squares keep their names."""
    def build():
        return DoubleCategory(
            objects=D.objects, hmor=dict(D.hmor),
            vmor={u: (t, s) for u, (s, t) in D.vmor.items()},
            hcomp=dict(D.hcomp),
            vcomp={(v, u): w for (u, v), w in D.vcomp.items()},
            squares={a: SquareBoundary(b.bottom, b.top, b.left, b.right)
                     for a, b in D.squares.items()},
            sq_hcomp=dict(D.sq_hcomp),
            sq_vcomp={(c, a): d for (a, c), d in D.sq_vcomp.items()},
            hid=dict(D.hid), vid=dict(D.vid), e=dict(D.e), idsq=dict(D.idsq))
    return D.memo("vop", build)


def vop_functor(F: DoubleFunctor) -> DoubleFunctor:
    return DoubleFunctor(vop(F.source), vop(F.target), F.on_objects, F.on_hmor,
                         F.on_vmor, F.on_squares)


# -- transpose ------------------------------------------------------------


def _transpose_with_names(D: DoubleCategory):
    def build():
        T, naming = assemble(
            D.objects, D.vmor, D.hmor, D.vcomp, D.hcomp,
            {a: SquareBoundary(b.left, b.right, b.top, b.bottom) for a, b in D.squares.items()},
            D.sq_vcomp, D.sq_hcomp, D.vid, D.hid, D.idsq, D.e)
        return T, naming.squares
    return D.memo("transpose", build)


def transpose(D: DoubleCategory) -> DoubleCategory:
    """Swap the horizontal and vertical structure (so ``|`` and ``/`` trade places).

    Objects and morphisms keep their names; identity squares are renamed
    between ``e:`` and ``idsq:`` so that the result uses canonical names.
    """
    return _transpose_with_names(D)[0]


def transpose_square_names(D: DoubleCategory) -> dict:
    """Name of each square of ``D`` inside ``transpose(D)``."""
    return _transpose_with_names(D)[1]


def transpose_functor(F: DoubleFunctor) -> DoubleFunctor:
    src_names = transpose_square_names(F.source)
    tgt_names = transpose_square_names(F.target)
    return DoubleFunctor(
        transpose(F.source), transpose(F.target), dict(F.on_objects),
        dict(F.on_vmor), dict(F.on_hmor),
        {src_names[a]: tgt_names[b] for a, b in F.on_squares.items()})


def dualize(kind: str, D):
    """``kind`` is "vop" or "transpose"; functors are dualized too."""
    if kind == "vop":
        return vop_functor(D) if isinstance(D, DoubleFunctor) else vop(D)
    if kind == "transpose":
        return transpose_functor(D) if isinstance(D, DoubleFunctor) else transpose(D)
    raise ValueError(f"unknown dual {kind!r}")


# -- products and coproducts ----------------------------------------------


def _pair_label(key):
    return f"({key[0]},{key[1]})"


def _product_tables(A: DoubleCategory, B: DoubleCategory):
    def pairs(x, y):
        return [(a, b) for a in x for b in y]

    def mor(x, y):
        return {(f, g): ((x[f][0], y[g][0]), (x[f][1], y[g][1])) for f in x for g in y}

    def comp(x, y):
        return {((f, g), (f2, g2)): (h, h2) for (f, f2), h in x.items() for (g, g2), h2 in y.items()}

    return dict(
        objects=pairs(A.objects, B.objects),
        hmor=mor(A.hmor, B.hmor), vmor=mor(A.vmor, B.vmor),
        hcomp=comp(A.hcomp, B.hcomp), vcomp=comp(A.vcomp, B.vcomp),
        squares={(a, b): SquareBoundary(*zip(A.squares[a], B.squares[b]))
                 for a in A.squares for b in B.squares},
        sq_hcomp=comp(A.sq_hcomp, B.sq_hcomp), sq_vcomp=comp(A.sq_vcomp, B.sq_vcomp),
        hid={(a, b): (A.hid[a], B.hid[b]) for a in A.objects for b in B.objects},
        vid={(a, b): (A.vid[a], B.vid[b]) for a in A.objects for b in B.objects},
        e={(f, g): (A.e[f], B.e[g]) for f in A.hmor for g in B.hmor},
        idsq={(u, v): (A.idsq[u], B.idsq[v]) for u in A.vmor for v in B.vmor},
    )


def product(A: DoubleCategory, B: DoubleCategory):
    """Componentwise product; returns the category and its naming of key pairs."""
    return assemble(label=_pair_label, **_product_tables(A, B))


def _coproduct_tables(A: DoubleCategory, B: DoubleCategory):
    parts = (A, B)

    def tagged(sort, i, x):
        return (sort, i, x)

    def union(sort, attr):
        return {tagged(sort, i, k): v for i, D in enumerate(parts) for k, v in getattr(D, attr).items()}

    def mor(sort, attr):
        return {tagged(sort, i, f): (tagged("o", i, s), tagged("o", i, t))
                for i, D in enumerate(parts) for f, (s, t) in getattr(D, attr).items()}

    def comp(sort, attr):
        return {(tagged(sort, i, x), tagged(sort, i, y)): tagged(sort, i, z)
                for i, D in enumerate(parts) for (x, y), z in getattr(D, attr).items()}

    def ident(sort, attr, key_sort):
        return {tagged(key_sort, i, k): tagged(sort, i, v)
                for i, D in enumerate(parts) for k, v in getattr(D, attr).items()}

    return dict(
        objects=[tagged("o", i, a) for i, D in enumerate(parts) for a in D.objects],
        hmor=mor("h", "hmor"), vmor=mor("v", "vmor"),
        hcomp=comp("h", "hcomp"), vcomp=comp("v", "vcomp"),
        squares={tagged("s", i, a): SquareBoundary(tagged("h", i, b.top), tagged("h", i, b.bottom),
                                                   tagged("v", i, b.left), tagged("v", i, b.right))
                 for i, D in enumerate(parts) for a, b in D.squares.items()},
        sq_hcomp=comp("s", "sq_hcomp"), sq_vcomp=comp("s", "sq_vcomp"),
        hid=ident("h", "hid", "o"), vid=ident("v", "vid", "o"),
        e=ident("s", "e", "h"), idsq=ident("s", "idsq", "v"),
    )


def coproduct(A: DoubleCategory, B: DoubleCategory):
    """Disjoint union; names clashing between the summands get a ``_0``/``_1`` suffix."""
    tables = _coproduct_tables(A, B)
    clashes = set()
    for sort, attr in (("o", "objects"), ("h", "hmor"), ("v", "vmor"), ("s", "squares")):
        clashes |= {(sort, x) for x in set(getattr(A, attr)) & set(getattr(B, attr))}

    def label(key):
        sort, i, x = key
        return f"{x}_{i}" if (sort, x) in clashes else str(x)

    return assemble(label=label, **tables)


def combine(kind: str, A: DoubleCategory, B: DoubleCategory) -> DoubleCategory:
    if kind == "product":
        return product(A, B)[0]
    if kind == "coproduct":
        return coproduct(A, B)[0]
    raise ValueError(f"unknown combination {kind!r}")


def _naming_functor(src, src_naming, tgt, tgt_naming, key_map):
    """Functor induced by a map on keys, translated through both namings."""
    maps = []
    for sort in ("objects", "hmor", "vmor", "squares"):
        s_names, t_names = getattr(src_naming, sort), getattr(tgt_naming, sort)
        maps.append({s_names[k]: t_names[key_map(sort, k)] for k in s_names})
    return DoubleFunctor(src, tgt, *maps)


_SORT_ATTR = {"objects": "on_objects", "hmor": "on_hmor", "vmor": "on_vmor", "squares": "on_squares"}


def product_functor(F: DoubleFunctor, G: DoubleFunctor) -> DoubleFunctor:
    src, src_naming = product(F.source, G.source)
    tgt, tgt_naming = product(F.target, G.target)

    def key_map(sort, k):
        attr = _SORT_ATTR[sort]
        return (getattr(F, attr)[k[0]], getattr(G, attr)[k[1]])

    return _naming_functor(src, src_naming, tgt, tgt_naming, key_map)


def coproduct_functor(F: DoubleFunctor, G: DoubleFunctor) -> DoubleFunctor:
    src, src_naming = coproduct(F.source, G.source)
    tgt, tgt_naming = coproduct(F.target, G.target)
    parts = (F, G)

    def key_map(sort, k):
        tag, i, x = k
        return (tag, i, getattr(parts[i], _SORT_ATTR[sort])[x])

    return _naming_functor(src, src_naming, tgt, tgt_naming, key_map)


def projection(kind_index: int, A: DoubleCategory, B: DoubleCategory) -> DoubleFunctor:
    """Projection of ``A × B`` onto the factor with the given index."""
    src, naming = product(A, B)
    target = (A, B)[kind_index]
    maps = [{name: k[kind_index] for k, name in getattr(naming, sort).items()}
            for sort in ("objects", "hmor", "vmor", "squares")]
    return DoubleFunctor(src, target, *maps)


def coproduct_injection(index: int, A: DoubleCategory, B: DoubleCategory) -> DoubleFunctor:
    tgt, naming = coproduct(A, B)
    source = (A, B)[index]
    sort_tag = {"objects": "o", "hmor": "h", "vmor": "v", "squares": "s"}
    maps = [{x: getattr(naming, sort)[(sort_tag[sort], index, x)] for x in getattr(source, attr)}
            for sort, attr in (("objects", "objects"), ("hmor", "hmor"),
                               ("vmor", "vmor"), ("squares", "squares"))]
    return DoubleFunctor(source, tgt, *maps)


def copairing(F: DoubleFunctor, G: DoubleFunctor) -> DoubleFunctor:
    """The functor out of ``F.source ⊔ G.source`` restricting to ``F`` and ``G``."""
    if F.target != G.target:
        raise ValueError("copairing needs a common target")
    src, naming = coproduct(F.source, G.source)
    parts = (F, G)
    maps = [{name: getattr(parts[i], _SORT_ATTR[sort])[x]
             for (tag, i, x), name in getattr(naming, sort).items()}
            for sort in ("objects", "hmor", "vmor", "squares")]
    return DoubleFunctor(src, F.target, *maps)


# -- underlying 2-categories ----------------------------------------------


def _underlying_h(D: DoubleCategory) -> TwoCategory:
    def build():
        keep = {a for a in D.squares if D.is_h_globular(a)}
        ids = {u for u in D.vmor if D.is_v_identity(u)}
        return TwoCategory(
            objects=D.objects, hmor=dict(D.hmor),
            vmor={u: D.vmor[u] for u in D.vmor if u in ids},
            hcomp=dict(D.hcomp),
            vcomp={k: w for k, w in D.vcomp.items() if k[0] in ids and k[1] in ids},
            squares={a: D.squares[a] for a in D.squares if a in keep},
            sq_hcomp={k: c for k, c in D.sq_hcomp.items() if k[0] in keep and k[1] in keep},
            sq_vcomp={k: c for k, c in D.sq_vcomp.items() if k[0] in keep and k[1] in keep},
            hid=dict(D.hid), vid=dict(D.vid), e=dict(D.e),
            idsq={u: D.idsq[u] for u in ids})
    return D.memo("underlying_h", build)


def underlying(kind: str, D: DoubleCategory) -> TwoCategory:
    """Underlying horizontal ("H") or vertical ("V") 2-category.

    The vertical one is stored like every TwoCategory: its 1-cells (the
    vertical morphisms of ``D``) sit in the horizontal slot.
    """
    if kind == "H":
        return _underlying_h(D)
    if kind == "V":
        return _underlying_h(transpose(D))
    raise ValueError(f"unknown direction {kind!r}")


def underlying_functor(kind: str, F: DoubleFunctor) -> DoubleFunctor:
    if kind == "V":
        F = transpose_functor(F)
    elif kind != "H":
        raise ValueError(f"unknown direction {kind!r}")
    S, T = underlying("H", F.source), underlying("H", F.target)
    return DoubleFunctor(S, T, dict(F.on_objects), dict(F.on_hmor),
                         {u: F.on_vmor[u] for u in S.vmor},
                         {a: F.on_squares[a] for a in S.squares})


# -- terminal and initial -------------------------------------------------

ONE_OBJECT = "*"


def one() -> DoubleCategory:
    return validate_double_category({"objects": [ONE_OBJECT]})


def empty() -> DoubleCategory:
    return validate_double_category({})


def terminal_functor(D: DoubleCategory, target: DoubleCategory = None) -> DoubleFunctor:
    """The unique functor ``D → One`` (or to any one-object, identities-only target)."""
    T = target if target is not None else one()
    (star,) = T.objects
    return DoubleFunctor(plain(D) if target is None else D, T,
                         {a: star for a in D.objects},
                         {f: T.hid[star] for f in D.hmor},
                         {u: T.vid[star] for u in D.vmor},
                         {a: T.e[T.hid[star]] for a in D.squares})


def initial_functor(D: DoubleCategory) -> DoubleFunctor:
    return DoubleFunctor(empty(), D, {}, {}, {}, {})
