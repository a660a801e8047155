"""Finite double categories.

A square ``s`` has boundary (top, bottom, left, right) with top: A → B and
bottom: A' → B' horizontal, left: A ⇸ A' and right: B ⇸ B' vertical.
Horizontal composition pastes along shared vertical boundaries, vertical
composition along shared horizontal ones; both tables are keyed
``(then, first)`` like every other composition table in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadIdentity,
    DanglingReference,
    InterchangeFailure,
    MissingComposite,
    NonAssociative,
)
from .twocat import FiniteTwoCategory, assemble_two_category


def idh_of(obj: str) -> str:
    return f"idh:{obj}"


def idv_of(obj: str) -> str:
    return f"idv:{obj}"


@dataclass(frozen=True)
class FiniteDoubleCategory:
    objects: tuple[str, ...]
    hmors: tuple[str, ...]
    vmors: tuple[str, ...]
    squares: tuple[str, ...]
    hsrc: dict[str, str] = field(hash=False)
    htgt: dict[str, str] = field(hash=False)
    vsrc: dict[str, str] = field(hash=False)
    vtgt: dict[str, str] = field(hash=False)
    stop: dict[str, str] = field(hash=False)
    sbottom: dict[str, str] = field(hash=False)
    sleft: dict[str, str] = field(hash=False)
    sright: dict[str, str] = field(hash=False)
    idh: dict[str, str] = field(hash=False)
    idv: dict[str, str] = field(hash=False)
    e_sq: dict[str, str] = field(hash=False)  # hmor -> unit square e_f
    i_sq: dict[str, str] = field(hash=False)  # vmor -> unit square id_u
    hcomp_h: dict[tuple[str, str], str] = field(hash=False)
    vcomp_v: dict[tuple[str, str], str] = field(hash=False)
    hcomp_sq: dict[tuple[str, str], str] = field(hash=False)
    vcomp_sq: dict[tuple[str, str], str] = field(hash=False)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    # -- cell-algebra protocol ----------------------------------------
    def h_src(self, f):
        return self.hsrc[f]

    def h_tgt(self, f):
        return self.htgt[f]

    def h_id(self, o):
        return self.idh[o]

    def h_then(self, first, then):
        return self.hcomp_h[(then, first)]

    def v_src(self, u):
        return self.vsrc[u]

    def v_tgt(self, u):
        return self.vtgt[u]

    def v_id(self, o):
        return self.idv[o]

    def v_then(self, first, then):
        return self.vcomp_v[(then, first)]

    def s_top(self, s):
        return self.stop[s]

    def s_bottom(self, s):
        return self.sbottom[s]

    def s_left(self, s):
        return self.sleft[s]

    def s_right(self, s):
        return self.sright[s]

    def s_unit_h(self, f):
        return self.e_sq[f]

    def s_unit_v(self, u):
        return self.i_sq[u]

    def s_hcomp(self, left, right):
        return self.hcomp_sq[(right, left)]

    def s_vcomp(self, top, bottom):
        return self.vcomp_sq[(bottom, top)]

    def s_vinverse(self, s):
        cache = self.__dict__.setdefault("_vinv", {})
        if s not in cache:
            cache[s] = self._search_vinverse(s)
        return cache[s]

    def _search_vinverse(self, s):
        for t in self.squares_with(top=self.sbottom[s], bottom=self.stop[s]):
            if (self.vcomp_sq.get((t, s)) == self.e_sq[self.stop[s]]
                    and self.vcomp_sq.get((s, t)) == self.e_sq[self.sbottom[s]]):
                return t
        return None

    def s_hinverse(self, s):
        cache = self.__dict__.setdefault("_hinv", {})
        if s not in cache:
            cache[s] = self._search_hinverse(s)
        return cache[s]

    def _search_hinverse(self, s):
        for t in self.squares_with(left=self.sright[s], right=self.sleft[s]):
            if (self.hcomp_sq.get((t, s)) == self.i_sq[self.sleft[s]]
                    and self.hcomp_sq.get((s, t)) == self.i_sq[self.sright[s]]):
                return t
        return None

    # -- convenience ---------------------------------------------------
    def hmors_between(self, a, b):
        index = self.__dict__.get("_h_index")
        if index is None:
            index = {}
            for f in self.hmors:
                index.setdefault((self.hsrc[f], self.htgt[f]), []).append(f)
            self.__dict__["_h_index"] = index
        return index.get((a, b), [])

    def vmors_between(self, a, b):
        index = self.__dict__.get("_v_index")
        if index is None:
            index = {}
            for u in self.vmors:
                index.setdefault((self.vsrc[u], self.vtgt[u]), []).append(u)
            self.__dict__["_v_index"] = index
        return index.get((a, b), [])

    def squares_with(self, top=None, bottom=None, left=None, right=None):
        if top is not None and bottom is not None and left is not None and right is not None:
            index = self.__dict__.get("_sq_index")
            if index is None:
                index = {}
                for s in self.squares:
                    key = (self.stop[s], self.sbottom[s], self.sleft[s], self.sright[s])
                    index.setdefault(key, []).append(s)
                self.__dict__["_sq_index"] = index
            return index.get((top, bottom, left, right), [])
        out = []
        for s in self.squares:
            if top is not None and self.stop[s] != top:
                continue
            if bottom is not None and self.sbottom[s] != bottom:
                continue
            if left is not None and self.sleft[s] != left:
                continue
            if right is not None and self.sright[s] != right:
                continue
            out.append(s)
        return out

    def has_trivial_vertical_boundaries(self, s) -> bool:
        return (self.sleft[s] == self.idv[self.hsrc[self.stop[s]]]
                and self.sright[s] == self.idv[self.htgt[self.stop[s]]])


def assemble_double_category(
    objects, h_bounds, v_bounds, sq_bounds, idh, idv, e_sq, i_sq,
    hcomp_h, vcomp_v, hcomp_sq, vcomp_sq,
) -> FiniteDoubleCategory:
    dbl = FiniteDoubleCategory(
        objects=tuple(objects),
        hmors=tuple(sorted(h_bounds)),
        vmors=tuple(sorted(v_bounds)),
        squares=tuple(sorted(sq_bounds)),
        hsrc={f: b[0] for f, b in h_bounds.items()},
        htgt={f: b[1] for f, b in h_bounds.items()},
        vsrc={u: b[0] for u, b in v_bounds.items()},
        vtgt={u: b[1] for u, b in v_bounds.items()},
        stop={s: b[0] for s, b in sq_bounds.items()},
        sbottom={s: b[1] for s, b in sq_bounds.items()},
        sleft={s: b[2] for s, b in sq_bounds.items()},
        sright={s: b[3] for s, b in sq_bounds.items()},
        idh=dict(idh),
        idv=dict(idv),
        e_sq=dict(e_sq),
        i_sq=dict(i_sq),
        hcomp_h=dict(hcomp_h),
        vcomp_v=dict(vcomp_v),
        hcomp_sq=dict(hcomp_sq),
        vcomp_sq=dict(vcomp_sq),
    )
    check_double_category_laws(dbl)
    return dbl


def check_double_category_laws(dbl: FiniteDoubleCategory) -> None:
    hset, vset, sqset = set(dbl.hmors), set(dbl.vmors), set(dbl.squares)

    for s in dbl.squares:
        f, g = dbl.stop[s], dbl.sbottom[s]
        u, v = dbl.sleft[s], dbl.sright[s]
        if f not in hset or g not in hset or u not in vset or v not in vset:
            raise DanglingReference(f"square {s!r} has unknown boundary cells")
        if (dbl.hsrc[f] != dbl.vsrc[u] or dbl.htgt[f] != dbl.vsrc[v]
                or dbl.hsrc[g] != dbl.vtgt[u] or dbl.htgt[g] != dbl.vtgt[v]):
            raise DanglingReference(f"square {s!r} has incompatible boundary")

    _check_category_layer(dbl.hmors, dbl.hsrc, dbl.htgt, dbl.idh, dbl.hcomp_h, "horizontal")
    _check_category_layer(dbl.vmors, dbl.vsrc, dbl.vtgt, dbl.idv, dbl.vcomp_v, "vertical")

    for a in dbl.objects:
        if dbl.e_sq[dbl.idh[a]] != dbl.i_sq[dbl.idv[a]]:
            raise BadIdentity(f"double unit square not shared at object {a!r}")

    # horizontal composition of squares
    for s in dbl.squares:
        for t in dbl.squares:
            if dbl.sright[s] != dbl.sleft[t]:
                continue
            if (t, s) not in dbl.hcomp_sq:
                raise MissingComposite(f"no horizontal square composite for ({s!r}, {t!r})")
            c = dbl.hcomp_sq[(t, s)]
            if (c not in sqset
                    or dbl.stop[c] != dbl.hcomp_h[(dbl.stop[t], dbl.stop[s])]
                    or dbl.sbottom[c] != dbl.hcomp_h[(dbl.sbottom[t], dbl.sbottom[s])]
                    or dbl.sleft[c] != dbl.sleft[s]
                    or dbl.sright[c] != dbl.sright[t]):
                raise MissingComposite(f"bad horizontal square composite for ({s!r}, {t!r})")
    # vertical composition of squares
    for s in dbl.squares:
        for t in dbl.squares:
            if dbl.sbottom[s] != dbl.stop[t]:
                continue
            if (t, s) not in dbl.vcomp_sq:
                raise MissingComposite(f"no vertical square composite for ({s!r}, {t!r})")
            c = dbl.vcomp_sq[(t, s)]
            if (c not in sqset
                    or dbl.stop[c] != dbl.stop[s]
                    or dbl.sbottom[c] != dbl.sbottom[t]
                    or dbl.sleft[c] != dbl.vcomp_v[(dbl.sleft[t], dbl.sleft[s])]
                    or dbl.sright[c] != dbl.vcomp_v[(dbl.sright[t], dbl.sright[s])]):
                raise MissingComposite(f"bad vertical square composite for ({s!r}, {t!r})")

    for s in dbl.squares:
        if dbl.hcomp_sq[(s, dbl.i_sq[dbl.sleft[s]])] != s:
            raise BadIdentity(f"horizontal unit law fails at {s!r}")
        if dbl.hcomp_sq[(dbl.i_sq[dbl.sright[s]], s)] != s:
            raise BadIdentity(f"horizontal unit law fails at {s!r}")
        if dbl.vcomp_sq[(s, dbl.e_sq[dbl.stop[s]])] != s:
            raise BadIdentity(f"vertical unit law fails at {s!r}")
        if dbl.vcomp_sq[(dbl.e_sq[dbl.sbottom[s]], s)] != s:
            raise BadIdentity(f"vertical unit law fails at {s!r}")

    for (g, f), h in dbl.hcomp_h.items():
        if dbl.hcomp_sq[(dbl.e_sq[g], dbl.e_sq[f])] != dbl.e_sq[h]:
            raise BadIdentity(f"unit squares not functorial on h-composite ({f!r}, {g!r})")
    for (w, u), z in dbl.vcomp_v.items():
        if dbl.vcomp_sq[(dbl.i_sq[w], dbl.i_sq[u])] != dbl.i_sq[z]:
            raise BadIdentity(f"unit squares not functorial on v-composite ({u!r}, {w!r})")

    for (t1, s1) in list(dbl.hcomp_sq):
        # s1 left of t1; associativity
        for t2 in dbl.squares:
            if dbl.sright[t1] != dbl.sleft[t2]:
                continue
            if (dbl.hcomp_sq[(t2, dbl.hcomp_sq[(t1, s1)])]
                    != dbl.hcomp_sq[(dbl.hcomp_sq[(t2, t1)], s1)]):
                raise NonAssociative(f"horizontal square associativity fails on ({s1!r}, {t1!r}, {t2!r})")
    for (b1, a1) in list(dbl.vcomp_sq):
        for c1 in dbl.squares:
            if dbl.sbottom[b1] != dbl.stop[c1]:
                continue
            if (dbl.vcomp_sq[(c1, dbl.vcomp_sq[(b1, a1)])]
                    != dbl.vcomp_sq[(dbl.vcomp_sq[(c1, b1)], a1)]):
                raise NonAssociative(f"vertical square associativity fails on ({a1!r}, {b1!r}, {c1!r})")

    for (b1, a1) in list(dbl.vcomp_sq):
        for (b2, a2) in list(dbl.vcomp_sq):
            if dbl.sright[a1] != dbl.sleft[a2] or dbl.sright[b1] != dbl.sleft[b2]:
                continue
            lhs = dbl.hcomp_sq[(dbl.vcomp_sq[(b2, a2)], dbl.vcomp_sq[(b1, a1)])]
            rhs = dbl.vcomp_sq[(dbl.hcomp_sq[(b2, b1)], dbl.hcomp_sq[(a2, a1)])]
            if lhs != rhs:
                raise InterchangeFailure(
                    f"interchange fails on grid ({a1!r}, {a2!r}, {b1!r}, {b2!r})"
                )


def _check_category_layer(mors, src, tgt, ident, table, label):
    mset = set(mors)
    for (g, f), h in table.items():
        if tgt[f] != src[g]:
            raise MissingComposite(f"{label} table entry ({f!r}, {g!r}) is not composable")
        if h not in mset or src[h] != src[f] or tgt[h] != tgt[g]:
            raise MissingComposite(f"bad {label} composite for ({f!r}, {g!r})")
    for f in mors:
        for g in mors:
            if tgt[f] == src[g] and (g, f) not in table:
                raise MissingComposite(f"no {label} composite for ({f!r} then {g!r})")
        if table[(f, ident[src[f]])] != f or table[(ident[tgt[f]], f)] != f:
            raise BadIdentity(f"{label} identity law fails at {f!r}")
    for f in mors:
        for g in mors:
            if tgt[f] != src[g]:
                continue
            gf = table[(g, f)]
            for h in mors:
                if tgt[g] != src[h]:
                    continue
                if table[(h, gf)] != table[(table[(h, g)], f)]:
                    raise NonAssociative(f"{label} associativity fails on ({f!r}, {g!r}, {h!r})")


def validate_double_category(raw: dict) -> FiniteDoubleCategory:
    """Validate interchange-format tables; all four unit families synthesized.

    Unit square names: ``e:f`` for horizontal morphisms, ``i:u`` for vertical
    morphisms, and the shared double unit ``ee:A``.
    """
    objects = list(raw.get("objects", []))
    h_bounds, v_bounds = {}, {}
    for entry in raw.get("hmor", []):
        if entry["src"] not in objects or entry["tgt"] not in objects:
            raise DanglingReference(f"h-morphism {entry['name']!r} has unknown endpoints")
        h_bounds[entry["name"]] = (entry["src"], entry["tgt"])
    for entry in raw.get("vmor", []):
        if entry["src"] not in objects or entry["tgt"] not in objects:
            raise DanglingReference(f"v-morphism {entry['name']!r} has unknown endpoints")
        v_bounds[entry["name"]] = (entry["src"], entry["tgt"])
    idh, idv = {}, {}
    for a in objects:
        idh[a] = idh_of(a)
        idv[a] = idv_of(a)
        h_bounds[idh[a]] = (a, a)
        v_bounds[idv[a]] = (a, a)

    sq_bounds = {}
    for entry in raw.get("squares", []):
        name = entry["name"]
        if entry["top"] not in h_bounds or entry["bottom"] not in h_bounds:
            raise DanglingReference(f"square {name!r} has unknown horizontal boundary")
        if entry["left"] not in v_bounds or entry["right"] not in v_bounds:
            raise DanglingReference(f"square {name!r} has unknown vertical boundary")
        sq_bounds[name] = (entry["top"], entry["bottom"], entry["left"], entry["right"])

    e_sq, i_sq = {}, {}
    for a in objects:
        shared = f"ee:{a}"
        e_sq[idh[a]] = shared
        i_sq[idv[a]] = shared
        sq_bounds[shared] = (idh[a], idh[a], idv[a], idv[a])
    for f, (a, b) in list(h_bounds.items()):
        if f not in idh.values():
            e_sq[f] = f"e:{f}"
            sq_bounds[f"e:{f}"] = (f, f, idv[a], idv[b])
    for u, (a, b) in list(v_bounds.items()):
        if u not in idv.values():
            i_sq[u] = f"i:{u}"
            sq_bounds[f"i:{u}"] = (idh[a], idh[b], u, u)

    def read_table(key):
        return {(g, f): h for f, g, h in raw.get(key, [])}

    hcomp_h = read_table("hcompose_h")
    vcomp_v = read_table("vcompose_v")
    hcomp_sq = read_table("hcompose_sq")
    vcomp_sq = read_table("vcompose_sq")

    for table, mors, ident, srcm, tgtm in (
        (hcomp_h, h_bounds, idh, 0, 1),
        (vcomp_v, v_bounds, idv, 0, 1),
    ):
        for m, bounds in mors.items():
            for pair, value in (
                ((m, ident[bounds[0]]), m),
                ((ident[bounds[1]], m), m),
            ):
                if table.get(pair, value) != value:
                    raise BadIdentity(f"identity law fails at {pair}")
                table[pair] = value

    # unit-square fills: unit laws and functoriality of the unit families
    def fill(table, pair, value, reason):
        if table.get(pair, value) != value:
            raise BadIdentity(f"{reason}: conflicting entry at {pair}")
        table[pair] = value

    for (g, f), h in list(hcomp_h.items()):
        fill(hcomp_sq, (e_sq[g], e_sq[f]), e_sq[h], "unit squares along h-composition")
    for (w, u), z in list(vcomp_v.items()):
        fill(vcomp_sq, (i_sq[w], i_sq[u]), i_sq[z], "unit squares along v-composition")
    for s, (top, bottom, left, right) in sq_bounds.items():
        fill(hcomp_sq, (s, i_sq[left]), s, "horizontal unit law")
        fill(hcomp_sq, (i_sq[right], s), s, "horizontal unit law")
        fill(vcomp_sq, (s, e_sq[top]), s, "vertical unit law")
        fill(vcomp_sq, (e_sq[bottom], s), s, "vertical unit law")

    return assemble_double_category(
        objects, h_bounds, v_bounds, sq_bounds, idh, idv, e_sq, i_sq,
        hcomp_h, vcomp_v, hcomp_sq, vcomp_sq,
    )


@dataclass(frozen=True)
class DoubleFunctor:
    source: FiniteDoubleCategory
    target: FiniteDoubleCategory
    object_map: dict[str, str] = field(hash=False)
    h_map: dict[str, str] = field(hash=False)
    v_map: dict[str, str] = field(hash=False)
    sq_map: dict[str, str] = field(hash=False)

    def __hash__(self):
        return id(self)


def validate_double_functor(source, target, object_map, h_map, v_map, sq_map) -> DoubleFunctor:
    om, hm, vm, sm = dict(object_map), dict(h_map), dict(v_map), dict(sq_map)
    for a in source.objects:
        if om.get(a) not in set(target.objects):
            raise DanglingReference(f"no image for object {a!r}")
        hm.setdefault(source.idh[a], target.idh[om[a]])
        vm.setdefault(source.idv[a], target.idv[om[a]])
    for f in source.hmors:
        g = hm.get(f)
        if g not in set(target.hmors):
            raise DanglingReference(f"no image for h-morphism {f!r}")
        if target.hsrc[g] != om[source.hsrc[f]] or target.htgt[g] != om[source.htgt[f]]:
            raise MissingComposite(f"image of h-morphism {f!r} has wrong boundary")
        sm.setdefault(source.e_sq[f], target.e_sq[g])
    for u in source.vmors:
        w = vm.get(u)
        if w not in set(target.vmors):
            raise DanglingReference(f"no image for v-morphism {u!r}")
        if target.vsrc[w] != om[source.vsrc[u]] or target.vtgt[w] != om[source.vtgt[u]]:
            raise MissingComposite(f"image of v-morphism {u!r} has wrong boundary")
        sm.setdefault(source.i_sq[u], target.i_sq[w])
    for s in source.squares:
        t = sm.get(s)
        if t not in set(target.squares):
            raise DanglingReference(f"no image for square {s!r}")
        if (target.stop[t] != hm[source.stop[s]]
                or target.sbottom[t] != hm[source.sbottom[s]]
                or target.sleft[t] != vm[source.sleft[s]]
                or target.sright[t] != vm[source.sright[s]]):
            raise MissingComposite(f"image of square {s!r} has wrong boundary")
    for a in source.objects:
        if hm[source.idh[a]] != target.idh[om[a]] or vm[source.idv[a]] != target.idv[om[a]]:
            raise BadIdentity(f"identities of {a!r} not preserved")
    for f in source.hmors:
        if sm[source.e_sq[f]] != target.e_sq[hm[f]]:
            raise BadIdentity(f"unit square of {f!r} not preserved")
    for u in source.vmors:
        if sm[source.i_sq[u]] != target.i_sq[vm[u]]:
            raise BadIdentity(f"unit square of {u!r} not preserved")
    for (g, f), h in source.hcomp_h.items():
        if target.hcomp_h[(hm[g], hm[f])] != hm[h]:
            raise NonAssociative(f"h-composition not preserved on ({f!r}, {g!r})")
    for (w, u), z in source.vcomp_v.items():
        if target.vcomp_v[(vm[w], vm[u])] != vm[z]:
            raise NonAssociative(f"v-composition not preserved on ({u!r}, {w!r})")
    for (t, s), c in source.hcomp_sq.items():
        if target.hcomp_sq[(sm[t], sm[s])] != sm[c]:
            raise NonAssociative(f"square h-composition not preserved on ({s!r}, {t!r})")
    for (t, s), c in source.vcomp_sq.items():
        if target.vcomp_sq[(sm[t], sm[s])] != sm[c]:
            raise NonAssociative(f"square v-composition not preserved on ({s!r}, {t!r})")
    return DoubleFunctor(source, target, om, hm, vm, sm)


# -- embeddings and underlying 2-categories ----------------------------


def horizontal_embed(cat2: FiniteTwoCategory) -> FiniteDoubleCategory:
    """View a 2-category as a double category with trivial vertical morphisms."""
    objects = list(cat2.objects)
    h_bounds = {f: (cat2.one_src[f], cat2.one_tgt[f]) for f in cat2.one_cells}
    v_bounds = {idv_of(a): (a, a) for a in objects}
    idh = {a: cat2.id1[a] for a in objects}
    idv = {a: idv_of(a) for a in objects}
    sq_bounds = {
        c: (
            cat2.two_src[c],
            cat2.two_tgt[c],
            idv[cat2.one_src[cat2.two_src[c]]],
            idv[cat2.one_tgt[cat2.two_src[c]]],
        )
        for c in cat2.two_cells
    }
    e_sq = {f: cat2.id2[f] for f in cat2.one_cells}
    i_sq = {idv[a]: cat2.id2[cat2.id1[a]] for a in objects}
    vcomp_v = {(idv[a], idv[a]): idv[a] for a in objects}
    return assemble_double_category(
        objects, h_bounds, v_bounds, sq_bounds, idh, idv, e_sq, i_sq,
        dict(cat2.hcomp1), vcomp_v, dict(cat2.hcomp2), dict(cat2.vcomp2),
    )


def vertical_embed(cat2: FiniteTwoCategory) -> FiniteDoubleCategory:
    """View a 2-category as a double category with trivial horizontal morphisms."""
    objects = list(cat2.objects)
    h_bounds = {idh_of(a): (a, a) for a in objects}
    v_bounds = {f: (cat2.one_src[f], cat2.one_tgt[f]) for f in cat2.one_cells}
    idh = {a: idh_of(a) for a in objects}
    idv = {a: cat2.id1[a] for a in objects}
    sq_bounds = {
        c: (
            idh[cat2.one_src[cat2.two_src[c]]],
            idh[cat2.one_tgt[cat2.two_src[c]]],
            cat2.two_src[c],
            cat2.two_tgt[c],
        )
        for c in cat2.two_cells
    }
    e_sq = {idh[a]: cat2.id2[cat2.id1[a]] for a in objects}
    i_sq = {f: cat2.id2[f] for f in cat2.one_cells}
    hcomp_h = {(idh[a], idh[a]): idh[a] for a in objects}
    # pasting along vertical boundaries is vertical 2-cell composition
    return assemble_double_category(
        objects, h_bounds, v_bounds, sq_bounds, idh, idv, e_sq, i_sq,
        hcomp_h, dict(cat2.hcomp1), dict(cat2.vcomp2), dict(cat2.hcomp2),
    )


def underlying(dbl: FiniteDoubleCategory, direction: str) -> FiniteTwoCategory:
    """Underlying horizontal or vertical 2-category of a double category."""
    if direction == "horizontal":
        one_bounds = {f: (dbl.hsrc[f], dbl.htgt[f]) for f in dbl.hmors}
        flat = [s for s in dbl.squares if dbl.has_trivial_vertical_boundaries(s)]
        two_bounds = {s: (dbl.stop[s], dbl.sbottom[s]) for s in flat}
        id1 = dict(dbl.idh)
        id2 = {f: dbl.e_sq[f] for f in dbl.hmors}
        hcomp1 = dict(dbl.hcomp_h)
        flatset = set(flat)
        vcomp2 = {k: v for k, v in dbl.vcomp_sq.items() if k[0] in flatset and k[1] in flatset}
        hcomp2 = {k: v for k, v in dbl.hcomp_sq.items() if k[0] in flatset and k[1] in flatset}
    elif direction == "vertical":
        one_bounds = {u: (dbl.vsrc[u], dbl.vtgt[u]) for u in dbl.vmors}
        flat = [
            s for s in dbl.squares
            if dbl.stop[s] == dbl.idh[dbl.vsrc[dbl.sleft[s]]]
            and dbl.sbottom[s] == dbl.idh[dbl.vtgt[dbl.sleft[s]]]
        ]
        two_bounds = {s: (dbl.sleft[s], dbl.sright[s]) for s in flat}
        id1 = dict(dbl.idv)
        id2 = {u: dbl.i_sq[u] for u in dbl.vmors}
        hcomp1 = dict(dbl.vcomp_v)
        flatset = set(flat)
        vcomp2 = {k: v for k, v in dbl.hcomp_sq.items() if k[0] in flatset and k[1] in flatset}
        hcomp2 = {k: v for k, v in dbl.vcomp_sq.items() if k[0] in flatset and k[1] in flatset}
    else:
        raise DanglingReference(f"unknown direction {direction!r}")
    return assemble_two_category(
        list(dbl.objects), one_bounds, two_bounds, id1, id2, hcomp1, vcomp2, hcomp2
    )


def _quad_name(quad) -> str:
    return "ae[" + ",".join(quad) + "]"


def equivalence_embed(cat2: FiniteTwoCategory) -> FiniteDoubleCategory:
    """Double category on a 2-category whose vertical morphisms are its
    adjoint equivalences; squares with boundary (f, f', u, v) are 2-cells
    vf ⇒ f'u."""
    objects = list(cat2.objects)
    h_bounds = {f: (cat2.one_src[f], cat2.one_tgt[f]) for f in cat2.one_cells}
    idh = {a: cat2.id1[a] for a in objects}

    quads = list(cat2.adjoint_equivalences())
    ident_quads = {}
    for a in objects:
        i = cat2.id1[a]
        ident_quads[a] = (i, i, cat2.id2[i], cat2.id2[i])
    v_bounds, vname = {}, {}
    for quad in quads:
        name = _quad_name(quad)
        vname[quad] = name
        v_bounds[name] = (cat2.one_src[quad[0]], cat2.one_tgt[quad[0]])
    idv = {a: vname[ident_quads[a]] for a in objects}

    def compose_quads(q1, q2):
        """q1 followed by q2 (vertical composition of adjoint equivalences)."""
        f1, g1, eta1, eps1 = q1
        f2, g2, eta2, eps2 = q2
        f = cat2.hcomp1[(f2, f1)]
        g = cat2.hcomp1[(g1, g2)]
        eta = cat2.vcomp2[(cat2.hcomp2[(cat2.id2[g1], cat2.hcomp2[(eta2, cat2.id2[f1])])], eta1)]
        eps = cat2.vcomp2[(eps2, cat2.hcomp2[(cat2.id2[f2], cat2.hcomp2[(eps1, cat2.id2[g2])])])]
        return (f, g, eta, eps)

    vcomp_v = {}
    quadset = set(quads)
    for q1 in quads:
        for q2 in quads:
            if cat2.one_tgt[q1[0]] != cat2.one_src[q2[0]]:
                continue
            q = compose_quads(q1, q2)
            if q not in quadset:
                raise MissingComposite(
                    f"composite adjoint equivalence {q!r} missing from enumeration"
                )
            vcomp_v[(vname[q2], vname[q1])] = vname[q]

    # squares (f, f', u, v) named by their data; the 2-cell alpha: vf => f'u
    sq_bounds, sq_data, by_data = {}, {}, {}
    for f in cat2.one_cells:
        a, b = cat2.one_src[f], cat2.one_tgt[f]
        for uq in quads:
            if cat2.one_src[uq[0]] != a:
                continue
            for vq in quads:
                if cat2.one_src[vq[0]] != b:
                    continue
                a2, b2 = cat2.one_tgt[uq[0]], cat2.one_tgt[vq[0]]
                vf = cat2.hcomp1[(vq[0], f)]
                for f2 in cat2.one_cells_between(a2, b2):
                    f2u = cat2.hcomp1[(f2, uq[0])]
                    for alpha in cat2.two_cells_between(vf, f2u):
                        name = f"sq[{f},{f2},{vname[uq]},{vname[vq]},{alpha}]"
                        sq_bounds[name] = (f, f2, vname[uq], vname[vq])
                        sq_data[name] = (f, f2, uq, vq, alpha)
                        by_data[(f, f2, vname[uq], vname[vq], alpha)] = name

    def square_of(f, f2, u, v, alpha):
        return by_data[(f, f2, u, v, alpha)]

    e_sq = {}
    for f in cat2.one_cells:
        a, b = cat2.one_src[f], cat2.one_tgt[f]
        e_sq[f] = square_of(f, f, idv[a], idv[b], cat2.id2[f])
    i_sq = {}
    for quad in quads:
        a, b = cat2.one_src[quad[0]], cat2.one_tgt[quad[0]]
        i_sq[vname[quad]] = square_of(
            cat2.id1[a], cat2.id1[b], vname[quad], vname[quad], cat2.id2[quad[0]]
        )

    hcomp_sq, vcomp_sq = {}, {}
    for s, (f, f2, uq, vq, alpha) in sq_data.items():
        for t, (g, g2, vq2, wq, beta) in sq_data.items():
            if vq2 == vq:
                cell = cat2.vcomp2[(
                    cat2.hcomp2[(cat2.id2[g2], alpha)],
                    cat2.hcomp2[(beta, cat2.id2[f])],
                )]
                hcomp_sq[(t, s)] = square_of(
                    cat2.hcomp1[(g, f)], cat2.hcomp1[(g2, f2)],
                    vname[uq], vname[wq], cell,
                )
    for s, (f, f2, uq, vq, alpha) in sq_data.items():
        for t, (g, g2, uq2, vq2, beta) in sq_data.items():
            if g != f2:
                continue
            if cat2.one_tgt[uq[0]] != cat2.one_src[uq2[0]]:
                continue
            if cat2.one_tgt[vq[0]] != cat2.one_src[vq2[0]]:
                continue
            cell = cat2.vcomp2[(
                cat2.hcomp2[(beta, cat2.id2[uq[0]])],
                cat2.hcomp2[(cat2.id2[vq2[0]], alpha)],
            )]
            vcomp_sq[(t, s)] = square_of(
                f, g2,
                vcomp_v[(vname[uq2], vname[uq])],
                vcomp_v[(vname[vq2], vname[vq])],
                cell,
            )

    dbl = assemble_double_category(
        objects, h_bounds, v_bounds, sq_bounds, idh, idv, e_sq, i_sq,
        dict(cat2.hcomp1), vcomp_v, hcomp_sq, vcomp_sq,
    )
    dbl.__dict__["quad_of_vmor"] = {vname[q]: q for q in quads}
    dbl.__dict__["vmor_of_quad"] = {q: vname[q] for q in quads}
    dbl.__dict__["cell_of_square"] = {s: data[4] for s, data in sq_data.items()}
    dbl.__dict__["square_by_data"] = by_data
    dbl.__dict__["base_two_category"] = cat2
    return dbl
