"""Generators-and-relations presentations and functor enumeration.

A presentation lists generators in dependency order (objects, then
morphism-level cells, then square-level cells) with boundaries given as
expressions over earlier generators.  Flags constrain images during
enumeration:

    "invertible"    image has a vertical inverse
    "h_invertible"  image has a horizontal inverse (double targets)
    "whi"           image admits a weak-inverse witness (double targets)

Adjoint-equivalence-flagged morphism generators are expanded structurally:
adding one introduces the partner generator, invertible unit and counit
cells, and the two triangle relations, so enumeration ranges exactly over
adjoint equivalences of the target.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import expr as ex
from .dblcat import FiniteDoubleCategory
from .errors import BudgetExceeded, DanglingReference
from .twocat import FiniteTwoCategory
from .whi import is_whi_square

DEFAULT_BUDGET = int(os.environ.get("DBLNERVE_BUDGET", "1000000"))


@dataclass(frozen=True)
class Gen:
    name: str
    sort: str  # "object" | "h" | "v" | "sq"
    bounds: tuple  # h/v: (src, tgt) object exprs; sq: (top, bottom, left, right)
    flags: frozenset = frozenset()


@dataclass(frozen=True)
class Presentation:
    kind: str  # "double" | "two"
    gens: tuple[Gen, ...]
    relations: tuple[tuple, ...]  # pairs (lhs, rhs) of square-sort expressions
    label: str = ""
    expansion_relations: frozenset = frozenset()  # indices of auto-added triangle laws

    def gen(self, name: str) -> Gen:
        table = self.__dict__.get("_by_name")
        if table is None:
            table = {g.name: g for g in self.gens}
            self.__dict__["_by_name"] = table
        return table[name]

    def names(self):
        return [g.name for g in self.gens]


class PresentationBuilder:
    """Accumulates generators and relations; adjoint flags auto-expand."""

    def __init__(self, kind: str, label: str = ""):
        self.kind = kind
        self.label = label
        self.gens: list[Gen] = []
        self.relations: list[tuple] = []
        self.adjoint_partner: dict[str, str] = {}
        self.adjoint_unit: dict[str, str] = {}
        self.adjoint_counit: dict[str, str] = {}
        self.expansion_relation_idx: set[int] = set()
        self._names: set[str] = set()

    def _add(self, gen: Gen):
        if gen.name in self._names:
            raise DanglingReference(f"duplicate generator {gen.name!r}")
        self._names.add(gen.name)
        self.gens.append(gen)

    def add_object(self, name):
        self._add(Gen(name, "object", ()))
        return ex.ogen(name)

    def add_hgen(self, name, src, tgt, adjoint=False):
        self._add(Gen(name, "h", (src, tgt)))
        if adjoint:
            self._expand_adjoint(name, src, tgt)
        return ex.hgen(name)

    def add_vgen(self, name, src, tgt):
        if self.kind != "double":
            raise DanglingReference("vertical generators need a double presentation")
        self._add(Gen(name, "v", (src, tgt)))
        return ex.vgen(name)

    def add_square(self, name, top, bottom, left, right, flags=()):
        self._add(Gen(name, "sq", (top, bottom, left, right), frozenset(flags)))
        return ex.sgen(name)

    def add_cell2(self, name, src, tgt, flags=()):
        """2-cell generator of a 2-category presentation (trivial verticals)."""
        if self.kind != "two":
            raise DanglingReference("add_cell2 needs a two-category presentation")
        return self.add_square(name, src, tgt, None, None, flags)

    def add_relation(self, lhs, rhs):
        self.relations.append((lhs, rhs))

    def _expand_adjoint(self, name, src, tgt):
        partner = f"{name}*"
        unit = f"{name}.unit"
        counit = f"{name}.counit"
        self.adjoint_partner[name] = partner
        self.adjoint_unit[name] = unit
        self.adjoint_counit[name] = counit
        self._add(Gen(partner, "h", (tgt, src)))
        fwd, bwd = ex.hgen(name), ex.hgen(partner)
        trivial = self.kind == "two"
        lv = None if trivial else ex.vid(src)
        rv_src = None if trivial else ex.vid(src)
        rv_tgt = None if trivial else ex.vid(tgt)
        self._add(
            Gen(unit, "sq", (ex.hid(src), ex.hcomp(fwd, bwd), lv, rv_src), frozenset({"invertible"}))
        )
        self._add(
            Gen(
                counit,
                "sq",
                (ex.hcomp(bwd, fwd), ex.hid(tgt), None if trivial else ex.vid(tgt), rv_tgt),
                frozenset({"invertible"}),
            )
        )
        e_f, e_g = ex.sid_h(fwd), ex.sid_h(bwd)
        un, co = ex.sgen(unit), ex.sgen(counit)
        self.expansion_relation_idx.add(len(self.relations))
        self.add_relation(
            ex.svcomp(ex.shcomp(un, e_f), ex.shcomp(e_f, co)),
            e_f,
        )
        self.expansion_relation_idx.add(len(self.relations))
        self.add_relation(
            ex.svcomp(ex.shcomp(e_g, un), ex.shcomp(co, e_g)),
            e_g,
        )

    def build(self) -> Presentation:
        return Presentation(
            self.kind,
            tuple(self.gens),
            tuple(self.relations),
            self.label,
            frozenset(self.expansion_relation_idx),
        )


@dataclass(frozen=True)
class PresentationMorphism:
    source: Presentation
    target: Presentation
    gen_map: dict[str, tuple] = field(hash=False)  # source gen -> target expression

    def __hash__(self):
        return id(self)

    def precompose(self, alg, valuation: dict) -> dict:
        """Pull a valuation of the target back along this morphism."""
        return {
            name: ex.evaluate(alg, image, valuation)
            for name, image in self.gen_map.items()
        }

    def after(self, other: "PresentationMorphism") -> "PresentationMorphism":
        """other followed by self (source of other, target of self)."""
        assert other.target is self.source or other.target.label == self.source.label
        composed = {}
        for name, image in other.gen_map.items():
            composed[name] = substitute(image, self.gen_map)
        return PresentationMorphism(other.source, self.target, composed)


def substitute(expression, gen_map):
    tag = expression[0]
    if tag in ("ogen", "hgen", "vgen", "sgen"):
        return gen_map[expression[1]]
    return tuple(
        substitute(part, gen_map) if isinstance(part, tuple) else part
        for part in expression
    )


def identity_morphism(pres: Presentation) -> PresentationMorphism:
    tags = {"object": ex.ogen, "h": ex.hgen, "v": ex.vgen, "sq": ex.sgen}
    return PresentationMorphism(pres, pres, {g.name: tags[g.sort](g.name) for g in pres.gens})


# -- enumeration --------------------------------------------------------


def _object_candidates(alg):
    return sorted(alg.objects)


def _h_candidates(alg, a, b):
    if isinstance(alg, FiniteDoubleCategory):
        return sorted(alg.hmors_between(a, b))
    return sorted(alg.one_cells_between(a, b))


def _v_candidates(alg, a, b):
    return sorted(alg.vmors_between(a, b))


def _sq_candidates(alg, top, bottom, left, right):
    if isinstance(alg, FiniteDoubleCategory):
        return sorted(alg.squares_with(top=top, bottom=bottom, left=left, right=right))
    return sorted(alg.two_cells_between(top, bottom))


def _flag_ok(alg, flags, image):
    if "invertible" in flags and alg.s_vinverse(image) is None:
        return False
    if "h_invertible" in flags and alg.s_hinverse(image) is None:
        return False
    if "whi" in flags:
        if isinstance(alg, FiniteDoubleCategory):
            if is_whi_square(alg, image) is None:
                return False
        elif alg.s_vinverse(image) is None:
            return False
    return True


def enumerate_functors(pres: Presentation, alg, budget: int | None = None):
    """All generator valuations into ``alg`` satisfying boundaries, flags,
    and relations; returned as a sorted list of dicts."""
    if pres.kind == "two" and isinstance(alg, FiniteDoubleCategory):
        raise DanglingReference("two-category presentation needs a 2-category target")
    if pres.kind == "double" and isinstance(alg, FiniteTwoCategory):
        raise DanglingReference("double presentation needs a double category target")
    budget = DEFAULT_BUDGET if budget is None else budget

    # Schedule objects lazily, right before the first generator whose
    # boundary mentions them: failing morphism assignments then prune the
    # object search instead of enumerating full object tuples first.
    declared = list(pres.gens)
    by_name = {g.name: g for g in declared}
    deferred: list[Gen] = []
    gens: list[Gen] = []
    scheduled: set[str] = set()

    def needs(gen: Gen):
        wanted: set[str] = set()
        for bound in gen.bounds:
            if isinstance(bound, tuple):
                wanted |= ex.generators_of(bound)
        return wanted

    for g in declared:
        if g.sort == "object":
            deferred.append(g)
            continue
        for name in sorted(needs(g) - scheduled):
            dep = by_name[name]
            if dep.sort == "object":
                gens.append(dep)
                scheduled.add(name)
        gens.append(g)
        scheduled.add(g.name)
    for g in deferred:
        if g.name not in scheduled:
            gens.append(g)
            scheduled.add(g.name)

    relation_ready: dict[int, list] = {}
    for lhs, rhs in pres.relations:
        wanted = ex.generators_of(lhs) | ex.generators_of(rhs)
        last = max(i for i, g in enumerate(gens) if g.name in wanted)
        relation_ready.setdefault(last, []).append((lhs, rhs))

    out = []
    env: dict[str, str] = {}
    spent = 0

    def bounds_eval(gen: Gen):
        if gen.sort in ("h", "v"):
            return tuple(ex.evaluate(alg, b, env) for b in gen.bounds)
        if gen.sort == "sq":
            top = ex.evaluate(alg, gen.bounds[0], env)
            bottom = ex.evaluate(alg, gen.bounds[1], env)
            if pres.kind == "two":
                return (top, bottom, None, None)
            left = ex.evaluate(alg, gen.bounds[2], env)
            right = ex.evaluate(alg, gen.bounds[3], env)
            return (top, bottom, left, right)
        return ()

    def walk(i: int):
        nonlocal spent
        if i == len(gens):
            out.append(dict(env))
            return
        gen = gens[i]
        if gen.sort == "object":
            options = _object_candidates(alg)
        elif gen.sort == "h":
            a, b = bounds_eval(gen)
            options = _h_candidates(alg, a, b)
        elif gen.sort == "v":
            a, b = bounds_eval(gen)
            options = _v_candidates(alg, a, b)
        else:
            top, bottom, left, right = bounds_eval(gen)
            options = _sq_candidates(alg, top, bottom, left, right)
        for image in options:
            spent += 1
            if spent > budget:
                raise BudgetExceeded(f"enumeration exceeded budget {budget}")
            if gen.sort == "sq" and not _flag_ok(alg, gen.flags, image):
                continue
            env[gen.name] = image
            ok = True
            for lhs, rhs in relation_ready.get(i, []):
                if ex.evaluate(alg, lhs, env) != ex.evaluate(alg, rhs, env):
                    ok = False
                    break
            if ok:
                walk(i + 1)
            del env[gen.name]

    walk(0)
    out.sort(key=lambda valuation: tuple(sorted(valuation.items())))
    return out


def canonical(valuation: dict) -> tuple:
    return tuple(sorted(valuation.items()))


def has_rlp(functor, morphism: PresentationMorphism, budget: int | None = None):
    """Right lifting property of a (double or 2-) functor against a
    presentation morphism: every commuting square admits a diagonal filler."""
    src_pres, tgt_pres = morphism.source, morphism.target
    A, B = functor.source, functor.target
    if isinstance(A, FiniteDoubleCategory):
        maps = (functor.object_map, functor.h_map, functor.v_map, functor.sq_map)
        sort_map = {"object": 0, "h": 1, "v": 2, "sq": 3}
    else:
        maps = (functor.object_map, functor.one_map, None, functor.two_map)
        sort_map = {"object": 0, "h": 1, "sq": 3}

    def push(pres, valuation):
        out = {}
        for g in pres.gens:
            out[g.name] = maps[sort_map[g.sort]][valuation[g.name]]
        return out

    tops = enumerate_functors(src_pres, A, budget)
    bottoms = enumerate_functors(tgt_pres, B, budget)
    lowers = enumerate_functors(tgt_pres, A, budget)
    for a in tops:
        fa = canonical(push(src_pres, a))
        for b in bottoms:
            if canonical(morphism.precompose(B, b)) != fa:
                continue
            found = False
            for c in lowers:
                if canonical(morphism.precompose(A, c)) != canonical(a):
                    continue
                if canonical(push(tgt_pres, c)) == canonical(b):
                    found = True
                    break
            if not found:
                return False, (canonical(a), canonical(b))
    return True, None
