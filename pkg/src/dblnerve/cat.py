"""Finite 1-categories as validated composition tables.

Cells are plain strings.  Composition is stored as a total lookup table
on composable pairs; ``compose(g, f)`` means "f first, then g".  The
interchange format keeps identities implicit (they are synthesized with
names ``id:<object>``), but the validated object carries them explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadIdentity, DanglingReference, MissingComposite, NonAssociative


def id_of(obj: str) -> str:
    return f"id:{obj}"


@dataclass(frozen=True)
class FiniteCategory:
    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    src: dict[str, str] = field(hash=False)
    tgt: dict[str, str] = field(hash=False)
    identity: dict[str, str] = field(hash=False)  # object -> morphism
    compose: dict[tuple[str, str], str] = field(hash=False)  # (g, f) -> g∘f

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    def is_identity(self, m: str) -> bool:
        return m in self._identity_set()

    def _identity_set(self):
        cached = self.__dict__.get("_ids")
        if cached is None:
            cached = frozenset(self.identity.values())
            self.__dict__["_ids"] = cached
        return cached

    def then(self, f: str, g: str) -> str:
        """Composite of f followed by g."""
        return self.compose[(g, f)]

    def hom(self, a: str, b: str) -> list[str]:
        return [m for m in self.morphisms if self.src[m] == a and self.tgt[m] == b]


def validate_category(raw: dict) -> FiniteCategory:
    """Validate raw tables and return a FiniteCategory.

    ``raw`` uses the interchange layout: ``objects``, ``morphisms`` (each
    ``{"name", "src", "tgt"}``, identities omitted) and ``compose`` (list of
    ``[first, then, result]`` triples for non-identity composable pairs).
    The composition table is closed-world: every composable non-identity
    pair must appear exactly once.
    """
    objects = list(raw.get("objects", []))
    if len(set(objects)) != len(objects):
        raise DanglingReference("duplicate object names")
    obj_set = set(objects)

    src: dict[str, str] = {}
    tgt: dict[str, str] = {}
    morphisms: list[str] = []
    for entry in raw.get("morphisms", []):
        name, s, t = entry["name"], entry["src"], entry["tgt"]
        if name in src or name in obj_set:
            raise DanglingReference(f"duplicate morphism name {name!r}")
        if s not in obj_set or t not in obj_set:
            raise DanglingReference(f"morphism {name!r} has unknown endpoint {s!r} or {t!r}")
        src[name], tgt[name] = s, t
        morphisms.append(name)

    identity = {}
    for a in objects:
        i = id_of(a)
        if i in src:
            raise DanglingReference(f"reserved identity name {i!r} declared explicitly")
        src[i], tgt[i] = a, a
        identity[a] = i
    all_morphisms = morphisms + [identity[a] for a in objects]

    compose: dict[tuple[str, str], str] = {}
    for f, g, h in raw.get("compose", []):
        for m in (f, g, h):
            if m not in src:
                raise DanglingReference(f"compose entry references unknown morphism {m!r}")
        if tgt[f] != src[g]:
            raise MissingComposite(f"pair ({f!r} then {g!r}) is not composable")
        if (g, f) in compose:
            raise MissingComposite(f"duplicate compose entry for ({f!r}, {g!r})")
        compose[(g, f)] = h

    # Identities act as units; inferred entries must not clash with given ones.
    for m in all_morphisms:
        for pair, value in (((m, identity[src[m]]), m), ((identity[tgt[m]], m), m)):
            if pair in compose and compose[pair] != value:
                raise BadIdentity(f"identity law fails at {pair}: got {compose[pair]!r}, need {value!r}")
            compose[pair] = value

    cat = FiniteCategory(
        objects=tuple(objects),
        morphisms=tuple(sorted(all_morphisms)),
        src=src,
        tgt=tgt,
        identity=identity,
        compose=compose,
    )
    check_category_laws(cat)
    return cat


def check_category_laws(cat: FiniteCategory) -> None:
    for (g, f), h in cat.compose.items():
        if cat.tgt[f] != cat.src[g]:
            raise MissingComposite(f"table entry ({f!r}, {g!r}) is not composable")
        if cat.src[h] != cat.src[f] or cat.tgt[h] != cat.tgt[g]:
            raise MissingComposite(f"composite of ({f!r}, {g!r}) has wrong boundary {h!r}")
    for a in cat.objects:
        i = cat.identity[a]
        if cat.src[i] != a or cat.tgt[i] != a:
            raise BadIdentity(f"identity of {a!r} has boundary ({cat.src[i]!r}, {cat.tgt[i]!r})")
    for f in cat.morphisms:
        for g in cat.morphisms:
            if cat.tgt[f] == cat.src[g] and (g, f) not in cat.compose:
                raise MissingComposite(f"no composite declared for ({f!r} then {g!r})")
        if cat.compose[(f, cat.identity[cat.src[f]])] != f:
            raise BadIdentity(f"right identity law fails at {f!r}")
        if cat.compose[(cat.identity[cat.tgt[f]], f)] != f:
            raise BadIdentity(f"left identity law fails at {f!r}")
    for f in cat.morphisms:
        for g in cat.morphisms:
            if cat.tgt[f] != cat.src[g]:
                continue
            gf = cat.compose[(g, f)]
            for h in cat.morphisms:
                if cat.tgt[g] != cat.src[h]:
                    continue
                if cat.compose[(h, gf)] != cat.compose[(cat.compose[(h, g)], f)]:
                    raise NonAssociative(f"associativity fails on triple ({f!r}, {g!r}, {h!r})")


@dataclass(frozen=True)
class CatFunctor:
    source: FiniteCategory
    target: FiniteCategory
    object_map: dict[str, str] = field(hash=False)
    morphism_map: dict[str, str] = field(hash=False)

    def __hash__(self):
        return id(self)


def validate_cat_functor(source, target, object_map, morphism_map) -> CatFunctor:
    om = dict(object_map)
    mm = dict(morphism_map)
    for a in source.objects:
        if om.get(a) not in target.objects:
            raise DanglingReference(f"no image for object {a!r}")
        mm.setdefault(source.identity[a], target.identity[om[a]])
    for m in source.morphisms:
        n = mm.get(m)
        if n not in set(target.morphisms):
            raise DanglingReference(f"no image for morphism {m!r}")
        if target.src[n] != om[source.src[m]] or target.tgt[n] != om[source.tgt[m]]:
            raise MissingComposite(f"image of {m!r} has wrong boundary")
    for a in source.objects:
        if mm[source.identity[a]] != target.identity[om[a]]:
            raise BadIdentity(f"identity of {a!r} not preserved")
    for (g, f), h in source.compose.items():
        if target.compose[(mm[g], mm[f])] != mm[h]:
            raise NonAssociative(f"composition not preserved on ({f!r}, {g!r})")
    return CatFunctor(source, target, om, mm)


def is_free_category(cat: FiniteCategory):
    """Freeness verdict via unique factorization into indecomposables.

    Returns ``(True, graph)`` where ``graph`` maps each generating morphism
    to its (src, tgt), or ``(False, witness)`` where ``witness`` is a
    morphism with zero or at least two factorizations.
    """
    nonid = [m for m in cat.morphisms if not cat.is_identity(m)]
    indec = []
    for m in nonid:
        proper = False
        for f in nonid:
            if cat.src[f] != cat.src[m]:
                continue
            for g in nonid:
                if cat.tgt[f] == cat.src[g] and cat.compose[(g, f)] == m:
                    proper = True
        if not proper:
            indec.append(m)

    # A cycle among indecomposables forces repeated factorizations: iterate
    # the cycle composite until a value repeats (pigeonhole), or observe an
    # identity reached by a non-empty path.
    cycle = _find_cycle(cat, indec)
    if cycle is not None:
        seen = {}
        value = None
        for k in range(1, len(cat.morphisms) + 2):
            value = cycle if value is None else _compose_path(cat, [value] + [cycle])
            if value in seen or cat.is_identity(value):
                return False, value
            seen[value] = k
        return False, value  # unreachable: pigeonhole guarantees a repeat

    counts = {m: 0 for m in cat.morphisms}
    for a in cat.objects:
        counts[cat.identity[a]] += 1  # the empty path at a
    stack = [(e, e) for e in indec]
    while stack:
        value, last = stack.pop()
        counts[value] += 1
        for e in indec:
            if cat.src[e] == cat.tgt[value]:
                stack.append((cat.compose[(e, value)], e))
    for m in cat.morphisms:
        if counts[m] != 1:
            return False, m
    graph = {e: (cat.src[e], cat.tgt[e]) for e in indec}
    return True, graph


def _find_cycle(cat, edges):
    """Composite morphism of some directed cycle among ``edges``, else None."""
    adj: dict[str, list[str]] = {}
    for e in edges:
        adj.setdefault(cat.src[e], []).append(e)
    state: dict[str, int] = {}
    path: list[str] = []

    def visit(a):
        state[a] = 1
        for e in adj.get(a, []):
            b = cat.tgt[e]
            if state.get(b, 0) == 1:
                cyc = [e]
                for prev in reversed(path):
                    cyc.append(prev)
                    if cat.src[prev] == b:
                        break
                cyc.reverse()
                return cyc
            if state.get(b, 0) == 0:
                path.append(e)
                found = visit(b)
                path.pop()
                if found:
                    return found
        state[a] = 2
        return None

    for a in cat.objects:
        if state.get(a, 0) == 0:
            cyc = visit(a)
            if cyc:
                return _compose_path(cat, cyc)
    return None


def _compose_path(cat, path):
    value = path[0]
    for e in path[1:]:
        value = cat.compose[(e, value)]
    return value
