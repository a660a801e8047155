"""Command-line interface.

Every command prints a single JSON report on stdout and exits with 0 for
a true verdict or success, 1 for a false verdict, and 2 for any error.
The enumeration budget can be overridden with DBLNERVE_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dblcat import (
    FiniteDoubleCategory,
    validate_double_functor,
)
from .errors import DblnerveError, UsageError
from .io import dump, load_path, serialize
from .nerve import (
    comparison_maps,
    dbl_nerve_level,
    dbl_nerve_oracle,
    fibrancy_vertical_check,
    segal_tfib_check,
    two_nerve_level,
)
from .presentation import has_rlp
from .shapes import (
    generating_cofibrations_dbl,
    generating_cofibrations_two,
    oriental,
    oriental_adjoint_presentation,
    oriental_variant,
    v_oriental_inv,
)
from .twocat import FiniteTwoCategory, is_biequivalence, validate_two_functor
from .whi import (
    horizontal_equivalences,
    is_double_biequivalence,
    is_trivial_fibration,
    is_whi_square,
    weak_inverse,
    whi_squares,
)


def _emit(report: dict, verdict: bool | None = None) -> int:
    sys.stdout.write(dump(report))
    if verdict is None:
        return 0
    return 0 if verdict else 1


def _load_functor(src_path, tgt_path, map_path):
    src = load_path(src_path)
    tgt = load_path(tgt_path)
    with open(map_path, "r", encoding="utf-8") as handle:
        maps = json.load(handle)
    if isinstance(src, FiniteDoubleCategory):
        return validate_double_functor(
            src, tgt,
            maps.get("objects", {}), maps.get("hmor", {}),
            maps.get("vmor", {}), maps.get("squares", {}),
        )
    if isinstance(src, FiniteTwoCategory):
        return validate_two_functor(
            src, tgt,
            maps.get("objects", {}), maps.get("one_cells", {}), maps.get("two_cells", {}),
        )
    raise UsageError("functor endpoints must be categories of matching kind")


def cmd_validate(args):
    obj = load_path(args.file)
    return _emit({"kind": type(obj).__name__, "valid": True})


def cmd_whi_check(args):
    dbl = _need_double(load_path(args.file))
    if args.square:
        witness = is_whi_square(dbl, _need_square(dbl, args.square))
        report = {"square": args.square, "whi": witness is not None}
        if witness:
            report["weak_inverse"] = witness.beta
            report["top_data"] = list(witness.top_data.as_tuple())
            report["bottom_data"] = list(witness.bottom_data.as_tuple())
        return _emit(report, witness is not None)
    whis = sorted(whi_squares(dbl))
    return _emit({"whi_squares": whis, "count": len(whis)})


def cmd_weak_inverse(args):
    dbl = _need_double(load_path(args.file))
    square = _need_square(dbl, args.square)
    data = json.loads(args.data)
    try:
        top = _pick_data(dbl, data["top"])
        bottom = _pick_data(dbl, data["bottom"])
    except KeyError as err:
        raise UsageError(f"--data needs 'top' and 'bottom' quadruples: {err}") from err
    beta = weak_inverse(dbl, square, top, bottom)
    return _emit({"square": square, "weak_inverse": beta})


def _pick_data(dbl, quad):
    for d in horizontal_equivalences(dbl):
        if list(d.as_tuple()) == list(quad):
            if not d.adjoint:
                raise UsageError(f"data {quad} is not adjoint")
            return d
    raise UsageError(f"{quad} is not a horizontal equivalence of this double category")


def cmd_whi_invariant(args):
    dbl = _need_double(load_path(args.file))
    verdict, witness = fibrancy_vertical_check(dbl)
    report = {"weakly_horizontally_invariant": verdict}
    if witness:
        report["counterexample"] = list(witness)
    return _emit(report, verdict)


def cmd_tfib(args):
    functor = _load_functor(args.src, args.tgt, args.mapfile)
    verdict, reason = is_trivial_fibration(functor)
    report = {"trivial_fibration": verdict}
    if reason:
        report["failure"] = [str(part) for part in reason]
    return _emit(report, verdict)


def cmd_rlp(args):
    functor = _load_functor(args.src, args.tgt, args.mapfile)
    if args.set == "I":
        morphisms = generating_cofibrations_dbl()
    elif args.set == "I2":
        morphisms = {k: v for k, v in generating_cofibrations_two().items() if k.startswith("i")}
    elif args.set == "J2":
        morphisms = {k: v for k, v in generating_cofibrations_two().items() if k.startswith("j")}
    else:
        raise UsageError(f"unknown lifting set {args.set!r}")
    results = {}
    verdict = True
    for name, morphism in sorted(morphisms.items()):
        ok, witness = has_rlp(functor, morphism)
        results[name] = ok
        verdict = verdict and ok
    return _emit({"set": args.set, "rlp": results, "all": verdict}, verdict)


def cmd_bieq(args):
    functor = _load_functor(args.src, args.tgt, args.mapfile)
    verdict, reason = is_biequivalence(functor)
    report = {"biequivalence": verdict}
    if reason:
        report["failure"] = [str(part) for part in reason]
    return _emit(report, verdict)


def cmd_dbl_bieq(args):
    functor = _load_functor(args.src, args.tgt, args.mapfile)
    verdict, reason = is_double_biequivalence(functor)
    report = {"double_biequivalence": verdict}
    if reason:
        report["failure"] = [str(part) for part in reason]
    return _emit(report, verdict)


def cmd_nerve(args):
    dbl = _need_double(load_path(args.file))
    level = dbl_nerve_level(dbl, args.m, args.k, args.n)
    report = {
        "level": [args.m, args.k, args.n],
        "count": level.count(),
        "provenance": level.provenance,
    }
    if args.list:
        report["elements"] = [dict(el) for el in level.elements]
    verdict = None
    if args.oracle or args.compare:
        oracle = dbl_nerve_oracle(dbl, args.m, args.k, args.n)
        report["oracle_count"] = oracle.count()
        if args.compare:
            agree = oracle.elements == level.elements
            report["oracle_agrees"] = agree
            verdict = agree
    return _emit(report, verdict)


def cmd_nerve2(args):
    cat2 = _need_two(load_path(args.file))
    level = two_nerve_level(cat2, args.variant, args.m, args.k, args.n)
    report = {
        "level": [args.m, args.k, args.n],
        "variant": args.variant,
        "count": level.count(),
    }
    if args.list:
        report["elements"] = [dict(el) for el in level.elements]
    verdict = None
    if args.compare_retract:
        cm = comparison_maps(cat2, args.m, args.k, args.n)
        report["retract"] = cm["retract"]
        report["comparison_injective"] = cm["injective"]
        verdict = cm["retract"]
    return _emit(report, verdict)


def cmd_fibrancy(args):
    dbl = _need_double(load_path(args.file))
    verdict, witness = fibrancy_vertical_check(dbl)
    report = {"fibrant_nerve": verdict}
    if witness:
        report["counterexample"] = list(witness)
    return _emit(report, verdict)


def cmd_segal(args):
    dbl = _need_double(load_path(args.file))
    verdict, reason = segal_tfib_check(dbl, args.k)
    report = {"k": args.k, "segal_restriction_trivial_fibration": verdict}
    if reason:
        report["failure"] = [str(part) for part in reason]
    return _emit(report, verdict)


def cmd_shapes_emit(args):
    family = args.family
    if family in ("E_adj", "C", "C_inv", "C2", "dC"):
        from .shapes import shape_2cat

        return _emit(serialize(shape_2cat(family)))
    if family == "v-inverted":
        return _emit(serialize(v_oriental_inv(args.n)))
    if family == "adjoint" and (args.variant or "full") == "full":
        return _emit(serialize(oriental_adjoint_presentation(args.n)))
    variant = args.variant or "full"
    if variant == "full" and family in ("plain", "inverted"):
        return _emit(serialize(oriental(args.n, family == "inverted")))
    shape = oriental_variant(family, args.n, variant, args.t)
    return _emit(serialize(shape))


def _need_double(obj):
    if not isinstance(obj, FiniteDoubleCategory):
        raise UsageError("this command needs a double-category file")
    return obj


def _need_two(obj):
    if not isinstance(obj, FiniteTwoCategory):
        raise UsageError("this command needs a two-category file")
    return obj


def _need_square(dbl, name):
    if name not in set(dbl.squares):
        raise UsageError(f"no square named {name!r}")
    return name


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dblnerve",
        description="Finite 2-category and double-category verification engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an interchange file")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("whi-check", help="weak horizontal invertibility of squares")
    p.add_argument("file")
    p.add_argument("--square")
    p.set_defaults(run=cmd_whi_check)

    p = sub.add_parser("weak-inverse", help="unique weak inverse against adjoint data")
    p.add_argument("file")
    p.add_argument("--square", required=True)
    p.add_argument("--data", required=True, help='JSON {"top": [f,g,eta,eps], "bottom": [...]}')
    p.set_defaults(run=cmd_weak_inverse)

    p = sub.add_parser("whi-invariant", help="weak horizontal invariance")
    p.add_argument("file")
    p.set_defaults(run=cmd_whi_invariant)

    for name, runner in (("tfib", cmd_tfib), ("bieq", cmd_bieq), ("dbl-bieq", cmd_dbl_bieq)):
        p = sub.add_parser(name)
        p.add_argument("src")
        p.add_argument("tgt")
        p.add_argument("mapfile")
        p.set_defaults(run=runner)

    p = sub.add_parser("rlp", help="right lifting property against a generating set")
    p.add_argument("src")
    p.add_argument("tgt")
    p.add_argument("mapfile")
    p.add_argument("--set", default="I", choices=["I", "I2", "J2"])
    p.set_defaults(run=cmd_rlp)

    p = sub.add_parser("nerve", help="double-categorical nerve level")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--compare", action="store_true")
    p.set_defaults(run=cmd_nerve)

    p = sub.add_parser("nerve2", help="2-categorical nerve level")
    p.add_argument("file")
    p.add_argument("--variant", required=True, choices=["h", "hsim"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--compare-retract", action="store_true")
    p.set_defaults(run=cmd_nerve2)

    p = sub.add_parser("fibrancy", help="nerve fibrancy via weak horizontal invariance")
    p.add_argument("file")
    p.set_defaults(run=cmd_fibrancy)

    p = sub.add_parser("segal", help="Segal restriction trivial-fibration check")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(run=cmd_segal)

    p = sub.add_parser("shapes", help="shape family utilities")
    shapes_sub = p.add_subparsers(dest="shapes_command", required=True)
    q = shapes_sub.add_parser("emit", help="serialize a shape")
    q.add_argument("--family", required=True,
                   help="plain | inverted | adjoint | v-inverted | E_adj | C | C_inv | C2 | dC")
    q.add_argument("--n", type=int, default=0)
    q.add_argument("--variant", choices=["full", "boundary", "horn"])
    q.add_argument("--t", type=int)
    q.set_defaults(run=cmd_shapes_emit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except UsageError as err:
        sys.stderr.write(f"usage error: {err}\n")
        return 2
    except (DblnerveError, OSError) as err:
        sys.stderr.write(f"error: {type(err).__name__}: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
