"""Command line interface: ``arcalg <command> [options]``.

Exit codes: 0 success, 1 a check failed, 2 bad input or settings,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

from .arcalgebra import AlgebraElement, BasisDiagram, get_context
from .combinatorics import (
    Weight,
    cup_diagram,
    enumerate_weights,
    is_regular,
    lambda_circ,
    render_ascii,
    weight_to_partition,
)
from .conf import FORMATS, ext_degree, get_setting, validate_settings
from .exceptions import ArcAlgError, ImproperlyConfigured, ResourceCapExceeded, ValidationError
from .faithcheck import SUITE_NAMES, module_report, run_suite
from .functors import schur_f, tilting
from .klpoly import cartan_matrix, inverse_kl_matrix, kl_matrix, matrix_to_rows, verify_inverse
from .repcat import ModuleRep, ext_dims, hom_dim, projective, simple, standard

logger = logging.getLogger(__name__)

MODULE_KINDS = ("projective", "standard", "simple", "tilting", "cell")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="number of '^' symbols")
    common.add_argument("--n", type=int, help="number of 'v' symbols")
    common.add_argument("--char", type=int, help="0 for the rationals or a prime")
    common.add_argument("--format", choices=FORMATS, help="output format")
    common.add_argument("--deep", action="store_true", help="use the deep resource caps")
    common.add_argument("--workers", type=int, help="worker processes for verify (0 = all CPUs)")
    common.add_argument("--seed", type=int, help="seed for randomized isomorphism tests")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="arcalg",
        description="Exact computations with Khovanov arc algebras and their quasi-hereditary covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", parents=[common], help="list the weights of a box")
    p.add_argument("--regular", action="store_true", help="only regular weights")

    p = sub.add_parser("cup", parents=[common], help="draw the cup diagram of a weight")
    p.add_argument("--weight", required=True)

    p = sub.add_parser("circ", parents=[common], help="the regular weight λ°")
    p.add_argument("--weight", required=True)

    p = sub.add_parser("multiply", parents=[common], help="multiply two basis diagrams")
    p.add_argument("--left", required=True, help="'bottom|middle|top' or JSON")
    p.add_argument("--right", required=True, help="'bottom|middle|top' or JSON")

    sub.add_parser("cartan", parents=[common], help="dimensions of e_λ K e_μ")

    p = sub.add_parser("kl", parents=[common], help="n and p polynomial matrices")
    p.add_argument("--inverse", action="store_true", help="print the p matrix")
    p.add_argument("--check", action="store_true", help="verify the inverse identity")

    p = sub.add_parser("module", parents=[common], help="report on a module")
    p.add_argument("--kind", choices=MODULE_KINDS, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--side", choices=("K", "H"), default="K")

    for name in ("hom", "ext"):
        p = sub.add_parser(name, parents=[common], help=f"dimension of {name.capitalize()}")
        p.add_argument("--left", required=True, help="KIND:WEIGHT, e.g. standard:^vv")
        p.add_argument("--right", required=True, help="KIND:WEIGHT")
        p.add_argument("--side", choices=("K", "H"), default="K")
        if name == "ext":
            p.add_argument("--degree", type=int, help="highest degree (default EXT_DEGREE)")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--json", dest="json_path", type=Path, help="also write reports to PATH")
    return parser


@contextmanager
def setting_overrides(args: argparse.Namespace) -> Iterator[None]:
    """
    Flags win over ``ARCALG_*`` variables for the duration of one command.

    Worker processes started inside the block inherit the overrides.
    """
    overrides = {
        "CHARACTERISTIC": args.char,
        "FORMAT": args.format,
        "WORKERS": args.workers,
        "SEED": args.seed,
    }
    saved = {key: os.environ.get(f"ARCALG_{key}") for key in overrides}
    try:
        for key, value in overrides.items():
            if value is not None:
                os.environ[f"ARCALG_{key}"] = str(value)
        validate_settings()
        yield
    finally:
        for key, old in saved.items():
            if old is None:
                os.environ.pop(f"ARCALG_{key}", None)
            else:
                os.environ[f"ARCALG_{key}"] = old


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emit(payload: Any, fmt: str, text: str | None = None, rows: list[list[str]] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    elif fmt == "csv" and rows is not None:
        csv.writer(sys.stdout).writerows(rows)
    else:
        print(text if text is not None else json.dumps(payload, ensure_ascii=False))


def _weight(args: argparse.Namespace) -> Weight:
    return Weight.parse(args.weight, args.m, args.n)


def _box(args: argparse.Namespace) -> tuple[int, int]:
    if args.m is None or args.n is None:
        raise ValidationError("This command needs both --m and --n.")
    return args.m, args.n


def _diagram(text: str) -> BasisDiagram:
    text = text.strip()
    if text.startswith("{"):
        try:
            return BasisDiagram.from_dict(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ValidationError(f"Cannot read a diagram from {text!r}.") from e
    return BasisDiagram.parse(text)


def build_module(kind: str, weight: Weight, side: str = "K", characteristic: int | None = None) -> ModuleRep:
    """
    The module named on the command line.

    ``cell`` is S(λ) = fΔ(λ) and always lives over H; other kinds are moved
    to H by the Schur functor when ``side`` is ``"H"``.
    """
    ctx = get_context(weight.m, weight.n, characteristic)
    builders = {
        "projective": projective,
        "standard": standard,
        "simple": simple,
        "tilting": lambda c, w: tilting(w, c),
        "cell": standard,
    }
    if kind not in builders:
        raise ValidationError(f"Unknown module kind {kind!r}. Choose from {', '.join(MODULE_KINDS)}.")
    M = builders[kind](ctx, weight)
    if kind == "cell" or side == "H":
        M = schur_f(M)
    return M


def _module_spec(text: str, args: argparse.Namespace) -> ModuleRep:
    kind, sep, raw = text.partition(":")
    if not sep:
        raise ValidationError(f"Expected KIND:WEIGHT, got {text!r}.")
    return build_module(kind, Weight.parse(raw, args.m, args.n), args.side, args.char)


def cmd_weights(args: argparse.Namespace, fmt: str) -> int:
    m, n = _box(args)
    weights = [w for w in enumerate_weights(m, n) if not args.regular or is_regular(w)]
    payload = [
        {"weight": str(w), "partition": list(weight_to_partition(w).parts), "regular": is_regular(w)}
        for w in weights
    ]
    text = "\n".join(f"{w}  {weight_to_partition(w)}" for w in weights)
    rows = [["weight", "partition", "regular"]] + [
        [str(w), str(weight_to_partition(w)), str(is_regular(w))] for w in weights
    ]
    _emit(payload, fmt, text, rows)
    return EXIT_OK


def cmd_cup(args: argparse.Namespace, fmt: str) -> int:
    w = _weight(args)
    d = cup_diagram(w)
    _emit({"weight": str(w), **d.to_dict()}, fmt, render_ascii(d, w))
    return EXIT_OK


def cmd_circ(args: argparse.Namespace, fmt: str) -> int:
    w = _weight(args)
    circ = lambda_circ(w)
    _emit(
        {"weight": str(w), "circ": str(circ), "partition": list(weight_to_partition(circ).parts)},
        fmt,
        f"{w} -> {circ}  {weight_to_partition(circ)}",
    )
    return EXIT_OK


def cmd_multiply(args: argparse.Namespace, fmt: str) -> int:
    a, b = _diagram(args.left), _diagram(args.right)
    product: AlgebraElement = get_context(*a.box, args.char).multiply(a, b)
    _emit(product.to_json(), fmt, str(product))
    return EXIT_OK


def cmd_cartan(args: argparse.Namespace, fmt: str) -> int:
    m, n = _box(args)
    labels = [str(w) for w in enumerate_weights(m, n)]
    matrix = cartan_matrix(m, n)
    rows = [["", *labels]] + [[lab, *map(str, row)] for lab, row in zip(labels, matrix, strict=True)]
    text = "\n".join(" ".join(f"{c:>{max(len(x) for x in labels)}}" for c in row) for row in rows)
    _emit({"weights": labels, "matrix": matrix}, fmt, text, rows)
    return EXIT_OK


def cmd_kl(args: argparse.Namespace, fmt: str) -> int:
    m, n = _box(args)
    if args.check:
        ok = verify_inverse(m, n)
        _emit({"inverse_identity": ok}, fmt, f"inverse identity: {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAILED
    matrix = inverse_kl_matrix(m, n) if args.inverse else kl_matrix(m, n)
    rows = matrix_to_rows(m, n, matrix)
    payload = {
        "weights": [str(w) for w in enumerate_weights(m, n)],
        "matrix": [[p.to_json() for p in row] for row in matrix],
    }
    text = "\n".join("\t".join(row) for row in [rows[0]] + [
        [row[0], *(str(p) for p in mrow)] for row, mrow in zip(rows[1:], matrix, strict=True)
    ])
    _emit(payload, fmt, text, rows)
    return EXIT_OK


def cmd_module(args: argparse.Namespace, fmt: str) -> int:
    M = build_module(args.kind, _weight(args), args.side, args.char)
    report = module_report(M)
    lines = [f"{report.name} over {report.algebra}: dim {report.dim}"]
    lines += [f"  rad layer {k}: {layer}" for k, layer in enumerate(report.radical_layers)]
    if report.delta_multiplicities is not None:
        lines.append(f"  Δ-multiplicities: {report.delta_multiplicities}")
    if report.diagnostic:
        lines.append(f"  {report.diagnostic}")
    _emit(report.model_dump(), fmt, "\n".join(lines))
    return EXIT_OK


def cmd_hom(args: argparse.Namespace, fmt: str) -> int:
    M, N = _module_spec(args.left, args), _module_spec(args.right, args)
    dim = hom_dim(M, N)
    _emit({"left": M.name, "right": N.name, "hom": dim}, fmt, f"dim Hom({M.name}, {N.name}) = {dim}")
    return EXIT_OK


def cmd_ext(args: argparse.Namespace, fmt: str) -> int:
    M, N = _module_spec(args.left, args), _module_spec(args.right, args)
    degree = ext_degree(args.deep) if args.degree is None else args.degree
    dims = ext_dims(M, N, degree, args.deep)
    text = "\n".join(f"dim Ext^{j}({M.name}, {N.name}) = {d}" for j, d in enumerate(dims))
    _emit({"left": M.name, "right": N.name, "ext": dims}, fmt, text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, fmt: str) -> int:
    m, n = _box(args)
    reports = run_suite(args.suite, m, n, args.char, args.deep, args.workers)
    payload = [r.model_dump() for r in reports]
    if args.json_path is not None:
        args.json_path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    rows = [["check", "status", "millis", "note"]] + [
        [r.check, r.status, f"{r.millis:.0f}", r.note] for r in reports
    ]
    _emit(payload, fmt, "\n".join(r.summary_line() for r in reports), rows)
    if any(not r.passed for r in reports):
        return EXIT_FAILED
    if any(r.capped for r in reports):
        return EXIT_CAP
    return EXIT_OK


COMMANDS = {
    "weights": cmd_weights,
    "cup": cmd_cup,
    "circ": cmd_circ,
    "multiply": cmd_multiply,
    "cartan": cmd_cartan,
    "kl": cmd_kl,
    "module": cmd_module,
    "hom": cmd_hom,
    "ext": cmd_ext,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        with setting_overrides(args):
            fmt = str(get_setting("FORMAT"))
            return COMMANDS[args.command](args, fmt)
    except (ValidationError, ImproperlyConfigured) as e:
        print(f"arcalg: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapExceeded as e:
        print(f"arcalg: {e}", file=sys.stderr)
        return EXIT_CAP
    except ArcAlgError as e:
        logger.exception("Computation failed")
        print(f"arcalg: internal error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
