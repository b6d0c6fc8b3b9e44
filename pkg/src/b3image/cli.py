"""Command-line front end.

Four subcommands: `classify` runs the decision cascade on a spectrum given as
exact exponents, `closure` enumerates a projective matrix group from one of
the built-in representation builders, `qg` reproduces a quantum-group gallery
row, and `sweep` classifies every normalized spectrum up to a given eigenvalue
order and writes the table.

Exit codes: 0 = result produced, 2 = input error, 3 = a closure exceeded its
bound (the partial result is still printed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import combinations

from .errors import B3ImageError, InvalidSpec, MissingParam
from .exactfield import RootOfUnity
from .grouporacle import COMPLETED, DEFAULT_BOUND, projective_closure
from .qgallery import FAMILIES, reproduce
from .repforms import EigenSpec, build_d3, build_d4_block, build_so7, build_so9
from .verdict import classify, projective_order_of_spec

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_EXCEEDED = 3

_SIGNS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
_SWEEP_COLUMNS = ("dim", "eigenvalues", "po", "pattern", "rule", "kind")


def _emit(text: str, path: str | None) -> None:
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def _key_value_table(data: dict) -> str:
    width = max(len(k) for k in data)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in data.items())


# -- classify --------------------------------------------------------------------


def _build_spec(args: argparse.Namespace) -> EigenSpec:
    d_sign = _SIGNS[args.d_sign] if args.d_sign is not None else None
    if args.eig is None:
        if not args.non_root:
            raise MissingParam("--eig is required unless --non-root is given")
        # placeholder spectrum: 2.1(a) short-circuits before it is read
        return EigenSpec.from_exponents([Fraction(0)] * args.dim)
    exponents = [part.strip() for part in args.eig.split(",")]
    if len(exponents) != args.dim:
        raise InvalidSpec(
            f"--dim {args.dim} needs {args.dim} eigenvalues, got {len(exponents)}"
        )
    return EigenSpec.from_exponents(exponents, d_sign=d_sign, gamma=args.gamma)


def cmd_classify(args: argparse.Namespace) -> int:
    verdict = classify(_build_spec(args), non_root_flag=args.non_root)
    if args.format == "json":
        text = _json_text(verdict.to_json())
    else:
        data = {"kind": verdict.kind, "rule": verdict.rule}
        for key, value in (
            ("po", verdict.po),
            ("pattern", verdict.pattern.variant if verdict.pattern else None),
            ("o(u)", verdict.o_u),
            ("D", verdict.d_sign),
            ("parity", verdict.parity),
        ):
            if value is not None:
                data[key] = value
        data.update((f"trace:{stage}", note) for stage, note in verdict.trace)
        text = _key_value_table(data)
    _emit(text, args.output)
    return EXIT_OK


# -- closure ---------------------------------------------------------------------


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise MissingParam(f"--builder {args.builder} needs {flags}")


def _closure_generators(args: argparse.Namespace):
    if args.builder == "d3":
        _require(args, "theta", "phi")
        return build_d3(RootOfUnity.parse(args.theta), RootOfUnity.parse(args.phi))
    if args.builder == "d4block":
        _require(args, "u", "d_sign")
        return build_d4_block(RootOfUnity.parse(args.u), _SIGNS[args.d_sign])
    if args.builder == "so7":
        _require(args, "ell")
        return build_so7(args.ell, _SIGNS[args.d_sign] if args.d_sign else 1)
    _require(args, "ell")
    return build_so9(args.ell)


def cmd_closure(args: argparse.Namespace) -> int:
    result = projective_closure(
        list(_closure_generators(args)), args.bound, engine=args.engine
    )
    if args.format == "json":
        text = _json_text(result.to_json())
    else:
        data = {"outcome": result.outcome, "order": result.order, "bound": result.bound}
        data.update(result.stats)
        text = _key_value_table(data)
    _emit(text, args.output)
    return EXIT_OK if result.outcome == COMPLETED else EXIT_EXCEEDED


# -- qg --------------------------------------------------------------------------


def cmd_qg(args: argparse.Namespace) -> int:
    report = reproduce(args.family, args.ell, args.bound)
    if args.format == "json":
        text = _json_text(report.to_json())
    else:
        closure = "-"
        if report.closure is not None:
            closure = f"{report.closure.outcome}({report.closure.order})"
        text = _key_value_table(
            {
                "family": report.family,
                "ell": report.ell,
                "kind": report.verdict.kind,
                "rule": report.verdict.rule,
                "closure": closure,
                "expected": report.expectation.quote,
                "agreement": report.agreement,
            }
        )
    _emit(text, args.output)
    return EXIT_OK


# -- sweep -----------------------------------------------------------------------


def sweep_rows(dim: int, max_order: int) -> list[dict]:
    """Classify every normalized spectrum (first eigenvalue 1, the rest
    distinct with orders dividing max_order), in enumeration order."""
    pool = [Fraction(k, max_order) for k in range(1, max_order)]
    rows = []
    for combo in combinations(pool, dim - 1):
        spec = EigenSpec.from_exponents((Fraction(0),) + combo)
        verdict = classify(spec)
        rows.append(
            {
                "dim": dim,
                "eigenvalues": ";".join(
                    f"{e.numerator}/{e.denominator}" for e in spec.exponents()
                ),
                "po": projective_order_of_spec(spec),
                "pattern": verdict.pattern.variant if verdict.pattern else "",
                "rule": verdict.rule,
                "kind": verdict.kind,
            }
        )
    return rows


def _rows_text(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return _json_text(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [_SWEEP_COLUMNS] + [
        tuple(str(row[c]) for c in _SWEEP_COLUMNS) for row in rows
    ]
    widths = [max(len(r[i]) for r in cells) for i in range(len(_SWEEP_COLUMNS))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in cells
    )


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_order < 1:
        raise InvalidSpec(f"--max-order must be >= 1, got {args.max_order}")
    _emit(_rows_text(sweep_rows(args.dim, args.max_order), args.format), args.output)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def _output_options(p: argparse.ArgumentParser, formats: tuple, default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="b3image",
        description="Decide finiteness of 3-strand braid group images "
        "from exact generator eigenvalues.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="run the decision cascade on a spectrum")
    p.add_argument("--dim", type=int, required=True, help="dimension, 2 to 5")
    p.add_argument(
        "--eig",
        help="comma separated exponents; k/n denotes e^{2*pi*i*k/n}",
    )
    p.add_argument(
        "--d-sign",
        dest="d_sign",
        choices=sorted(_SIGNS),
        help="dim-4 representation choice: sign of gamma^2 / sqrt(det)",
    )
    p.add_argument("--gamma", help="dim-5 fifth root of det, as exponent k/n")
    p.add_argument(
        "--non-root",
        dest="non_root",
        action="store_true",
        help="declare some eigenvalue is not a root of unity (--eig optional)",
    )
    _output_options(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("closure", help="enumerate a projective matrix group")
    p.add_argument(
        "--builder", choices=("d3", "d4block", "so7", "so9"), required=True
    )
    p.add_argument("--theta", help="d3: first eigenvalue exponent k/n")
    p.add_argument("--phi", help="d3: second eigenvalue exponent k/n")
    p.add_argument("--u", help="d4block: eigenvalue ratio exponent k/n")
    p.add_argument("--d-sign", dest="d_sign", choices=sorted(_SIGNS))
    p.add_argument("--ell", type=int, help="so7/so9: level parameter")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--engine", choices=("auto", "fast", "exact"), default="auto")
    _output_options(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("qg", help="reproduce one quantum-group gallery row")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _output_options(p, ("json", "table"), "json")
    p.set_defaults(func=cmd_qg)

    p = sub.add_parser("sweep", help="classify all spectra up to an order bound")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument(
        "--max-order",
        dest="max_order",
        type=int,
        required=True,
        help="eigenvalue orders divide this",
    )
    _output_options(p, ("csv", "json", "table"), "csv")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (B3ImageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
