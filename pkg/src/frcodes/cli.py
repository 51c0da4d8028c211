"""Command-line surface: every subcommand is a thin adapter over the library.

Exit codes: 0 on success, 1 on a domain error (bad code, bad file, failed
verification), 2 on a usage error.  Output is byte-stable for identical
inputs; the report timing footer goes to stderr and can be silenced with
--no-timing.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import catalog
from .bounds import bound_profile
from .designs import TDesign, check_design_optimality, design_from_json_text, design_to_fr
from .dress import distribute, mds_encode, reconstruct, repair
from .errors import FrCodesError, ParameterError, ReconstructionError
from .hierarchy import Hierarchy, full_hierarchy, staircase_csv
from .incidence import (
    FrCode,
    from_json_text,
    from_matrix_text,
    is_simple,
    to_json_text,
    to_matrix_text,
    dual,
    validate_fr,
)
from .products import gfr, gfr_hierarchy, tensor, tensor_hierarchy

# (n, alpha, theta, rho), k pairs for the built-in bound comparison table
_TABLE1_CASES = (
    ((10, 2, 5, 4), 3),
    ((10, 4, 10, 4), 4),
    ((10, 4, 8, 5), 3),
    ((11, 3, 11, 3), 6),
    ((11, 4, 11, 4), 5),
    ((12, 2, 8, 3), 5),
    ((12, 2, 8, 3), 7),
    ((12, 2, 6, 4), 3),
    ((12, 2, 6, 4), 5),
    ((12, 3, 12, 3), 7),
    ((12, 4, 12, 4), 6),
    ((12, 5, 15, 4), 6),
    ((12, 6, 18, 4), 6),
    ((12, 7, 21, 4), 6),
    ((12, 8, 24, 4), 6),
    ((13, 3, 13, 3), 8),
    ((13, 8, 26, 4), 7),
    ((14, 8, 28, 4), 8),
    ((14, 12, 42, 4), 8),
)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload) -> None:
    _emit(json.dumps(payload, indent=2))


def _read_structure_text(path: str):
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return from_json_text(text)
    return from_matrix_text(text)


def _load_code(args) -> tuple[FrCode, str]:
    if getattr(args, "catalog", None):
        return catalog.get(args.catalog), f"catalog:{args.catalog}"
    structure = _read_structure_text(args.input)
    return validate_fr(structure), f"file:{args.input}"


def _params_dict(code: FrCode) -> dict:
    return {"n": code.n, "alpha": code.alpha, "theta": code.theta, "rho": code.rho}


def _parse_int_list(raw: str, label: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part != ""]
    except ValueError as exc:
        raise ParameterError(f"{label} must be a comma-separated integer list") from exc


# --- subcommand handlers ---------------------------------------------------


def _cmd_validate(args) -> int:
    code, descriptor = _load_code(args)
    payload = {
        "input": descriptor,
        **_params_dict(code),
        "simple": is_simple(code.structure),
    }
    if args.format == "table":
        lines = [f"{key}: {value}" for key, value in payload.items()]
        _emit("\n".join(lines))
    else:
        _emit_json(payload)
    return 0


def _hierarchy_payload(descriptor: str, h: Hierarchy) -> dict:
    return {"input": descriptor, **h.to_json_dict()}


def _cmd_hierarchy(args) -> int:
    code, descriptor = _load_code(args)
    h = full_hierarchy(code)
    if args.format == "csv":
        _emit(staircase_csv(h))
    elif args.format == "table":
        lines = ["  k    M_k    N_k"]
        for k in range(h.n + 1):
            lines.append(f"{k:3d} {h.m_values[k]:6d} {h.n_values[k]:6d}")
        _emit("\n".join(lines))
    else:
        _emit_json(_hierarchy_payload(descriptor, h))
    return 0


def _cmd_dual(args) -> int:
    code, _ = _load_code(args)
    transposed = dual(code)
    if args.format == "table":
        _emit(to_matrix_text(transposed.structure))
    else:
        _emit(to_json_text(transposed.structure))
    return 0


def _cmd_bounds(args) -> int:
    values = _parse_int_list(args.params, "--params")
    if len(values) != 4:
        raise ParameterError("--params must be n,alpha,theta,rho")
    n, alpha, theta, rho = values
    profile = bound_profile(n, alpha, theta, rho)
    rows = profile.rows()
    if args.k is not None:
        if not 1 <= args.k <= n:
            raise ParameterError(f"--k must be in 1..{n}, got {args.k}")
        rows = [rows[args.k - 1]]
    if args.format == "csv":
        lines = ["k,recursive,dual,floor,tightest"]
        for row in rows:
            lines.append(
                f"{row['k']},{row['recursive']},{row['dual']},{row['floor']},{row['tightest']}"
            )
        _emit("\n".join(lines))
    elif args.format == "table":
        lines = ["  k  recursive  dual  floor  tightest"]
        for row in rows:
            lines.append(
                f"{row['k']:3d} {row['recursive']:10d} {row['dual']:5d} "
                f"{row['floor']:6d} {row['tightest']:9d}"
            )
        _emit("\n".join(lines))
    else:
        _emit_json({"params": values, "rows": rows})
    return 0


def _load_side(path_value, catalog_value, side: str) -> tuple[FrCode, str]:
    if catalog_value:
        return catalog.get(catalog_value), f"catalog:{catalog_value}"
    if not path_value:
        raise ParameterError(f"missing --{side} or --{side}-catalog")
    return validate_fr(_read_structure_text(path_value)), f"file:{path_value}"


def _cmd_tensor(args) -> int:
    left, left_desc = _load_side(args.left, args.left_catalog, "left")
    right, right_desc = _load_side(args.right, args.right_catalog, "right")
    product = tensor(left, right)
    chain = tensor_hierarchy(
        full_hierarchy(left).n_values, full_hierarchy(right).n_values
    )
    m_values = tuple(product.theta - v for v in chain)
    h = Hierarchy(product.n, product.theta, m_values, chain)
    payload = {
        "left": left_desc,
        "right": right_desc,
        "params": _params_dict(product),
        "code": {
            "theta": product.theta,
            "blocks": [list(b) for b in product.blocks],
        },
        "hierarchy": h.to_json_dict(),
    }
    _emit_json(payload)
    return 0


def _cmd_gfr(args) -> int:
    alphas = _parse_int_list(args.alphas, "--alphas")
    code = gfr(args.g, alphas)
    h = gfr_hierarchy(args.g, alphas)
    payload = {
        "g": args.g,
        "alphas": alphas,
        "params": _params_dict(code),
        "code": {"theta": code.theta, "blocks": [list(b) for b in code.blocks]},
        "hierarchy": h.to_json_dict(),
    }
    _emit_json(payload)
    return 0


def _triangle(design: TDesign) -> list[list[int]]:
    rows = []
    for contained in range(design.t + 1):
        rows.append(
            [
                design.intersection_number(contained, avoided)
                for avoided in range(design.t - contained + 1)
            ]
        )
    return rows


def _cmd_design_check(args) -> int:
    if args.catalog:
        design = catalog.get_design(args.catalog)
        descriptor = f"catalog:{args.catalog}"
    else:
        design = design_from_json_text(Path(args.input).read_text(encoding="utf-8"))
        descriptor = f"file:{args.input}"
    report = check_design_optimality(design)
    code = design_to_fr(design)
    payload = {
        "input": descriptor,
        "v": design.v,
        "m": design.m,
        "t": design.t,
        "lambda": design.lam,
        "b": design.b,
        "code_params": _params_dict(code),
        "intersection_numbers": _triangle(design),
        "optimality": [
            {
                "file_size": row.file_size,
                "smallest_k": row.smallest_k,
                "degree_bound": row.degree_bound,
                "attained": row.attained,
            }
            for row in report.rows
        ],
        "all_attained": report.all_attained,
    }
    _emit_json(payload)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        payload = [
            {
                "name": entry.name,
                "params": _params_dict(entry.code),
                "provenance": entry.provenance,
            }
            for entry in catalog.entries()
        ]
        _emit_json(payload)
        return 0
    if not args.name:
        raise ParameterError("catalog dump requires a name")
    code = catalog.get(args.name)
    _emit(to_json_text(code.structure))
    return 0


def _cmd_dress_demo(args) -> int:
    if args.catalog:
        code = catalog.get(args.code)
        descriptor = f"catalog:{args.code}"
    else:
        code = validate_fr(_read_structure_text(args.code))
        descriptor = f"file:{args.code}"
    m = args.file_size
    rng = random.Random(args.seed)
    file_symbols = [rng.randrange(256) for _ in range(m)]
    encoded = mds_encode(file_symbols, code.theta)
    system = distribute(code, encoded, file_size=m)
    transcript: dict = {
        "code": descriptor,
        "params": _params_dict(code),
        "file_size": m,
        "seed": args.seed,
        "file": file_symbols,
        "encoded": list(encoded),
        "node_contents": [[list(pair) for pair in node] for node in system.node_contents],
    }
    if args.fail is not None:
        before = list(system.node_contents[args.fail])
        result = repair(system, args.fail)
        transcript["repair"] = {
            "failed": args.fail,
            "transfers": [
                {
                    "helper": tr.helper,
                    "point": tr.point,
                    "symbol": tr.symbol,
                    "uncoded": tr.uncoded,
                }
                for tr in result.transfers
            ],
            "symbols_transferred": len(result.transfers),
            "bytes_transferred": len(result.transfers),
            "restored_exactly": list(result.contents) == before,
        }
    if args.reconstruct:
        nodes = _parse_int_list(args.reconstruct, "--reconstruct")
        entry: dict = {"nodes": nodes}
        try:
            recovered = reconstruct(system, nodes)
            entry["success"] = True
            entry["recovered"] = list(recovered)
            entry["matches_original"] = list(recovered) == file_symbols
        except ReconstructionError as exc:
            entry["success"] = False
            entry["deficit"] = exc.deficit
            entry["error"] = str(exc)
        transcript["reconstruct"] = entry
    _emit_json(transcript)
    return 0


def _cmd_report(args) -> int:
    started = time.perf_counter()
    code, descriptor = _load_code(args)
    h = full_hierarchy(code)
    profile = bound_profile(code.n, code.alpha, code.theta, code.rho)
    rows = []
    for row in profile.rows():
        k = row["k"]
        mk = h.m_values[k]
        rows.append(
            {
                **row,
                "m": mk,
                "meets": {
                    "recursive": mk == row["recursive"],
                    "dual": mk == row["dual"],
                    "floor": mk == row["floor"],
                },
            }
        )
    payload = {
        "input": descriptor,
        "parameters": _params_dict(code),
        "simple": is_simple(code.structure),
        "hierarchy": h.to_json_dict(),
        "bounds": rows,
    }
    _emit_json(payload)
    if not args.no_timing:
        elapsed = time.perf_counter() - started
        print(f"# elapsed_seconds={elapsed:.3f}", file=sys.stderr)
    return 0


def table1_rows() -> list[dict]:
    """The built-in recursive-vs-dual comparison rows."""
    from .bounds import dual_bound, recursive_bound

    rows = []
    for (n, alpha, theta, rho), k in _TABLE1_CASES:
        rows.append(
            {
                "params": [n, alpha, theta, rho],
                "k": k,
                "recursive": recursive_bound(n, alpha, theta, rho, k),
                "dual": dual_bound(n, alpha, theta, rho, k),
            }
        )
    return rows


def _cmd_table1(args) -> int:
    rows = table1_rows()
    if args.format == "csv":
        lines = ["n,alpha,theta,rho,k,recursive,dual"]
        for row in rows:
            n, alpha, theta, rho = row["params"]
            lines.append(
                f"{n},{alpha},{theta},{rho},{row['k']},{row['recursive']},{row['dual']}"
            )
        _emit("\n".join(lines))
    elif args.format == "table":
        lines = ["params            k  recursive  dual"]
        for row in rows:
            params = "(" + ",".join(str(v) for v in row["params"]) + ")"
            lines.append(
                f"{params:<15} {row['k']:3d} {row['recursive']:10d} {row['dual']:5d}"
            )
        _emit("\n".join(lines))
    else:
        _emit_json(rows)
    return 0


# --- parser ----------------------------------------------------------------


def _add_input_options(sub, formats=("structured", "table")):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="path to a matrix or JSON structure file")
    group.add_argument("--catalog", help="catalog name, e.g. complete-graph-5")
    if formats:
        sub.add_argument(
            "--format",
            choices=formats,
            default="structured",
            help="output format (default: structured JSON)",
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frcodes",
        description="Construct and analyze fractional repetition storage codes.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("validate", help="validate a code and print its parameters")
    _add_input_options(sub)
    sub.set_defaults(func=_cmd_validate)

    sub = subs.add_parser("hierarchy", help="exact supported-file-size hierarchy")
    _add_input_options(sub, formats=("structured", "table", "csv"))
    sub.set_defaults(func=_cmd_hierarchy)

    sub = subs.add_parser("dual", help="emit the transposed code")
    _add_input_options(sub)
    sub.set_defaults(func=_cmd_dual)

    sub = subs.add_parser("bounds", help="file-size upper bounds for a parameter tuple")
    sub.add_argument("--params", required=True, help="n,alpha,theta,rho")
    sub.add_argument("--k", type=int, default=None, help="single reconstruction degree")
    sub.add_argument(
        "--format",
        choices=("structured", "table", "csv"),
        default="structured",
    )
    sub.set_defaults(func=_cmd_bounds)

    sub = subs.add_parser("tensor", help="tensor product of two codes")
    sub.add_argument("--left", help="path to the left factor")
    sub.add_argument("--left-catalog", help="catalog name of the left factor")
    sub.add_argument("--right", help="path to the right factor")
    sub.add_argument("--right-catalog", help="catalog name of the right factor")
    sub.set_defaults(func=_cmd_tensor)

    sub = subs.add_parser("gfr", help="build a (g, alpha_1..alpha_s)-GFR code")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--alphas", required=True, help="comma list, e.g. 3,1")
    sub.set_defaults(func=_cmd_gfr)

    sub = subs.add_parser("design-check", help="verify a design and its optimality")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="JSON file with theta, blocks and t")
    group.add_argument("--catalog", help="design name: design-7-4-2 or fano")
    sub.set_defaults(func=_cmd_design_check)

    sub = subs.add_parser("catalog", help="list or dump the built-in codes")
    sub.add_argument("action", choices=("list", "dump"))
    sub.add_argument("name", nargs="?", help="entry name for dump")
    sub.set_defaults(func=_cmd_catalog)

    sub = subs.add_parser("dress-demo", help="end-to-end encode/fail/repair/reconstruct")
    sub.add_argument("--code", required=True, help="path or catalog name of the layout")
    sub.add_argument(
        "--catalog",
        action="store_true",
        help="treat --code as a catalog name instead of a path",
    )
    sub.add_argument("--file-size", type=int, required=True, help="outer code dimension M")
    sub.add_argument("--fail", type=int, default=None, help="node index to fail and repair")
    sub.add_argument("--reconstruct", help="comma list of nodes to contact")
    sub.add_argument("--seed", type=int, default=0, help="seed for the demo file")
    sub.set_defaults(func=_cmd_dress_demo)

    sub = subs.add_parser("report", help="parameters, hierarchy and bound table")
    _add_input_options(sub, formats=None)
    sub.add_argument("--no-timing", action="store_true", help="suppress the timing footer")
    sub.set_defaults(func=_cmd_report)

    sub = subs.add_parser("table1", help="built-in recursive-vs-dual comparison table")
    sub.add_argument(
        "--format",
        choices=("structured", "table", "csv"),
        default="structured",
    )
    sub.set_defaults(func=_cmd_table1)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except FrCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
