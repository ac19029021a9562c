"""Command-line front end: reports, verification runs, range scans, and
catalog export.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource-limit
refusal.  JSON is the default output format and is byte-stable: parsing a
report and re-serializing it reproduces the same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from . import atlas as atlas_mod
from . import bounds as bounds_mod
from .clifford import build_even_generators, irrep_info, schur_check
from .normalizers import (
    centralizer_basis,
    expected_dims,
    isotropy_dim,
    normalizer_basis,
    numerical_commutant_dims,
)
from .structures import Multiplicities, build, verify

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

DEFAULT_EXACT_MAX_N = 64
DEFAULT_FLOAT_MAX_N = 256


class UsageError(Exception):
    pass


class SizeLimitError(Exception):
    pass


def _parse_mult(text: str, r: int) -> Multiplicities:
    try:
        mult = Multiplicities.parse(text)
    except ValueError as e:
        raise UsageError(str(e))
    try:
        mult.validate_for_rank(r)
    except ValueError as e:
        raise UsageError(str(e))
    return mult


def _parse_range(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


# ----------------------------------------------------------------------
# report

def cmd_report(args) -> int:
    if args.rank < 3:
        raise UsageError("report requires rank >= 3 (the bounds start there)")
    mult = _parse_mult(args.mult, args.rank)
    rep = bounds_mod.bounds_report(args.rank, mult)
    dims = expected_dims(args.rank, mult)
    models = atlas_mod.models_for(args.rank, mult)
    payload = rep.to_json_dict()
    payload["expected_dims"] = {
        "centralizer": dims.centralizer,
        "normalizer": dims.normalizer,
    }
    payload["isotropy_dim"] = isotropy_dim(args.rank, mult)
    payload["models"] = [m.to_json_dict() for m in models]
    if args.format == "json":
        _emit_json(payload)
    else:
        lines = []
        for key in (
            "rank", "mult", "N", "d_max", "d_C", "d_M", "gap_threshold",
            "constraints_ok", "gap_inequality_ok",
        ):
            value = payload[key]
            if key == "d_M" and value is None:
                value = f"undefined ({payload['d_M_reason']})"
            lines.append(f"{key:<20}{value}")
        lines.append(f"{'centralizer':<20}{dims.centralizer}")
        lines.append(f"{'normalizer':<20}{dims.normalizer}")
        lines.append(f"{'isotropy_dim':<20}{payload['isotropy_dim']}")
        lines.append("")
        lines.append(atlas_mod.models_text(models))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# ----------------------------------------------------------------------
# verify

def _gate_size(n: int, mode: str, args) -> None:
    limit = args.max_size
    if limit is None:
        limit = DEFAULT_EXACT_MAX_N if mode == "exact" else DEFAULT_FLOAT_MAX_N
    if n > limit and not args.allow_large:
        hint = (
            "switch to --mode float"
            if mode == "exact"
            else "raise --max-size"
        )
        raise SizeLimitError(
            f"N = {n} exceeds the {mode}-mode limit {limit}; {hint} or pass --allow-large"
        )


def cmd_verify(args) -> int:
    if args.rank < 2:
        raise UsageError("verify requires rank >= 2")
    mult = _parse_mult(args.mult, args.rank)
    n = irrep_info(args.rank).dim * mult.total
    _gate_size(n, args.mode, args)

    default_checks = (
        ["structure", "schur", "centralizer", "normalizer"]
        if args.mode == "exact"
        else ["structure", "centralizer", "normalizer"]
    )
    wanted = args.checks.split(",") if args.checks else default_checks
    known = {"structure", "schur", "centralizer", "normalizer"}
    bad = [c for c in wanted if c not in known]
    if bad:
        raise UsageError(f"unknown checks: {', '.join(bad)} (choose from {sorted(known)})")

    s = build(args.rank, mult)
    results = []

    def record(name, passed, detail=""):
        results.append({"name": name, "passed": bool(passed), "detail": detail})

    if "structure" in wanted:
        rep = verify(s)
        for c in rep.checks:
            record(f"structure.{c.name}", c.passed, c.detail)

    if "schur" in wanted:
        gammas = build_even_generators(args.rank)
        halves = gammas if isinstance(gammas, tuple) else (gammas,)
        for g in halves:
            label = f"schur.{g.half_label}" if g.half_label else "schur"
            try:
                dim = schur_check(g)
                record(label, True, f"commutant dimension {dim}")
            except RuntimeError as e:
                record(label, False, str(e))

    if args.mode == "exact":
        if "centralizer" in wanted or "normalizer" in wanted:
            cent = centralizer_basis(s)
            if "centralizer" in wanted:
                if args.rank >= 3:
                    want = expected_dims(args.rank, mult).centralizer
                    record(
                        "centralizer",
                        cent.dim == want,
                        f"dimension {cent.dim} (expected {want})",
                    )
                else:
                    record("centralizer", True, f"dimension {cent.dim}")
            if "normalizer" in wanted:
                norm = normalizer_basis(s)
                if args.rank >= 3:
                    want = (
                        expected_dims(args.rank, mult).centralizer
                        + s.expected_span_dim()
                    )
                    record(
                        "normalizer",
                        norm.dim == want,
                        f"dimension {norm.dim} (expected {want})",
                    )
                else:
                    record("normalizer", True, f"dimension {norm.dim}")
    else:
        if "centralizer" in wanted or "normalizer" in wanted:
            dims = numerical_commutant_dims(s, tol=args.tolerance)
            if "centralizer" in wanted:
                want = expected_dims(args.rank, mult).centralizer
                record(
                    "centralizer",
                    dims.centralizer == want,
                    f"numerical dimension {dims.centralizer} "
                    f"(expected {want}, tolerance {dims.tolerance})",
                )
            if "normalizer" in wanted:
                want = (
                    expected_dims(args.rank, mult).centralizer
                    + s.expected_span_dim()
                )
                record(
                    "normalizer",
                    dims.normalizer == want,
                    f"numerical dimension {dims.normalizer} "
                    f"(expected {want}, tolerance {dims.tolerance})",
                )

    all_ok = all(r["passed"] for r in results)
    payload = {
        "rank": args.rank,
        "mult": list(mult.values),
        "N": n,
        "mode": args.mode if args.mode == "exact" else "numerical",
        "all_passed": all_ok,
        "checks": results,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        for r in results:
            status = "pass" if r["passed"] else "FAIL"
            detail = f"  ({r['detail']})" if r["detail"] else ""
            sys.stdout.write(f"{status:<6}{r['name']}{detail}\n")
        sys.stdout.write(f"{'pass' if all_ok else 'FAIL'}  overall\n")
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


# ----------------------------------------------------------------------
# scan

def _scan_mults(r: int, mrange: range):
    if r % 4 == 0:
        for m1 in mrange:
            for m2 in mrange:
                if m1 == 0 and m2 == 0:
                    continue
                yield Multiplicities.split(m1, m2)
    else:
        for m in mrange:
            if m >= 1:
                yield Multiplicities.single(m)


def _tristate(text: Optional[str]):
    if text is None:
        return None
    lowered = text.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    if lowered == "undefined":
        return "undefined"
    raise UsageError(f"expected true/false/undefined, got {text!r}")


SCAN_FIELDS = [
    "rank", "mult", "N", "d_max", "gap_threshold", "d_C", "d_M",
    "constraints_ok", "gap_inequality_ok",
]


def cmd_scan(args) -> int:
    rrange = _parse_range(args.rank)
    mrange = _parse_range(args.mult)
    want_constraints = _tristate(args.constraints_ok)
    want_gap = _tristate(args.gap_holds)
    if want_constraints == "undefined":
        raise UsageError("constraints_ok is never undefined")
    rows = []
    for r in rrange:
        if r < 3:
            continue
        for mult in _scan_mults(r, mrange):
            rep = bounds_mod.bounds_report(r, mult)
            if want_constraints is not None and rep.constraints_ok != want_constraints:
                continue
            if want_gap is not None:
                if want_gap == "undefined":
                    if rep.gap_inequality_ok is not None:
                        continue
                elif rep.gap_inequality_ok != want_gap:
                    continue
            rows.append(rep)
    rows.sort(key=lambda rep: (rep.r, rep.mult.values))

    def cell(rep, field):
        if field == "rank":
            return rep.r
        if field == "mult":
            return str(rep.mult)
        value = getattr(rep, field)
        return value

    if args.format == "json":
        _emit_json([rep.to_json_dict() for rep in rows])
    elif args.format == "csv":
        lines = [",".join(SCAN_FIELDS)]
        for rep in rows:
            out = []
            for field in SCAN_FIELDS:
                v = cell(rep, field)
                if v is None:
                    out.append("")
                elif isinstance(v, bool):
                    out.append("true" if v else "false")
                else:
                    out.append(str(v))
            lines.append(",".join(out))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        widths = {f: max(len(f), 10) for f in SCAN_FIELDS}
        header = "".join(f"{f:<{widths[f] + 2}}" for f in SCAN_FIELDS)
        lines = [header, "-" * len(header)]
        for rep in rows:
            line = ""
            for field in SCAN_FIELDS:
                v = cell(rep, field)
                text = "" if v is None else (str(v).lower() if isinstance(v, bool) else str(v))
                line += f"{text:<{widths[field] + 2}}"
            lines.append(line)
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# ----------------------------------------------------------------------
# export-atlas

def cmd_export_atlas(args) -> int:
    if args.rank is None:
        if args.format == "json":
            _emit_json(atlas_mod.symbolic_catalog())
        else:
            sys.stdout.write(atlas_mod.symbolic_catalog_text() + "\n")
        return EXIT_OK
    if args.mult is None:
        raise UsageError("--mult is required when --rank is given")
    mult = _parse_mult(args.mult, args.rank)
    if args.rank < 3:
        raise UsageError("catalog entries require rank >= 3")
    models = atlas_mod.models_for(args.rank, mult)
    if args.format == "json":
        _emit_json([m.to_json_dict() for m in models])
    else:
        sys.stdout.write(atlas_mod.models_text(models) + "\n")
    return EXIT_OK


# ----------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenclifford",
        description=(
            "Even Clifford hermitian structures: dimension bounds, exact "
            "centralizer/normalizer verification, scans, and the model catalog."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="bounds, expected dimensions, models")
    p_report.add_argument("--rank", type=int, required=True)
    p_report.add_argument("--mult", type=str, required=True,
                          help="m for single-irrep ranks, m1,m2 for ranks divisible by 4")
    p_report.add_argument("--format", choices=["json", "text"], default="json")
    p_report.set_defaults(func=cmd_report)

    p_verify = sub.add_parser("verify", help="build a structure and run exact checks")
    p_verify.add_argument("--rank", type=int, required=True)
    p_verify.add_argument("--mult", type=str, required=True)
    p_verify.add_argument("--mode", choices=["exact", "float"], default="exact")
    p_verify.add_argument("--tolerance", type=float, default=1e-9)
    p_verify.add_argument("--max-size", type=int, default=None,
                          help="largest allowed N (defaults: 64 exact, 256 float)")
    p_verify.add_argument("--allow-large", action="store_true")
    p_verify.add_argument("--checks", type=str, default=None,
                          help="comma list from structure,schur,centralizer,normalizer")
    p_verify.add_argument("--format", choices=["json", "text"], default="json")
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="tabulate bounds over rank/multiplicity ranges")
    p_scan.add_argument("--rank", type=str, required=True, help="A:B or single value")
    p_scan.add_argument("--mult", type=str, required=True, help="A:B or single value")
    p_scan.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p_scan.add_argument("--constraints-ok", type=str, default=None,
                        help="filter: true or false")
    p_scan.add_argument("--gap-holds", type=str, default=None,
                        help="filter: true, false or undefined")
    p_scan.set_defaults(func=cmd_scan)

    p_atlas = sub.add_parser("export-atlas", help="model catalog (symbolic or concrete)")
    p_atlas.add_argument("--rank", type=int, default=None)
    p_atlas.add_argument("--mult", type=str, default=None)
    p_atlas.add_argument("--format", choices=["json", "text"], default="json")
    p_atlas.set_defaults(func=cmd_export_atlas)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except SizeLimitError as e:
        sys.stderr.write(f"refused: {e}\n")
        return EXIT_LIMIT
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except Exception as e:  # never crash on valid input
        sys.stderr.write(f"internal error: {e}\n")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
