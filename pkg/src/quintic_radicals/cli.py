"""Command-line front end.

    quintic-radicals solve --coeffs 1,0,0,0,0,-1 [--method paper|elimination|oracle]
                           [--tol 1e-8] [--trace] [--format text|json] [--batch FILE]

Coefficients are given highest power first.  Exit codes: 0 success, 2 usage
error, 3 selection/convergence/provider failure, 4 unresolved degeneracy.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .errors import (
    DegenerateError,
    NoConvergence,
    ProviderFailed,
    SelectionFailed,
    ZeroPolynomial,
)
from .identities import IdentityCheck, check_identities
from .poly_core import Polynomial
from .quintic import solve_polynomial
from .tschirnhaus import QuarticCoeffs, SolveReport, SolverConfig

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVE = 3
EXIT_DEGENERATE = 4

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL = re.compile(rf"^[+-]?{_NUM}$")
_IMAG = re.compile(rf"^([+-]?)({_NUM})?[ij]$")
_COMPLEX = re.compile(rf"^([+-]?{_NUM})([+-])({_NUM})?[ij]$")


class UsageError(Exception):
    pass


@dataclass
class CliRequest:
    coefficients: Optional[list[complex]]
    method: str = "paper"
    tol: float = 1e-8
    trace: bool = False
    format: str = "text"
    batch_path: Optional[Path] = None


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (``j`` also accepted)."""
    s = text.strip().replace(" ", "")
    if _REAL.match(s):
        return complex(float(s), 0.0)
    m = _IMAG.match(s)
    if m:
        sign, mag = m.groups()
        val = float(mag) if mag else 1.0
        return complex(0.0, -val if sign == "-" else val)
    m = _COMPLEX.match(s)
    if m:
        re_part, sign, mag = m.groups()
        val = float(mag) if mag else 1.0
        return complex(float(re_part), -val if sign == "-" else val)
    raise UsageError(f"invalid complex literal {text!r}")


def parse_coefficients(text: str) -> list[complex]:
    parts = [t for t in text.split(",")]
    if any(not t.strip() for t in parts):
        raise UsageError(f"empty coefficient in {text!r}")
    coeffs = [parse_complex(t) for t in parts]
    if not 2 <= len(coeffs) <= 6:
        raise UsageError(f"need 2 to 6 coefficients (degree 1-5), got {len(coeffs)}")
    if coeffs[0] == 0:
        raise UsageError("leading coefficient must be nonzero")
    return coeffs


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quintic-radicals", description="Polynomial roots by radicals (degree 1-5).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    solve = sub.add_parser("solve", help="solve one polynomial or a batch file")
    src = solve.add_mutually_exclusive_group(required=True)
    src.add_argument("--coeffs", help="comma-separated coefficients, highest power first")
    src.add_argument("--batch", type=Path, help="file with one coefficient list per line")
    solve.add_argument("--method", choices=("paper", "elimination", "oracle"), default="paper")
    solve.add_argument("--tol", type=float, default=1e-8)
    solve.add_argument("--trace", action="store_true", help="show all candidates of each quartic stage")
    solve.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def parse_args(argv: Sequence[str]) -> CliRequest:
    ns = _build_parser().parse_args(list(argv))
    if ns.command != "solve":
        raise UsageError("expected the 'solve' command")
    if not ns.tol > 0:
        raise UsageError("--tol must be positive")
    coeffs = parse_coefficients(ns.coeffs) if ns.coeffs is not None else None
    return CliRequest(
        coefficients=coeffs,
        method=ns.method,
        tol=ns.tol,
        trace=ns.trace,
        format=ns.format,
        batch_path=ns.batch,
    )


def read_batch(path: Path) -> list[tuple[int, str]]:
    """Non-empty, non-comment lines of a batch file with their line numbers."""
    lines = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    return lines


def _fmt_text(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.12g} {sign} {abs(z.imag):.12g}i"


def _verification(report: SolveReport, p: Polynomial) -> Optional[IdentityCheck]:
    if not report.stages:
        return None
    stage = report.stages[0]
    return check_identities(QuarticCoeffs.from_polynomial(stage.polynomial))


def report_to_json(report: SolveReport, p: Polynomial, trace: bool, check: Optional[IdentityCheck] = None) -> dict:
    out = {
        "degree": p.degree,
        "method": report.method,
        "tolerance": report.tolerance,
        "roots": [
            {"re": r.real, "im": r.imag, "residual": res}
            for r, res in zip(report.roots.roots, report.roots.residuals)
        ],
        "vieta_defect": report.vieta_defect,
    }
    if trace:
        out["candidates"] = [
            {
                "stage": s.name,
                "m": c.m,
                "n": c.n,
                "re": c.value.real,
                "im": c.value.imag,
                "residual": c.residual,
                "accepted": c.accepted,
            }
            for s in report.stages
            for c in s.candidates
        ]
    if check is not None:
        el = check.eliminant
        out["verification"] = {
            "eliminant": [{"re": c.real, "im": c.imag} for c in el.as_tuple()],
            "c3_rel": check.c3_rel,
            "c1_rel": check.c1_rel,
            "B2_rel": check.B2_rel,
            "B0_rel": check.B0_rel,
            "resolvent_rel": check.resolvent_rel,
        }
    return out


def report_to_text(report: SolveReport, p: Polynomial, trace: bool, check: Optional[IdentityCheck] = None) -> str:
    lines = [f"degree {p.degree}, method {report.method}, tolerance {report.tolerance:g}"]
    for k, (r, res) in enumerate(zip(report.roots.roots, report.roots.residuals), start=1):
        lines.append(f"  x{k} = {_fmt_text(r)}    residual {res:.3g}")
    lines.append(f"vieta defect {report.vieta_defect:.3g}")
    if trace:
        for s in report.stages:
            t = s.transform
            lines.append(
                f"{s.name} stage: shift {_fmt_text(s.shift)}, branch {s.branch}, b0 root #{s.b0_index}"
                + (" (low confidence)" if s.low_confidence else "")
            )
            lines.append(f"  b0 = {_fmt_text(t.b0)}, b1 = 0, b2 = {_fmt_text(t.b2)}")
            lines.append(f"  B2 = {_fmt_text(s.resolvent.B2)}, B0 = {_fmt_text(s.resolvent.B0)}")
            for c in s.candidates:
                status = "accepted" if c.accepted else "rejected"
                lines.append(f"  x[{c.m},{c.n}] = {_fmt_text(c.value)}    residual {c.residual:.3g}    {status}")
    if check is not None:
        lines.append("eliminant of the solved quartic (c0..c4):")
        for k, c in enumerate(check.eliminant.as_tuple()):
            lines.append(f"  c{k} = {_fmt_text(c)}")
        lines.append(f"  |c3| rel {check.c3_rel:.3g}, |c1| rel {check.c1_rel:.3g}")
        lines.append(f"  c2 - B2 rel {check.B2_rel:.3g}, c0 - B0 rel {check.B0_rel:.3g}")
        lines.append(f"  resolvent cubic formula vs elimination rel {check.resolvent_rel:.3g}")
    return "\n".join(lines)


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, DegenerateError):
        return EXIT_DEGENERATE
    if isinstance(exc, (SelectionFailed, NoConvergence, ProviderFailed)):
        return EXIT_SOLVE
    if isinstance(exc, (UsageError, ZeroPolynomial, ValueError)):
        return EXIT_USAGE
    raise exc


def _solve_one(coeffs: list[complex], req: CliRequest) -> str:
    p = Polynomial.from_descending(coeffs)
    report = solve_polynomial(p, req.method, SolverConfig(tol=req.tol))
    check = _verification(report, p) if req.method == "elimination" else None
    if req.format == "json":
        return json.dumps(report_to_json(report, p, req.trace, check))
    return report_to_text(report, p, req.trace, check)


def run(req: CliRequest, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    if req.batch_path is None:
        jobs = [(None, req.coefficients)]
    else:
        try:
            jobs = [(n, body) for n, body in read_batch(req.batch_path)]
        except OSError as exc:
            print(f"error: cannot read batch file: {exc}", file=err)
            return EXIT_USAGE
    code = EXIT_OK
    for lineno, item in jobs:
        prefix = f"line {lineno}: " if lineno is not None else ""
        try:
            coeffs = parse_coefficients(item) if isinstance(item, str) else item
            text = _solve_one(coeffs, req)
        except Exception as exc:  # mapped to exit codes; anything unexpected re-raises
            status = _exit_code(exc)
            print(f"{prefix}error: {exc}", file=err)
            code = max(code, status)
            continue
        if lineno is not None and req.format == "text":
            print(f"# line {lineno}", file=out)
        print(text, file=out)
        if lineno is not None and req.format == "text":
            print(file=out)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
