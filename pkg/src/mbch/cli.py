"""Command line front end.

Every subcommand computes with exact rationals and renders to JSON, CSV
or plain text.  Output is deterministic: running the same command twice
produces byte-identical results.  Exit codes: 0 on success (and on
all-checks-pass for ``verify``), 1 when a verification fails, 2 on usage
errors, 3 when an internal exact division leaves a remainder.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .series import BiSeries, InexactDivision, format_rational, parse_rational
from .assoc import bch_log_oracle
from .freelie import LieSeries, from_lyndon_coords, lyndon_coords_of_assoc
from .bch import bch_dynkin, bch_recursive
from .metabelian import (
    MetabelianElement,
    goldberg_c,
    h_series,
    hausdorff_closed,
    kv_solve,
    kv_verify,
    zassenhaus_closed,
)
from .tilde import TildeElement, hausdorff_tilde
from .verify import run_suite

__all__ = ["CliConfig", "main", "entry"]

CAP_ENV = "MBCH_DEGREE_CAP"

# Practical degree caps keep CLI latency in the seconds range; the
# library itself accepts any truncation.  The environment variable
# MBCH_DEGREE_CAP replaces the cap for whichever command runs.
DEGREE_CAPS = {
    ("bch", "recursive"): 14,
    ("bch", "dynkin"): 12,
    ("bch", "oracle"): 14,
    "metabelian": 64,
    "goldberg": 64,
    "zassenhaus": 64,
    "kv-solve": 64,
    "deeper": 20,
    "verify": 12,
}

MIN_DEGREES = {
    "bch": 1,
    "metabelian": 2,
    "goldberg": 2,
    "zassenhaus": 2,
    "kv-solve": 2,
    "deeper": 2,
    "verify": 4,
}


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation: one command plus its rendering options."""

    command: str
    degree: int
    method: str = "recursive"
    fmt: str = "text"
    output: str | None = None
    suite: str = "all"
    per_degree: bool = False
    a: Fraction = Fraction(0)
    g: BiSeries | None = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbch",
        description=(
            "Exact Baker-Campbell-Hausdorff computations in the free "
            "Lie algebra on X, Y and in its metabelian quotient."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--degree",
            type=int,
            default=8,
            help="truncation degree (default 8)",
        )
        p.add_argument(
            "--format",
            choices=("json", "csv", "text"),
            default="text",
            dest="fmt",
            help="output format (default text)",
        )
        p.add_argument(
            "--output",
            default=None,
            help="write to this file instead of stdout",
        )

    p = sub.add_parser(
        "bch", help="log(e^X e^Y) in the free Lie algebra, Lyndon basis"
    )
    p.add_argument(
        "--method",
        choices=("recursive", "dynkin", "oracle", "closed"),
        default="recursive",
        help="derivation recursion, permutation-tuple sum, or word-level log",
    )
    common(p)

    p = sub.add_parser(
        "metabelian",
        help="closed form of log(e^X e^Y) modulo [[L,L],[L,L]], with h(x,y)",
    )
    common(p)

    p = sub.add_parser(
        "goldberg", help="coefficients of the words X^r Y^s in log(e^X e^Y)"
    )
    common(p)

    p = sub.add_parser(
        "zassenhaus",
        help="metabelian part of the correction factors in e^(X+Y) = e^X e^Y ...",
    )
    p.add_argument(
        "--per-degree",
        action="store_true",
        dest="per_degree",
        help="list each homogeneous factor separately",
    )
    common(p)

    p = sub.add_parser(
        "kv-solve",
        help="solve [X,F] + [Y,F(-Y,-X)] = log(e^X e^Y) - X - Y in the quotient",
    )
    p.add_argument(
        "--a",
        default="0",
        help="free rational coefficient of X in the solution (default 0)",
    )
    p.add_argument(
        "--g",
        default="zero",
        help="antisymmetric homogeneous freedom: inline JSON series or 'zero'",
    )
    common(p)

    p = sub.add_parser(
        "deeper",
        help="Hausdorff series in the quotient by [[L,L],[[L,L],[L,L]]]",
    )
    common(p)

    p = sub.add_parser("verify", help="run cross-check suites and report pass/fail")
    p.add_argument(
        "--suite",
        choices=("all", "bch", "metabelian", "zassenhaus", "kv", "deeper"),
        default="all",
        help="which suite to run (default all)",
    )
    common(p)

    return parser


def _usage_error(message: str) -> int:
    print(f"mbch: error: {message}", file=sys.stderr)
    return 2


def _config_from_args(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=ns.command,
        degree=ns.degree,
        method=getattr(ns, "method", "recursive"),
        fmt=ns.fmt,
        output=ns.output,
        suite=getattr(ns, "suite", "all"),
        per_degree=getattr(ns, "per_degree", False),
        a=getattr(ns, "a", Fraction(0)),
        g=getattr(ns, "g", None),
    )


def _degree_cap(cfg: CliConfig) -> int:
    key = (cfg.command, cfg.method) if cfg.command == "bch" else cfg.command
    return DEGREE_CAPS[key]


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- per-command renderers ----------------------------------------------------


def _render_lie_series(s: LieSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(s.to_json_dict(), indent=2)
    if fmt == "csv":
        rows = [
            [len(t["word"]), t["word"], t["c"]] for t in s.to_json_dict()["terms"]
        ]
        return _csv_text(["degree", "word", "c"], rows)
    return str(s)


def _render_biseries(s: BiSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(s.to_json_dict(), indent=2)
    if fmt == "csv":
        rows = [[i, j, format_rational(c)] for i, j, c in s.terms()]
        return _csv_text(["i", "j", "c"], rows)
    return str(s)


def _render_metabelian(e: MetabelianElement, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(e.to_json_dict(), indent=2)
    if fmt == "csv":
        return e.to_csv()
    return str(e)


def _render_tilde(e: TildeElement, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(e.to_json_dict(), indent=2)
    if fmt == "csv":
        rows: list[list] = []
        if e.a:
            rows.append(["X", "", "", "", "", format_rational(e.a)])
        if e.b:
            rows.append(["Y", "", "", "", "", format_rational(e.b)])
        for (m, n), c in e.linear_terms():
            rows.append(["linear", "", "", m, n, format_rational(c)])
        for ((k, l), (m, n)), c in e.quadratic_terms():
            rows.append(["quadratic", k, l, m, n, format_rational(c)])
        return _csv_text(["kind", "k", "l", "m", "n", "c"], rows)
    return str(e)


def _cmd_bch(cfg: CliConfig) -> tuple[str, int]:
    n = cfg.degree
    if cfg.method == "recursive":
        series = bch_recursive(n)
    elif cfg.method == "dynkin":
        series = bch_dynkin(n)
    else:
        coords = lyndon_coords_of_assoc(bch_log_oracle(n))
        series = LieSeries.from_element(from_lyndon_coords(coords), n)
    return _render_lie_series(series, cfg.fmt), 0


def _cmd_metabelian(cfg: CliConfig) -> tuple[str, int]:
    element = hausdorff_closed(cfg.degree)
    h = h_series(cfg.degree - 2)
    if cfg.fmt == "json":
        payload = {"element": element.to_json_dict(), "h": h.to_json_dict()}
        return json.dumps(payload, indent=2), 0
    if cfg.fmt == "csv":
        return element.to_csv(), 0
    return f"{element}\nh(x,y) = {h}", 0


def _cmd_goldberg(cfg: CliConfig) -> tuple[str, int]:
    return _render_biseries(goldberg_c(cfg.degree), cfg.fmt), 0


def _cmd_zassenhaus(cfg: CliConfig) -> tuple[str, int]:
    element = zassenhaus_closed(cfg.degree)
    if not cfg.per_degree:
        return _render_metabelian(element, cfg.fmt), 0
    factors = [(d, element.degree_part(d)) for d in range(2, cfg.degree + 1)]
    if cfg.fmt == "json":
        payload = {
            "truncation": cfg.degree,
            "factors": [
                {
                    "degree": d,
                    "terms": [
                        {"k": k, "l": l, "c": format_rational(c)}
                        for (k, l), c in part.terms()
                    ],
                }
                for d, part in factors
            ],
        }
        return json.dumps(payload, indent=2), 0
    if cfg.fmt == "csv":
        rows = [
            [d, k, l, format_rational(c)]
            for d, part in factors
            for (k, l), c in part.terms()
        ]
        return _csv_text(["degree", "k", "l", "c"], rows), 0
    lines = [f"C_{d} = {part}" for d, part in factors]
    return "\n".join(lines), 0


def _cmd_kv_solve(cfg: CliConfig) -> tuple[str, int]:
    solution = kv_solve(cfg.degree, cfg.a, cfg.g)
    verified = kv_verify(solution, cfg.degree)
    rc = 0 if verified else 1
    if cfg.fmt == "json":
        payload = {"element": solution.to_json_dict(), "verified": verified}
        return json.dumps(payload, indent=2), rc
    if cfg.fmt == "csv":
        return solution.to_csv(), rc
    status = "yes" if verified else "NO"
    return f"{solution}\nverified: {status}", rc


def _cmd_deeper(cfg: CliConfig) -> tuple[str, int]:
    return _render_tilde(hausdorff_tilde(cfg.degree), cfg.fmt), 0


def _cmd_verify(cfg: CliConfig) -> tuple[str, int]:
    checks = run_suite(cfg.suite, cfg.degree)
    passed = all(p for _, p, _ in checks)
    rc = 0 if passed else 1
    if cfg.fmt == "json":
        payload = {
            "suite": cfg.suite,
            "degree": cfg.degree,
            "passed": passed,
            "checks": [
                {"name": n, "passed": p, "detail": d} for n, p, d in checks
            ],
        }
        return json.dumps(payload, indent=2), rc
    if cfg.fmt == "csv":
        rows = [[n, "pass" if p else "fail", d] for n, p, d in checks]
        return _csv_text(["name", "result", "detail"], rows), rc
    lines = []
    for name, ok, detail in checks:
        suffix = f": {detail}" if (detail and not ok) else ""
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}{suffix}")
    n_pass = sum(1 for _, p, _ in checks if p)
    lines.append(f"{n_pass} of {len(checks)} checks passed")
    return "\n".join(lines), rc


_COMMANDS = {
    "bch": _cmd_bch,
    "metabelian": _cmd_metabelian,
    "goldberg": _cmd_goldberg,
    "zassenhaus": _cmd_zassenhaus,
    "kv-solve": _cmd_kv_solve,
    "deeper": _cmd_deeper,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if ns.command == "bch" and ns.method == "closed":
        return _usage_error(
            "the closed formula lives in the metabelian quotient; "
            "use the 'metabelian' command"
        )
    if ns.command == "kv-solve":
        try:
            ns.a = parse_rational(ns.a)
        except (ValueError, ZeroDivisionError):
            return _usage_error(f"invalid rational for --a: {ns.a!r}")
        if ns.g == "zero":
            ns.g = None
        else:
            try:
                ns.g = BiSeries.from_json_dict(json.loads(ns.g))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                return _usage_error("malformed --g: expected 'zero' or series JSON")

    cfg = _config_from_args(ns)

    cap = _degree_cap(cfg)
    env_cap = os.environ.get(CAP_ENV)
    if env_cap is not None:
        try:
            cap = int(env_cap)
        except ValueError:
            return _usage_error(f"invalid {CAP_ENV}: {env_cap!r}")
    low = MIN_DEGREES[cfg.command]
    if cfg.degree < low:
        return _usage_error(f"degree must be at least {low} for {cfg.command}")
    if cfg.degree > cap:
        return _usage_error(
            f"degree {cfg.degree} exceeds the cap {cap} for this command "
            f"(override with {CAP_ENV})"
        )

    try:
        text, rc = _COMMANDS[cfg.command](cfg)
    except InexactDivision as exc:
        print(f"mbch: internal divisibility violation: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        # Only kv-solve takes free-form mathematical input whose
        # validation happens inside the library call.
        if cfg.command == "kv-solve":
            return _usage_error(str(exc))
        raise

    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return rc


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
