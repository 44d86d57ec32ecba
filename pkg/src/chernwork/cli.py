"""
Command-line interface.

Every command prints exactly one record to stdout: JSON by default, or an
aligned table with ``--format table``.  Rationals are always written as
``"numerator/denominator"`` strings, so records round-trip exactly through
:func:`load_record`.

Exit status: 0 on success, 1 on a domain error (the record then carries an
``error`` payload), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from fractions import Fraction

from .combinatorics import Partition
from .errors import ChernworkError
from .genus import ChernVector, GenusSpec, evaluate_genus, genus_h_lambda, signature_spec, todd_spec
from .hattori_stong import GammaMonomial, b_coeff, b_coeff_general, b_polynomial, check_realizable
from .series import PowerSeries, TPolynomial, polynomial_series

_RATIONAL = re.compile(r"^-?\d+/\d+$")
_CHERN_ENTRY = re.compile(r"\s*\(\s*([\d,\s]*)\)\s*=\s*(-?\d+)\s*")


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    if not _RATIONAL.match(s.strip()):
        raise ValueError(f"not a rational literal: {s!r}")
    return Fraction(s.strip())


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Partition):
        return str(obj)
    if isinstance(obj, GammaMonomial):
        return str(obj)
    if isinstance(obj, TPolynomial):
        return {str(e): format_rational(c) for e, c in obj.items()}
    if isinstance(obj, ChernVector):
        return {"complex_dimension": obj.complex_dimension, "entries": {str(k): v for k, v in obj.entries.items()}}
    if isinstance(obj, float):
        # only ever the infinite 2-adic valuation of zero
        return "inf" if obj > 0 else "-inf"
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_record(record: dict) -> str:
    return json.dumps(to_jsonable(record), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_record(text: str) -> dict:
    """Parse a JSON record, turning every rational literal back into a Fraction."""

    def conv(x):
        if isinstance(x, str) and _RATIONAL.match(x):
            return Fraction(x)
        if isinstance(x, list):
            return [conv(y) for y in x]
        if isinstance(x, dict):
            return {k: conv(v) for k, v in x.items()}
        return x

    return conv(json.loads(text))


def _table(record: dict) -> str:
    rows = []

    def walk(prefix, x):
        if isinstance(x, dict) and x:
            for k, v in x.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(x, list) and x and any(isinstance(y, (dict, list)) for y in x):
            for j, v in enumerate(x):
                walk(f"{prefix}[{j}]", v)
        else:
            rows.append((prefix, json.dumps(x, ensure_ascii=False) if not isinstance(x, str) else x))

    walk("", to_jsonable(record))
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


# --- argument types ---------------------------------------------------------


def partition_arg(text: str) -> Partition:
    text = text.strip().strip("()")
    if not text:
        return Partition(())
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}")
    if any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def chern_arg(text: str) -> dict:
    entries = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _CHERN_ENTRY.match(text, pos)
        if not m:
            raise argparse.ArgumentTypeError(f"malformed Chern vector near {text[pos:]!r}")
        lam = partition_arg(m.group(1)) if m.group(1).strip() else Partition(())
        entries[lam] = entries.get(lam, 0) + int(m.group(2))
        pos = m.end()
        if pos < len(text):
            if text[pos] != ",":
                raise argparse.ArgumentTypeError(f"expected ',' at {text[pos:]!r}")
            pos += 1
    return entries


def rationals_arg(text: str) -> list[Fraction]:
    try:
        return [Fraction(a.strip()) for a in text.split(",") if a.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed coefficient list {text!r}")


def _q_series(coeffs: list[Fraction], order: int) -> PowerSeries:
    """1 + a_1 x + a_2 x^2 + ... as a series known to ``order``."""
    return polynomial_series([1, *coeffs] + [0] * max(0, order - len(coeffs)), max(order, len(coeffs)))


def _genus(args) -> GenusSpec:
    if args.genus in (None, "signature"):
        return signature_spec()
    if args.genus == "todd":
        return todd_spec()
    if args.q_coeffs is None:
        raise ChernworkError("--genus custom needs --q-coeffs")
    coeffs = args.q_coeffs
    return GenusSpec("custom", lambda order: _q_series(coeffs, order).truncate(order))


# --- commands ---------------------------------------------------------------

DEFAULT_BOUND = 100


def _bound(args) -> int:
    return DEFAULT_BOUND if args.bound is None else args.bound


def cmd_coeff_b(args):
    lam = args.partition
    if args.k is None:
        poly = b_polynomial(lam)
        return {"partition": lam, "coefficients": {str(k): c for k, c in poly.items() if k >= 1}}
    return {"partition": lam, "k": args.k, "value": b_coeff(lam, args.k)}


def cmd_coeff_b_general(args):
    if args.q_coeffs is None:
        raise ChernworkError("coeff-b-general needs --q-coeffs")
    if args.k is None:
        raise ChernworkError("coeff-b-general needs --k")
    Q = _q_series(args.q_coeffs, args.partition.weight())
    return {"partition": args.partition, "k": args.k, "value": b_coeff_general(Q, args.partition, args.k)}


def cmd_coeff_h(args):
    g = _genus(args)
    return {"genus": g.name, "partition": args.partition, "value": genus_h_lambda(g, args.partition)}


def _chern_vector(args) -> ChernVector:
    if args.dim is None:
        raise ChernworkError("--dim is required")
    return ChernVector(args.dim, args.chern or {})


def cmd_genus_eval(args):
    g = _genus(args)
    v = _chern_vector(args)
    return {"genus": g.name, "vector": v, "value": evaluate_genus(g, v)}


def cmd_check(args):
    v = _chern_vector(args)
    rep = check_realizable(v)
    return {
        "vector": v,
        "verdict": "pass" if rep.realizable else "fail",
        "conditions_checked": rep.checked,
        "violations": [{"gamma": K, "value": val} for K, val in rep.violations],
    }


def cmd_parity(args):
    from .applications import parity_certificate

    cert = parity_certificate(_chern_vector(args))
    return {
        "vector": cert.vector,
        "verdict": cert.verdict,
        "signature": cert.signature,
        "signature_parity": cert.signature_parity,
        "per_term": [{"partition": lam, "h": h, "nu2": nu} for lam, h, nu in cert.per_term],
    }


def cmd_search_thm3(args):
    from .applications import theorem3_search

    if args.k is None or args.i is None:
        raise ChernworkError("search-thm3 needs --k and --i")
    return theorem3_search(args.k, args.i, _bound(args), jobs=args.jobs)


def cmd_rpp_report(args):
    from .applications import rpp_obstruction_report

    if args.dim is None:
        raise ChernworkError("rpp-report needs --dim (real dimension)")
    return rpp_obstruction_report(args.dim, bound=_bound(args), jobs=args.jobs)


def cmd_fixture(args):
    from .applications import FixtureSpec, check_realizable, projective_fixture

    factors = args.factors if args.factors is not None else args.partition
    if not factors:
        raise ChernworkError("fixture needs --partition (or --factors), e.g. 2,1 for CP2 x CP1")
    spec = FixtureSpec(tuple(factors))
    v = projective_fixture(spec)
    return {
        "fixture": str(spec),
        "vector": v,
        "signature": evaluate_genus(signature_spec(), v),
        "todd": evaluate_genus(todd_spec(), v),
        "realizable": bool(check_realizable(v)),
    }


def cmd_selftest(args):
    from .acceptance import run_all

    lines: list[str] = []

    def report(line):
        lines.append(line)
        print(line, file=sys.stderr)

    ok = run_all(report)
    return {"passed": ok, "criteria": lines}


COMMANDS = {
    "coeff-b": cmd_coeff_b,
    "coeff-b-general": cmd_coeff_b_general,
    "coeff-h": cmd_coeff_h,
    "genus-eval": cmd_genus_eval,
    "check": cmd_check,
    "parity": cmd_parity,
    "search-thm3": cmd_search_thm3,
    "rpp-report": cmd_rpp_report,
    "fixture": cmd_fixture,
    "selftest": cmd_selftest,
}

# flags that change how work is done, not what is computed; kept out of the echoed inputs
_NOT_ECHOED = {"jobs", "format", "command"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chernwork", description="Exact Hattori-Stong and genus computations.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--partition", type=partition_arg, default=None)
    p.add_argument("--factors", type=partition_arg, default=None, help="fixture factors, e.g. 2,1")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--chern", type=chern_arg, default=None, help='e.g. "(1,1)=9,(2)=3"')
    p.add_argument("--genus", choices=["signature", "todd", "custom"], default=None, help="default: signature")
    p.add_argument("--q-coeffs", type=rationals_arg, default=None, help="a1,a2,... of Q = 1 + a1 x + ...")
    p.add_argument("--bound", type=int, default=None, help=f"default: {DEFAULT_BOUND}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "table"], default="json")
    return p


def run(argv) -> tuple[int, str]:
    """Execute one command; returns (exit status, serialized record)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    needs_partition = {"coeff-b", "coeff-b-general", "coeff-h"}
    if args.command in needs_partition and args.partition is None:
        parser.print_usage(sys.stderr)
        print(f"chernwork: error: {args.command} needs --partition", file=sys.stderr)
        return 2, ""
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_ECHOED and v is not None}
    record = {"command": args.command, "inputs": inputs}
    status = 0
    try:
        record["result"] = COMMANDS[args.command](args)
        if args.command == "selftest" and not record["result"]["passed"]:
            status = 1
    except (ChernworkError, ValueError, ArithmeticError) as exc:
        record["error"] = {"type": type(exc).__name__, "message": str(exc)}
        print(f"chernwork: {type(exc).__name__}: {exc}", file=sys.stderr)
        status = 1
    text = dump_record(record) if args.format == "json" else _table(record)
    return status, text


def main(argv=None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
