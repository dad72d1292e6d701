"""Command-line front end.

Every command prints exact rationals (``a/b``) and, where useful, 15-digit
decimals next to them.  Exit codes: 0 success, 2 usage error, 3 domain
error, 4 an identity failed to hold.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import dice, hypergeom, identity, kfilter, points, polyseries
from .errors import DomainError, PropertyFailure, ResourceError
from .exact import format_decimal, format_rational, parse_rational

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_PROPERTY = 4


@dataclass
class Outcome:
    """What a command produced, before rendering."""

    command: str
    inputs: dict[str, str]
    results: dict[str, Any]
    verified: bool = True
    diagnostics: list[str] = field(default_factory=list)
    rows: Optional[list[dict[str, str]]] = None

    def envelope(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "verified": self.verified,
            "diagnostics": self.diagnostics,
        }

    def require(self, condition: bool, message: str) -> None:
        if not condition:
            self.verified = False
            self.diagnostics.append(message)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational_arg(v) for v in text.split(",")]


R = format_rational


def _exact_row(index: int, value: Fraction) -> dict[str, str]:
    return {"index": str(index), "exact": R(value), "decimal": format_decimal(value)}


# -- cb ---------------------------------------------------------------------


def cmd_cb_verify(args) -> Outcome:
    split = identity.cb_split(args.n, args.m, args.x)
    out = Outcome(
        "cb verify",
        {"n": str(args.n), "m": str(args.m), "x": R(args.x)},
        {"first": R(split.first), "second": R(split.second), "sum": R(split.total)},
    )
    out.require(split.total == 1, f"first + second = {R(split.total)}, not 1")
    return out


def cmd_cb_sweep(args) -> Outcome:
    rows = []
    failures = []
    for n in range(args.max + 1):
        for m in range(args.max + 1):
            ok = identity.cb_polynomial_identity(n, m)
            rows.append({"n": str(n), "m": str(m), "identity": str(ok).lower()})
            if not ok:
                failures.append(f"identity fails symbolically at n={n}, m={m}")
    out = Outcome(
        "cb sweep",
        {"max": str(args.max)},
        {"cases": len(rows), "all_hold": not failures},
        rows=rows,
    )
    for msg in failures:
        out.require(False, msg)
    return out


def cmd_cb_hering(args) -> Outcome:
    lhs, rhs = identity.hering_sides(args.m, args.n, args.x)
    translation = identity.hering_to_cb(args.m, args.n)
    out = Outcome(
        "cb hering",
        {"m": str(args.m), "n": str(args.n), "x": R(args.x)},
        {
            "lhs": R(lhs),
            "rhs": R(rhs),
            "cb_n": translation.cb_n,
            "cb_m": translation.cb_m,
        },
    )
    out.require(lhs == rhs, "Hering's two sides differ")
    out.require(translation.verified, "index translation to the Chaundy-Bullard form fails")
    return out


# -- series -----------------------------------------------------------------


def cmd_series_demoivre(args) -> Outcome:
    canon = identity.demoivre_canon(args.p, args.n)
    spec = polyseries.RecurrenceSpec.figurate(args.p)
    q, r = polyseries.finite_recurring_sum_split(spec, max(args.n, args.p))
    out = Outcome(
        "series demoivre",
        {"p": str(args.p), "n": str(args.n)},
        {
            "series": polyseries.render(canon.series),
            "numerator": polyseries.render(canon.numerator),
            "denominator": polyseries.render(canon.denominator),
            "canon_coefficients": [str(c) for c in canon.coefficients],
            "r": polyseries.render(r),
            "r_in_powers_of_1_minus_x": [R(c) for c in r.rebase().coeffs],
        },
    )
    out.require(canon.check, "canon disagrees with the direct figurate sum")
    if args.n >= args.p:
        expected = [-c for c in canon.coefficients]
        out.require(
            list(r.rebase().coeffs) == expected and q == polyseries.Polynomial.constant(1),
            "recurring-series re-derivation of r(x) does not reproduce the canon",
        )
    return out


# -- hyp --------------------------------------------------------------------


def cmd_hyp_pfaff(args) -> Outcome:
    a, b, c, z = args.a, args.b, args.c, args.z
    if not (a.denominator == 1 and a <= 0):
        raise DomainError("--a must be a non-positive integer")
    if z == 1:
        raise DomainError("z = 1 makes z/(z-1) undefined")
    terms = int(-a) + 1
    lhs = hypergeom.hyp2f1(a, b, c, z, terms=terms)
    rhs = (1 - z) ** int(-a) * hypergeom.hyp2f1(a, c - b, c, z / (z - 1), terms=terms)
    out = Outcome(
        "hyp pfaff",
        {"a": R(a), "b": R(b), "c": R(c), "z": R(z)},
        {"lhs": R(lhs), "rhs": R(rhs)},
    )
    out.require(lhs == rhs, "Pfaff transformation fails")
    return out


def cmd_hyp_hering(args) -> Outcome:
    chain = hypergeom.hering_chain(args.m, args.n, args.x)
    out = Outcome(
        "hyp hering",
        {"m": R(args.m), "n": str(args.n), "x": R(args.x)},
        {
            "truncated_sum": R(chain.truncated_sum),
            "reversed_form": R(chain.reversed_form),
            "pfaff_form": R(chain.pfaff_form),
        },
    )
    out.require(chain.consistent, "members of Hering's chain differ")
    return out


# -- points -----------------------------------------------------------------


def cmd_points_share(args) -> Outcome:
    if len(args.needs) != 2:
        raise DomainError("--needs takes exactly two values n,m")
    pos = points.GamePosition(args.needs[0], args.needs[1], args.p)
    bern = points.chance_bernoulli(pos)
    mont = points.chance_montmort(pos)
    shares = points.fair_division(pos, args.stake)
    players = [
        {"player": name, "chance": R(ch), "decimal": format_decimal(ch), "share": R(sh)}
        for name, ch, sh in zip(("pierre", "paul"), (mont.pierre, mont.paul), shares)
    ]
    out = Outcome(
        "points share",
        {"needs": ",".join(map(str, args.needs)), "p": R(args.p), "stake": R(args.stake)},
        {"players": players, "sum": R(mont.total)},
        rows=players,
    )
    out.require(bern == mont, "Bernoulli and de Montmort chances differ")
    out.require(bern.total == 1 and mont.total == 1, "chances do not sum to 1")
    return out


def cmd_points_multi(args) -> Outcome:
    pos = points.MultiPosition(tuple(args.needs), tuple(args.probs))
    chances = points.multi_player_chances(pos)
    stake = args.stake
    players = [
        {"player": str(i), "chance": R(c), "decimal": format_decimal(c), "share": R(c * stake)}
        for i, c in enumerate(chances)
    ]
    total = sum(chances, Fraction(0))
    out = Outcome(
        "points multi",
        {
            "needs": ",".join(map(str, args.needs)),
            "probs": ",".join(R(p) for p in args.probs),
            "stake": R(stake),
        },
        {"players": players, "sum": R(total)},
        rows=players,
    )
    out.require(total == 1, f"chances sum to {R(total)}")
    return out


# -- dice -------------------------------------------------------------------


def cmd_dice_pepys(args) -> Outcome:
    if args.k_max < 1:
        raise DomainError("--k-max must be >= 1")
    values = [dice.pepys_probability(k) for k in range(1, args.k_max + 1)]
    rows = [_exact_row(k, v) for k, v in enumerate(values, 1)]
    decreasing = all(a > b for a, b in zip(values, values[1:]))
    out = Outcome(
        "dice pepys",
        {"k_max": str(args.k_max)},
        {"probabilities": rows, "strictly_decreasing": decreasing},
        rows=rows,
    )
    out.require(decreasing, "Pepys probabilities are not strictly decreasing")
    return out


def cmd_dice_g(args) -> Outcome:
    values = dice.g_table(args.faces, args.n_max)
    rows = [_exact_row(n, v) for n, v in enumerate(values, 1)]
    increasing = dice.g_monotone_check(args.faces, args.n_max)
    out = Outcome(
        "dice g",
        {"faces": str(args.faces), "n_max": str(args.n_max)},
        {"g": rows, "strictly_increasing": increasing},
        rows=rows,
    )
    out.require(increasing, f"g(sn, n) is not strictly increasing for s={args.faces}")
    return out


# -- filter -----------------------------------------------------------------


def cmd_filter_design(args) -> Outcome:
    spec = kfilter.FilterSpec(args.N, args.n)
    coeffs = kfilter.kernel_coefficients(spec)
    rows = [
        {"x": str(x), "coefficient": R(c), "decimal": format_decimal(c)}
        for x, c in zip(range(-spec.N, spec.N + 1), coeffs)
    ]
    total = sum(coeffs, Fraction(0))
    out = Outcome(
        "filter design",
        {"N": str(args.N), "n": str(args.n)},
        {"coefficients": [R(c) for c in coeffs], "sum": R(total)},
        rows=rows,
    )
    out.require(total == 1, "filter coefficients do not sum to 1")
    out.require(coeffs == coeffs[::-1], "filter coefficients are not symmetric")
    return out


def _read_signal(path: str) -> list[Fraction]:
    stream = sys.stdin if path == "-" else open(path, newline="")
    try:
        values = []
        for row in csv.reader(stream):
            if not row or not row[0].strip():
                continue
            try:
                values.append(parse_rational(row[0]))
            except DomainError:
                if not values:  # header
                    continue
                raise
        return values
    finally:
        if stream is not sys.stdin:
            stream.close()


def cmd_filter_apply(args) -> Outcome:
    spec = kfilter.FilterSpec(args.N, args.n)
    try:
        signal = _read_signal(args.input)
    except OSError as exc:
        raise DomainError(f"cannot read {args.input}: {exc}") from None
    smoothed = kfilter.apply_filter(spec, signal)
    rows = [{"value": R(v)} for v in smoothed]
    return Outcome(
        "filter apply",
        {"N": str(args.N), "n": str(args.n), "input": args.input},
        {"output": [R(v) for v in smoothed]},
        rows=rows,
    )


def cmd_filter_response(args) -> Outcome:
    spec = kfilter.FilterSpec(args.N, args.n)
    if args.samples < 2:
        raise DomainError("--samples must be >= 2")
    if args.unweighted:
        s_poly = kfilter.transfer_function_unweighted(spec)
    else:
        s_poly = kfilter.transfer_function(spec).s_poly
    rows = []
    for j in range(args.samples + 1):
        omega = math.pi * j / args.samples
        s = math.sin(omega / 2) ** 2
        phi = sum(float(c) * s**i for i, c in enumerate(s_poly.coeffs))
        rows.append({"omega": f"{omega:.15g}", "phi": f"{phi:.15g}"})
    results: dict[str, Any] = {
        "s_poly": [R(c) for c in s_poly.coeffs],
        "weighted": not args.unweighted,
    }
    out = Outcome(
        "filter response",
        {"N": str(args.N), "n": str(args.n), "samples": str(args.samples)},
        results,
        rows=rows,
    )
    if not args.unweighted:
        report = kfilter.flatness_report(spec, args.samples)
        tf = kfilter.transfer_function(spec)
        results.update(
            P=[R(c) for c in tf.P.coeffs],
            Q=[R(c) for c in tf.Q.coeffs],
            order_at_zero=report.order_at_zero,
            order_at_one=report.order_at_one,
        )
        out.require(report.strictly_decreasing, "response is not strictly decreasing in s")
        out.require(report.endpoints_ok, "response does not run from 1 to 0")
        out.require(report.maximally_flat, "response is not maximally flat")
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            json.dump(out.envelope(), fh, indent=2)
            fh.write("\n")
    return out


# -- parser and rendering ---------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaundy",
        description="Exact checks of the Chaundy-Bullard identity and its relatives.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    def sub(group, name, func, help_text):
        p = group.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
        return p

    cb = groups.add_parser("cb", help="the identity itself").add_subparsers(
        dest="cmd", required=True, metavar="CMD"
    )
    p = sub(cb, "verify", cmd_cb_verify, "evaluate both halves at a rational x")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=_rational_arg, required=True)
    p = sub(cb, "sweep", cmd_cb_sweep, "symbolic check for all 0 <= n, m <= MAX")
    p.add_argument("--max", type=int, default=12)
    p = sub(cb, "hering", cmd_cb_hering, "Hering's truncated-series form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_rational_arg, required=True)

    series = groups.add_parser("series", help="figurate sums").add_subparsers(
        dest="cmd", required=True, metavar="CMD"
    )
    p = sub(
        series,
        "demoivre",
        cmd_series_demoivre,
        "de Moivre's canon for the sum of n figurate numbers of order p. "
        f"The printed original reads {identity.MISPRINTED_CANON}; the corrected form is used.",
    )
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    hyp = groups.add_parser("hyp", help="hypergeometric checks").add_subparsers(
        dest="cmd", required=True, metavar="CMD"
    )
    p = sub(hyp, "pfaff", cmd_hyp_pfaff, "Pfaff transformation of a terminating 2F1")
    for name in ("a", "b", "c", "z"):
        p.add_argument(f"--{name}", type=_rational_arg, required=True)
    p = sub(hyp, "hering", cmd_hyp_hering, "Hering's chain at non-integer m")
    p.add_argument("--m", type=_rational_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_rational_arg, required=True)

    pts = groups.add_parser("points", help="problem of points").add_subparsers(
        dest="cmd", required=True, metavar="CMD"
    )
    p = sub(pts, "share", cmd_points_share, "two-player chances and fair shares")
    p.add_argument("--needs", type=_int_list, required=True)
    p.add_argument("--p", type=_rational_arg, required=True)
    p.add_argument("--stake", type=_rational_arg, default=Fraction(1))
    p = sub(pts, "multi", cmd_points_multi, "chances with any number of players")
    p.add_argument("--needs", type=_int_list, required=True)
    p.add_argument("--probs", type=_rational_list, required=True)
    p.add_argument("--stake", type=_rational_arg, default=Fraction(1))

    dc = groups.add_parser("dice", help="Pepys' question").add_subparsers(
        dest="cmd", required=True, metavar="CMD"
    )
    p = sub(dc, "pepys", cmd_dice_pepys, "P(at least k sixes in 6k dice)")
    p.add_argument("--k-max", type=int, default=3)
    p = sub(dc, "g", cmd_dice_g, "g(sn, n) table and monotonicity verdict")
    p.add_argument("--faces", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    flt = groups.add_parser("filter", help="Krawtchouk smoothing filter").add_subparsers(
        dest="cmd", required=True, metavar="CMD"
    )
    p = sub(flt, "design", cmd_filter_design, "exact filter coefficients")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = sub(flt, "apply", cmd_filter_apply, "smooth a single-column CSV signal ('-' for stdin)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True)
    p = sub(flt, "response", cmd_filter_response, "frequency response samples")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--sidecar", help="write exact s-polynomial coefficients as JSON here")
    p.add_argument(
        "--unweighted",
        action="store_true",
        help="use the kernel without the binomial weight (comparison only)",
    )
    return parser


def _render_text(out: Outcome) -> str:
    lines = [out.command]
    for key, value in out.results.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            continue
        lines.append(f"  {key}: {value}")
    if out.rows:
        header = list(out.rows[0])
        lines.append("  " + "  ".join(header))
        for row in out.rows:
            lines.append("  " + "  ".join(row[h] for h in header))
    lines.append(f"verified: {str(out.verified).lower()}")
    for msg in out.diagnostics:
        lines.append(f"  ! {msg}")
    return "\n".join(lines) + "\n"


def _render_csv(out: Outcome) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if out.rows is not None:
        header = list(out.rows[0]) if out.rows else []
        writer.writerow(header)
        for row in out.rows:
            writer.writerow([row[h] for h in header])
    else:
        writer.writerow(["key", "value"])
        for key, value in out.results.items():
            writer.writerow([key, value])
    return buf.getvalue()


def render(out: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.envelope(), indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(out)
    return _render_text(out)


_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--opt -1/5`` as ``--opt=-1/5``; argparse takes -1/5 for a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token.startswith("--")
            and "=" not in token
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        out = args.func(args)
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PropertyFailure as exc:
        print(f"property failure: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    sys.stdout.write(render(out, args.format))
    if not out.verified:
        for msg in out.diagnostics:
            print(f"property failure: {msg}", file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
