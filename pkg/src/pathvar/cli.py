"""Command line front end.

    pathvar length PATH --eps 1e-6
    pathvar variation PATH --theta pi/2 --eps 1e-6
    pathvar profile PATH --count 16 --format csv
    pathvar decide PATH --theta 0 --a 0.9 --b 1.1
    pathvar demo --n 8 --k 3
    pathvar gen sawtooth --n 4

PATH is a JSON file (or "-" for stdin) in the wire format of pathvar.core.
Exit status: 0 on success, 2 on malformed input or invalid arguments, 3 when
only a non-shrinking bracket can be certified (sampled graphs, or a resource
cap); in the latter case the bracket is still printed to stdout.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional

from .core.certificates import Certificate, CertKind, Provenance, decimal_down, decimal_up
from .core.paths import (
    PathSpec,
    PolynomialPath,
    ResourceError,
    SampledGraph,
    SawtoothGraph,
    SawtoothMixture,
    path_from_json,
    path_to_json,
)
from .counterexamples import adversarial_demo, tilt
from .numerics.dyadic import ceil_to
from .numerics.interval import DomainError, Interval
from .numerics.trig import pi_enclosure
from .oracles import (
    OracleUnavailable,
    PolynomialVariationOracle,
    _floor_log2,
    sampled_bracket,
    sampled_length_bracket,
    variation_oracle_for,
)
from .rectify import (
    Verdict,
    certified_length,
    certified_variation,
    variation_order_decide,
)
from .variation import Direction, scale_interval

_EPS_FLOOR = Fraction(1, 1 << 96)
_THETA_RE = re.compile(r"^(?P<coef>[^p]*)pi(?:/(?P<den>\d+))?$")


class InputError(Exception):
    """Invalid arguments or malformed input; maps to exit status 2."""


def _parse_rational(text: str, what: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return Fraction(Decimal(text))
    except (InvalidOperation, ValueError):
        raise InputError(f"cannot parse {what} {text!r} as a rational or decimal")


def _parse_eps(text: str) -> Fraction:
    eps = _parse_rational(text, "tolerance")
    if eps <= 0:
        raise InputError("tolerance must be positive")
    if eps < _EPS_FLOOR:
        raise InputError("tolerance below 2**-96 is not supported")
    return eps


def _parse_direction(theta: Optional[str], vector: Optional[str]) -> Direction:
    if (theta is None) == (vector is None):
        raise InputError("give exactly one of --theta or --direction")
    if vector is not None:
        parts = vector.split(",")
        if len(parts) != 2:
            raise InputError("--direction expects 'wx,wy'")
        wx = _parse_rational(parts[0], "direction component")
        wy = _parse_rational(parts[1], "direction component")
        try:
            return Direction.from_vector(wx, wy)
        except DomainError as exc:
            raise InputError(str(exc))
    text = theta.strip().replace(" ", "")
    m = _THETA_RE.match(text)
    if m:
        coef = m.group("coef")
        if coef in ("", "+"):
            q = Fraction(1)
        elif coef == "-":
            q = Fraction(-1)
        else:
            q = _parse_rational(coef.rstrip("*"), "angle coefficient")
        if m.group("den"):
            q /= int(m.group("den"))
        return Direction.from_theta_pi(q)
    return Direction.from_radians(_parse_rational(text, "angle"))


def _load_path(where: str) -> PathSpec:
    try:
        if where == "-":
            text = sys.stdin.read()
        else:
            with open(where, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {where}: {exc}")
    try:
        return path_from_json(text)
    except (json.JSONDecodeError, ValueError, TypeError, KeyError) as exc:
        raise InputError(f"malformed path description: {exc}")


def _kind_name(path: PathSpec) -> str:
    return {
        "Polyline": "polyline",
        "PolynomialPath": "polynomial",
        "SampledGraph": "sampled-graph",
        "SawtoothGraph": "sawtooth",
        "SawtoothMixture": "mixture",
    }[type(path).__name__]


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _bracket_exit(quantity: str, path: PathSpec, cert: Certificate, digits: int, message: str) -> int:
    _emit({"quantity": quantity, "input_kind": _kind_name(path), **cert.to_json_dict(digits)})
    print(f"certification unavailable: {message}", file=sys.stderr)
    return 3


# -- subcommands -------------------------------------------------------------------


def _cmd_length(args) -> int:
    path = _load_path(args.path)
    eps = _parse_eps(args.eps)
    if isinstance(path, SampledGraph):
        cert = sampled_length_bracket(path)
        return _bracket_exit(
            "length", path, cert, args.digits,
            "sampled graphs only support a non-shrinking length bracket",
        )
    cert = certified_length(path, eps, workers=args.workers)
    _emit({"quantity": "length", "input_kind": _kind_name(path), **cert.to_json_dict(args.digits)})
    return 0


def _cmd_variation(args) -> int:
    path = _load_path(args.path)
    eps = _parse_eps(args.eps)
    d = _parse_direction(args.theta, args.direction)
    if isinstance(path, SampledGraph):
        cert = sampled_bracket(path, d)
        return _bracket_exit(
            "variation", path, cert, args.digits,
            "sampled graphs only support a non-shrinking variation bracket",
        )
    if isinstance(path, PolynomialPath):
        # critical-point partitions certify directly; routing through a
        # length oracle would demand quadratically finer tolerances
        oracle = PolynomialVariationOracle(path)
        part, v = oracle.achieve_variation(d, eps * Fraction(1, 2))
        pad = ceil_to(eps * Fraction(1, 2), _floor_log2(eps) - 8)
        value = Interval(v.lo, v.hi + pad)
        cert = Certificate(
            value,
            CertKind.TWO_SIDED_CONVERGED,
            eps,
            Provenance("critical-point-partition", len(part)),
        )
    else:
        cert = certified_variation(path, d, eps)
    _emit({
        "quantity": "variation",
        "input_kind": _kind_name(path),
        "direction": d.describe(),
        **cert.to_json_dict(args.digits),
    })
    return 0


def _profile_rows(path: PathSpec, count: int, eps: Fraction):
    pi = pi_enclosure(-80)
    rows = []
    sampled = isinstance(path, SampledGraph)
    oracle = None if sampled else variation_oracle_for(path)
    pad = None if sampled else ceil_to(eps, _floor_log2(eps) - 8)
    for j in range(count + 1):
        q = Fraction(j, count)
        theta = scale_interval(pi, q, -64)
        d = Direction.from_theta_pi(q)
        if sampled:
            value = sampled_bracket(path, d).value
        else:
            _, v = oracle.achieve_variation(d, eps)
            value = Interval(v.lo, v.hi + pad)
        rows.append((theta, value))
    return rows


def _cmd_profile(args) -> int:
    path = _load_path(args.path)
    eps = _parse_eps(args.eps)
    if args.count < 1:
        raise InputError("--count must be at least 1")
    rows = _profile_rows(path, args.count, eps)
    digits = args.digits
    if args.format == "csv":
        out = ["theta_lo,theta_hi,v_lo,v_hi"]
        for theta, v in rows:
            out.append(
                ",".join(
                    (
                        decimal_down(theta.lo.as_fraction(), digits),
                        decimal_up(theta.hi.as_fraction(), digits),
                        decimal_down(v.lo.as_fraction(), digits),
                        decimal_up(v.hi.as_fraction(), digits),
                    )
                )
            )
        sys.stdout.write("\n".join(out) + "\n")
    else:
        _emit({
            "quantity": "variation-profile",
            "input_kind": _kind_name(path),
            "count": args.count,
            "rows": [
                {
                    "theta": {
                        "lo": decimal_down(theta.lo.as_fraction(), digits),
                        "hi": decimal_up(theta.hi.as_fraction(), digits),
                    },
                    "v": {
                        "lo": decimal_down(v.lo.as_fraction(), digits),
                        "hi": decimal_up(v.hi.as_fraction(), digits),
                    },
                }
                for theta, v in rows
            ],
        })
    if isinstance(path, SampledGraph):
        print(
            "certification unavailable: rows are non-shrinking sample brackets",
            file=sys.stderr,
        )
        return 3
    return 0


def _cmd_decide(args) -> int:
    path = _load_path(args.path)
    d = _parse_direction(args.theta, args.direction)
    a = _parse_rational(args.a, "bracket endpoint a")
    b = _parse_rational(args.b, "bracket endpoint b")
    if not a < b:
        raise InputError("decision bracket needs a < b")
    if isinstance(path, SampledGraph):
        cert = sampled_bracket(path, d)
        return _bracket_exit(
            "variation-order", path, cert, args.digits,
            "sampled graphs cannot support the decision procedure",
        )
    verdict = variation_order_decide(path, d, a, b)
    _emit({
        "quantity": "variation-order",
        "input_kind": _kind_name(path),
        "direction": d.describe(),
        "a": str(a),
        "b": str(b),
        "verdict": verdict.value,
        "meaning": (
            "variation exceeds a" if verdict is Verdict.GREATER_THAN_A
            else "variation is below b"
        ),
    })
    return 0


def _cmd_demo(args) -> int:
    report = adversarial_demo(args.n, args.k)
    _emit(report.to_json_dict(args.digits))
    return 0


def _parse_bits(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(b) for b in text.split(","))
    except ValueError:
        raise InputError("--bits expects a comma-separated 0/1 list")


def _cmd_gen(args) -> int:
    if args.family == "sawtooth":
        spec = SawtoothGraph(args.n)
    elif args.family == "mixture":
        spec = SawtoothMixture(_parse_bits(args.bits))
    else:
        spec = tilt(SawtoothMixture(_parse_bits(args.bits)))
    sys.stdout.write(path_to_json(spec) + "\n")
    return 0


# -- argument wiring ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pathvar",
        description="certified lengths and directional variations of planar paths",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, needs_path=True):
        if needs_path:
            p.add_argument("path", help="path description JSON file, or - for stdin")
        p.add_argument("--digits", type=int, default=12, help="decimal places in output")

    p = sub.add_parser("length", help="two-sided length certificate")
    common(p)
    p.add_argument("--eps", default="1e-6", help="tolerance (decimal or p/q)")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("variation", help="two-sided directional variation certificate")
    common(p)
    p.add_argument("--eps", default="1e-6")
    p.add_argument("--theta", help="direction angle: pi/2, 3pi/4, 0.25, 1/3")
    p.add_argument("--direction", help="direction ray: wx,wy (exact rationals)")

    p = sub.add_parser("profile", help="variation against direction angle")
    common(p)
    p.add_argument("--eps", default="1e-6")
    p.add_argument("--count", type=int, default=8, help="angle cells between 0 and pi")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("decide", help="resolve variation against a bracket a < b")
    common(p)
    p.add_argument("--theta")
    p.add_argument("--direction")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("demo", help="sampling blind spot on the sawtooth family")
    common(p, needs_path=False)
    p.add_argument("--n", type=int, default=8, help="sawtooth scale")
    p.add_argument("--k", type=int, default=3, help="observer grid scale")

    p = sub.add_parser("gen", help="emit a path description JSON")
    p.add_argument("family", choices=("sawtooth", "mixture", "tilted"))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--bits", default="", help="comma-separated mixture bits")
    return top


_HANDLERS = {
    "length": _cmd_length,
    "variation": _cmd_variation,
    "profile": _cmd_profile,
    "decide": _cmd_decide,
    "demo": _cmd_demo,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return _HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleUnavailable as exc:
        print(f"certification unavailable: {exc}", file=sys.stderr)
        return 3
    except ResourceError as exc:
        print(f"certification unavailable: {exc}", file=sys.stderr)
        if exc.best is not None:
            _emit({"best_bracket": {
                "lo": decimal_down(exc.best.lo.as_fraction(), 12),
                "hi": decimal_up(exc.best.hi.as_fraction(), 12),
            }})
        return 3


if __name__ == "__main__":
    sys.exit(main())
