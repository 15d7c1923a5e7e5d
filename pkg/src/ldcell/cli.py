"""Command line front end.

Exit codes: 0 on success, 1 when a certificate fails, a regime
precondition is not met, or a search budget runs out, 2 on malformed
input (bad flags, bad JSON, invalid parameter combinations).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from .channel import CellParams, classify_regime
from .errors import CapacityError, ConstructionError, RegimeError
from .rates import (achievable_sum, upper_bound_ktx, upper_bound_sum,
                    wcurve_csv, wcurve_sweep)
from .scheme import (construct_imac, dualize, load_scheme, save_scheme,
                     search_best, verify)


def _fmt(x: Fraction) -> str:
    dec = str(x.numerator) if x.denominator == 1 else str(float(x))
    return f"{x.numerator}/{x.denominator} ({dec})"


def _add_param_flags(sp: argparse.ArgumentParser) -> None:
    for name in ("n1", "n2", "n3", "n4", "nm", "nd"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--q", type=int, default=None,
                    help="ambient level count (default: largest gain)")


def _params_from(args) -> CellParams:
    return CellParams(args.n1, args.n2, args.n3, args.n4,
                      args.nm, args.nd, args.q)


def cmd_bound(args) -> int:
    p = _params_from(args)
    regime = classify_regime(p)
    print(f"regime: {regime.tag}")
    if not regime.very_weak:
        print("upper bound undefined outside the very weak regime",
              file=sys.stderr)
        return 1
    if regime.sub_a:
        print(f"achievable: {_fmt(achievable_sum(p))}")
    print(f"bound: {_fmt(upper_bound_sum(p))}")
    if args.k is not None:
        print(f"ktx(k={args.k}): {_fmt(upper_bound_ktx(p, args.k))}")
    return 0


def cmd_construct(args) -> int:
    p = _params_from(args)
    s = construct_imac(p)
    cert = verify(s)
    if args.out:
        save_scheme(s, args.out)
        target = achievable_sum(p)
        bound = upper_bound_sum(p)
        print(f"regime: {classify_regime(p).tag}")
        print(f"rate: {cert.certified_rate}")
        print(f"target: {_fmt(target)}"
              f" ({'met' if cert.certified_rate == target else 'missed'})")
        print(f"bound: {_fmt(bound)}"
              f" ({'met' if cert.certified_rate == bound else 'not tight'})")
        print(f"wrote: {args.out}")
    else:
        sys.stdout.write(s.dumps())
    return 0


def cmd_verify(args) -> int:
    s = load_scheme(args.scheme)
    cert = verify(s)
    for rc in cert.receivers:
        status = "pass" if rc.passed else "FAIL"
        print(f"rx{rc.receiver}: desired_bits={rc.desired_bits} "
              f"desired_rank={rc.desired_rank} nuisance_rank={rc.nuisance_rank} "
              f"joint_rank={rc.joint_rank} {status}")
    print(f"overall: {'PASS' if cert.passed else 'FAIL'} "
          f"rate={cert.certified_rate}")
    return 0 if cert.passed else 1


def cmd_dualize(args) -> int:
    s = load_scheme(args.scheme)
    dual = dualize(s)
    if args.out:
        save_scheme(dual, args.out)
        print(f"rate: {dual.rate}")
        print(f"wrote: {args.out}")
    else:
        sys.stdout.write(dual.dumps())
    if args.verify:
        cert = verify(dual)
        print(f"dual certificate: {'PASS' if cert.passed else 'FAIL'} "
              f"rate={cert.certified_rate}")
        if not cert.passed:
            return 1
    return 0


def cmd_wcurve(args) -> int:
    points = wcurve_sweep(args.n1, args.delta)
    csv_text = wcurve_csv(points)
    gaps = [pt for pt in points if pt.gap is not None]
    max_gap = max((pt.gap for pt in gaps), default=Fraction(0))
    zeros = [pt.alpha for pt in gaps if pt.gap == 0]
    summary = [f"max gap: {_fmt(max_gap)}",
               "zero-gap alphas: " +
               (", ".join(str(a) for a in zeros) if zeros else "none")]
    if args.out:
        with open(args.out, "w") as f:
            f.write(csv_text)
        print(f"wrote: {args.out}")
        print("\n".join(summary))
    else:
        sys.stdout.write(csv_text)
        print("\n".join(summary), file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    p = _params_from(args)
    try:
        s, rate = search_best(p, max_col_weight=args.weight,
                              max_q=min(p.q, 6), budget=args.budget)
    except CapacityError as e:
        if e.partial is None:
            raise
        s, rate = e.partial
        if args.out:
            save_scheme(s, args.out)
        print(f"budget exhausted; best found so far: {rate} (partial)")
        return 1
    print(f"best rate: {rate}")
    regime = classify_regime(p)
    if regime.very_weak:
        print(f"floor(bound): {math.floor(upper_bound_sum(p))}")
    else:
        print(f"bound undefined in regime {regime.tag}")
    if regime.sub_a:
        print(f"achievable: {_fmt(achievable_sum(p))}")
    if args.out:
        save_scheme(s, args.out)
        print(f"wrote: {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ldcell",
        description="Deterministic interfering cellular channels: rates, "
                    "schemes, certificates.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bound", help="sum-rate bounds for one parameter set")
    _add_param_flags(sp)
    sp.add_argument("--k", type=int, default=None,
                    help="also print the k-transmitter bound")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("construct", help="build the uplink alignment scheme")
    _add_param_flags(sp)
    sp.add_argument("--out", default=None, help="scheme JSON path")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="certify a scheme file")
    sp.add_argument("scheme", help="scheme JSON path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dualize", help="uplink scheme to downlink scheme")
    sp.add_argument("scheme", help="IMAC scheme JSON path")
    sp.add_argument("--out", default=None, help="dual scheme JSON path")
    sp.add_argument("--verify", action="store_true",
                    help="certify the dual scheme as well")
    sp.set_defaults(func=cmd_dualize)

    sp = sub.add_parser("wcurve", help="gap-to-bound sweep over alpha")
    sp.add_argument("--n1", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--out", default=None, help="CSV path")
    sp.set_defaults(func=cmd_wcurve)

    sp = sub.add_parser("oracle", help="bounded exhaustive scheme search")
    _add_param_flags(sp)
    sp.add_argument("--weight", type=int, default=1, choices=(1, 2))
    sp.add_argument("--budget", type=int, default=20_000_000)
    sp.add_argument("--out", default=None, help="best scheme JSON path")
    sp.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except RegimeError as e:
        print(f"regime error: {e}", file=sys.stderr)
        return 1
    except ConstructionError as e:
        print(f"construction error: {e}", file=sys.stderr)
        return 1
    except CapacityError as e:
        print(f"capacity error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
