"""Command-line front end: family tables, identity verification, series
transforms, and the colored-forest bijection demo.

Output is deterministic for fixed inputs.  JSON is the machine format, CSV
the tabular convenience, DOT the graph format.  The default truncation
order comes from the LAMBDAFACT_ORDER environment variable (8 if unset);
requests beyond the safety cutoffs need --unsafe.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import enumeration, identities, sequences, series
from .polynomial import Polynomial
from .symbols import LAM, T, X

SERIES_ORDER_CAP = 12
TABLE_INDEX_CAP = 50
BIJECTION_DEFAULT_CAP = 10 ** 5
BIJECTION_UNSAFE_CAP = enumeration.MSTAR_CUTOFF

TABLE_FAMILIES = (
    "factorial",
    "derangement",
    "lambda-factorial",
    "charlier",
    "bell",
    "hermite",
    "stirling2",
    "q",
)

ABEL_FAMILIES = ("ones", "factorial", "derangement", "bell", "hermite", "charlier")


def _default_order() -> int:
    raw = os.environ.get("LAMBDAFACT_ORDER", "")
    try:
        return int(raw) if raw else 8
    except ValueError:
        return 8


def _parse_range(spec: str) -> range:
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(spec)
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range {spec!r}")
    return range(lo, hi + 1)


def _table_rows(family: str, ns: range, ms: range | None):
    if family == "factorial":
        return [(n, None, sequences.factorial(n)) for n in ns]
    if family == "derangement":
        return [(n, None, sequences.derangement(n)) for n in ns]
    if family == "lambda-factorial":
        return [(n, None, sequences.lambda_factorial(n)) for n in ns]
    if family == "charlier":
        return [(n, None, sequences.charlier(n)) for n in ns]
    if family == "bell":
        return [(n, None, sequences.bell_poly(n)) for n in ns]
    if family == "hermite":
        return [(n, None, sequences.hermite_poly(n)) for n in ns]
    if family == "stirling2":
        rows = []
        for n in ns:
            for k in ms if ms is not None else range(0, n + 1):
                rows.append((n, k, sequences.stirling2(n, k)))
        return rows
    if family == "q":
        if ms is None:
            raise ValueError("family 'q' needs an m range")
        return [(n, m, sequences.q_poly(n, m)) for n in ns for m in ms]
    raise ValueError(f"unknown family {family!r}")


def _cmd_table(args) -> int:
    try:
        ns = _parse_range(args.n)
        ms = _parse_range(args.m) if args.m is not None else None
        top = max(ns.stop - 1, (ms.stop - 1) if ms is not None else 0)
        if top > TABLE_INDEX_CAP and not args.unsafe:
            raise ValueError(
                f"index {top} beyond the default cap {TABLE_INDEX_CAP}; "
                "pass --unsafe to override"
            )
        rows = _table_rows(args.family, ns, ms)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = [
            {"family": args.family, "n": n, **({"m": m} if m is not None else {}),
             "value": str(v)}
            for n, m, v in rows
        ]
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for n, m, v in rows:
            cells = [args.family, str(n)] + ([str(m)] if m is not None else []) + [str(v)]
            print(",".join(cells))
    return 0


def _cmd_verify(args) -> int:
    wanted = args.ids
    known = identities.catalogue_ids()
    if not wanted or wanted == ["all"]:
        wanted = list(known)
    unknown = [i for i in wanted if i not in known]
    if unknown:
        print(f"error: unknown identity ids: {', '.join(unknown)}", file=sys.stderr)
        return 2
    failures = 0
    try:
        for report in identities.verify_many(
            wanted, n_max=args.n_max, m_max=args.m_max, order=args.order
        ):
            print(json.dumps(report.to_json(), ensure_ascii=False))
            if not report.verdict:
                failures += 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 1 if failures else 0


def _series_payload(args) -> series.TruncatedSeries:
    order = args.order if args.order is not None else _default_order()
    if order > SERIES_ORDER_CAP and not args.unsafe:
        raise ValueError(
            f"order {order} beyond the default cap {SERIES_ORDER_CAP}; pass --unsafe to override"
        )
    what = args.what
    if what == "tree":
        return series.tree_function(order)
    if what == "egf-f":
        lam = (
            Polynomial.variable(LAM)
            if args.lam == "sym"
            else Polynomial.constant(int(args.lam))
        )
        return series.exp_series(lam - 1, T, order) * series.geometric(T, order)
    if what == "abel-rhs":
        provider = {
            "ones": lambda n: Polynomial.one(),
            "factorial": lambda n: Polynomial.constant(sequences.factorial(n)),
            "derangement": lambda n: Polynomial.constant(sequences.derangement(n)),
            "bell": sequences.bell_poly,
            "hermite": sequences.hermite_poly,
            "charlier": sequences.charlier,
        }[args.a]
        lam = Polynomial.variable(LAM) if args.lam == "sym" else int(args.lam)
        return series.abel_rhs(provider, lam, order, X)
    raise ValueError(f"unknown series target {what!r}")


def _cmd_series(args) -> int:
    try:
        ser = _series_payload(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(
            json.dumps(
                {"var": ser.var, "order": ser.order, "coefficients": ser.coefficient_strings()},
                ensure_ascii=False,
            )
        )
    else:
        print(str(ser))
    return 0


def _parse_sigma(raw: str, size: int) -> enumeration.Endofunction:
    parts = [p for p in raw.replace(" ", "").split(",") if p]
    image = tuple(int(p) for p in parts)
    if len(image) != size:
        raise ValueError(f"sigma must list {size} image values, got {len(image)}")
    return enumeration.Endofunction(image)


def _cmd_bijection(args) -> int:
    n, lam = args.n, args.lam
    if n < 0 or lam < 0:
        print("error: need n >= 0 and lambda >= 0", file=sys.stderr)
        return 2
    count = (n + lam) ** (n + 1)
    cap = BIJECTION_UNSAFE_CAP if args.unsafe else BIJECTION_DEFAULT_CAP
    if count > cap and args.sigma is None:
        print(
            f"error: {count} objects exceeds the cutoff {cap}"
            + ("" if args.unsafe else "; pass --unsafe to raise it"),
            file=sys.stderr,
        )
        return 2

    if args.sigma is not None:
        try:
            sigma = _parse_sigma(args.sigma, n + lam + 1)
            tau, colors = enumeration.sigma_to_tau(sigma, n, lam)
            pair = enumeration.sigma_to_pair(sigma, n, lam)
            back = enumeration.pair_to_sigma(pair, n, lam)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"sigma: {list(sigma.image)}")
        print(f"tau:   {list(tau)}  colors: {dict(colors)}")
        print(f"forest parents: {list(pair.parent)} (0 marks roots)")
        print(f"root permutation: {dict(pair.pi)}")
        print(f"colored fixed points: {dict(pair.colors)}")
        print(f"recovered sigma: {list(back.image)}")
        status = "OK" if back.image == sigma.image else "MISMATCH"
        print(f"round trip: {status}")
        if args.dot:
            print(enumeration.endofunction_to_dot(sigma, name="sigma"))
            print(enumeration.pair_to_dot(pair, name="pair"))
        return 0 if status == "OK" else 1

    strata = enumeration.exhaustive_roundtrip(n, lam)
    total = sum(strata.values())
    print(f"{total} objects, round-trip OK")
    ok = total == count
    for k in range(n + 1):
        observed = strata.get(k, 0)
        expected = sequences.binomial(n, k) * (n + 1) ** (n - k) * int(
            sequences.lambda_factorial_at(k + 1, lam)
        )
        mark = "ok" if observed == expected else "MISMATCH"
        ok = ok and observed == expected
        print(f"  k={k}: {observed} (expected {expected}) {mark}")
    print(f"total {total} = ({n}+{lam})^{n + 1}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambdafact",
        description="Exact tables, identity verification, series transforms and "
        "the colored-forest bijection demo.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print one family as CSV or JSON rows")
    p_table.add_argument("family", choices=TABLE_FAMILIES)
    p_table.add_argument("n", help="index or inclusive range, e.g. 3 or 0..5")
    p_table.add_argument("m", nargs="?", default=None,
                         help="second index range (q, stirling2)")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--unsafe", action="store_true",
                         help="allow indices beyond the default cap")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="verify catalogued identities")
    p_verify.add_argument("ids", nargs="*", default=[],
                          help="identity ids, or 'all' (default)")
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--m-max", type=int, default=None)
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_series = sub.add_parser("series", help="print a named series")
    p_series.add_argument("what", choices=("tree", "egf-f", "abel-rhs"))
    p_series.add_argument("--order", type=int, default=None)
    p_series.add_argument("--lambda", dest="lam", default="sym",
                          help="integer value or 'sym' (default)")
    p_series.add_argument("--a", choices=ABEL_FAMILIES, default="ones",
                          help="sequence family for abel-rhs")
    p_series.add_argument("--format", choices=("text", "json"), default="text")
    p_series.add_argument("--unsafe", action="store_true",
                          help="allow orders beyond the default cap")
    p_series.set_defaults(func=_cmd_series)

    p_bij = sub.add_parser("bijection",
                           help="exhaustive round-trip census, or map one sigma")
    p_bij.add_argument("n", type=int)
    p_bij.add_argument("lam", type=int, metavar="lambda")
    p_bij.add_argument("--sigma", default=None,
                       help="comma-separated image of one endofunction")
    p_bij.add_argument("--dot", action="store_true", help="also print DOT graphs")
    p_bij.add_argument("--unsafe", action="store_true",
                       help="raise the exhaustive-run cutoff")
    p_bij.set_defaults(func=_cmd_bijection)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
