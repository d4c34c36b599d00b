"""Command-line front end.

Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .arith import QQ, GF, factorize, is_prime, parse_integer
from .closed_form import (
    PoleError,
    binomial_identity_check,
    charp_degree,
    ostrowski_matrix,
    ostrowski_product,
    pfaff_saalschutz,
    psres_factor,
    qj_closed,
    subresultant_closed,
    sum_q_identity,
)
from .linalg import HankelSpec, bareiss_det, hankel_matrix, maximal_minors
from .oracle import subresultant_det
from .polynomial import bernstein_expand, power_of_linear
from .report import VerificationReport, serialize
from .sweeps import run_sweep

log = logging.getLogger("subres")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _domain(char: int):
    if char == 0:
        return QQ
    if not is_prime(char):
        raise UsageError(f"--char must be 0 or a prime, got {char}")
    return GF(char)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _report_lines(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in report.inputs.items())
    return f"{status} {report.subject} {params}: lhs={report.lhs} rhs={report.rhs}"


def cmd_subres(args) -> int:
    dom = _domain(args.char)
    try:
        alpha, beta = dom.parse(args.alpha), dom.parse(args.beta)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    m, n, d = args.m, args.n, args.d
    B = subresultant_closed(m, n, d, alpha, beta, dom)
    poly = bernstein_expand(B)
    payload = {
        "m": m,
        "n": n,
        "d": d,
        "characteristic": dom.characteristic,
        "alpha": dom.format(alpha),
        "beta": dom.format(beta),
        "bernstein": {
            "sign": B.sign,
            "power_alpha_minus_beta": B.exponent,
            "q": serialize(list(B.q)),
        },
        "monomial": serialize(poly),
    }
    lines = [
        f"Sres_{d}((x - {dom.format(alpha)})^{m}, (x - {dom.format(beta)})^{n}) over {dom!r}",
        f"bernstein: sign {B.sign:+d}, (alpha - beta)^{B.exponent}, q = [{', '.join(map(str, B.q))}]",
        f"monomial: {poly.to_text()}",
    ]
    status = EXIT_OK
    if args.oracle:
        oracle = subresultant_det(power_of_linear(alpha, m, dom), power_of_linear(beta, n, dom), d)
        match = oracle == poly
        payload["oracle_match"] = match
        lines.append(f"oracle: {'match' if match else 'MISMATCH'} ({oracle.to_text()})")
        if not match:
            status = EXIT_FAIL
    _emit(args, payload, lines)
    return status


def cmd_qcoeffs(args) -> int:
    spec = HankelSpec(args.m, args.n, args.d)
    H = hankel_matrix(spec)
    minors = maximal_minors(spec)
    closed = qj_closed(spec.m, spec.n, spec.d) if spec.d < min(spec.m, spec.n) else None
    match = None if closed is None else closed == minors
    payload = {
        "m": spec.m,
        "n": spec.n,
        "d": spec.d,
        "c": spec.c,
        "hankel": serialize(H.to_rows()),
        "minors": serialize(minors),
        "closed": None if closed is None else serialize(closed),
        "match": match,
    }
    lines = [f"H({spec.m},{spec.n},{spec.d}), c = {spec.c}:"]
    lines += ["  " + " ".join(f"{x:>6}" for x in row) for row in H.to_rows()]
    lines.append(f"minors: {minors}")
    if closed is None:
        lines.append("closed: n/a (d = min(m, n))")
    else:
        lines.append(f"closed: {closed}  [{'match' if match else 'MISMATCH'}]")
    _emit(args, payload, lines)
    return EXIT_FAIL if match is False else EXIT_OK


def cmd_psres(args) -> int:
    m, n, d = args.m, args.n, args.d
    factor = psres_factor(m, n, d)
    primes = factorize(factor) if factor else {}
    bound = m + n - d
    small = [p for p in range(2, bound) if is_prime(p)]
    drops_everywhere = bool(small) and all(factor % p == 0 for p in small)
    payload = {
        "m": m,
        "n": n,
        "d": d,
        "factor": str(factor),
        "primes": {str(p): e for p, e in sorted(primes.items())},
        "bound": bound,
        "degree_below_d_for_all_small_primes": drops_everywhere,
    }
    fact_text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(primes.items())) or "1"
    lines = [f"factor: {factor} = {fact_text}", f"prime factors all < {bound}: {max(primes, default=1) < bound}"]
    if drops_everywhere:
        lines.append(f"note: degree < d for all p < {bound}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_charp_table(args) -> int:
    m, n, d = args.m, args.n, args.d
    bound = args.upto if args.upto is not None else m + n - d
    rows = []
    for p in range(2, bound):
        if is_prime(p):
            rep = charp_degree(m, n, d, p)
            rows.append({"p": p, "degree": rep.degree, "s_mod_p": [s % p for s in rep.s]})
    payload = {"m": m, "n": n, "d": d, "rows": rows}
    lines = [f"degree of Sres_{d}((x-a)^{m}, (x-b)^{n}), a != b, by characteristic:"]
    lines += [f"p={r['p']}: degree {r['degree']}" for r in rows]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_identity(args) -> int:
    reports: list[VerificationReport] = []
    notes: list[str] = []
    if args.kind == "ostrowski":
        if args.l is None or args.a is None:
            raise UsageError("ostrowski needs --l and --a")
        a = [parse_integer(s) for s in args.a.split(",")]
        closed = ostrowski_product(args.l, a)
        det = bareiss_det(ostrowski_matrix(args.l, a))
        if closed is None:
            notes.append("closed form undefined (negative factorial argument); matrix route only")
            closed = det
        reports.append(VerificationReport.compare("ostrowski", {"l": args.l, "a": a}, closed, det))
    elif args.kind == "pfaff-saalschutz":
        if args.k is None:
            raise UsageError("pfaff-saalschutz needs --k")
        x, y, z = (QQ.parse(v) for v in (args.x, args.y, args.z))
        lhs, rhs = pfaff_saalschutz(args.k, x, y, z)
        inputs = {"k": args.k, "x": QQ.format(x), "y": QQ.format(y), "z": QQ.format(z)}
        reports.append(VerificationReport.compare("pfaff-saalschutz", inputs, lhs, rhs))
    elif args.kind == "binomial-kernel":
        _need_mnd(args)
        rows = [args.i] if args.i is not None else range(1, args.m + 1)
        reports += [binomial_identity_check(args.m, args.n, args.d, i) for i in rows]
    else:
        _need_mnd(args)
        reports.append(sum_q_identity(args.m, args.n, args.d))
    ok = all(r.passed for r in reports)
    payload = {"kind": args.kind, "pass": ok, "notes": notes, "reports": [_stable(r) for r in reports]}
    _emit(args, payload, [_report_lines(r) for r in reports] + notes)
    return EXIT_OK if ok else EXIT_FAIL


def _stable(report: VerificationReport) -> dict:
    out = report.to_dict()
    out["elapsed_ms"] = round(out["elapsed_ms"], 3)
    return out


def _need_mnd(args) -> None:
    if args.m is None or args.n is None or args.d is None:
        raise UsageError(f"{args.kind} needs -m, -n and -d")


def cmd_verify(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    log.info("verify sweep: max=%d seed=%d jobs=%d", args.max, args.seed, args.jobs)
    results = run_sweep(args.max, args.seed, args.jobs)
    ok = all(r.ok for r in results)
    payload = {
        "max": args.max,
        "seed": args.seed,
        "checks": [{"name": r.name, "cases": r.cases, "passed": r.passed, "failures": r.failures} for r in results],
        "pass": ok,
    }
    lines = [f"verify: max={args.max} seed={args.seed}"]
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<18} {r.passed}/{r.cases}")
        lines += [f"      failed: {params}" for params in r.failures[:10]]
    total = sum(r.cases for r in results)
    lines.append(f"{'all' if ok else 'NOT all'} {total} cases passed")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subres", description="Subresultants of (x-alpha)^m and (x-beta)^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def mnd(p, required=True):
        p.add_argument("-m", type=int, required=required)
        p.add_argument("-n", type=int, required=required)
        p.add_argument("-d", type=int, required=required)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("subres", help="closed-form subresultant, optionally checked against the determinant")
    mnd(p)
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="0")
    p.add_argument("--char", type=int, default=0, help="0 for QQ, or a prime p for GF(p)")
    p.add_argument("--oracle", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_subres)

    p = sub.add_parser("qcoeffs", help="Hankel maximal minors next to their closed forms")
    mnd(p)
    fmt(p)
    p.set_defaults(func=cmd_qcoeffs)

    p = sub.add_parser("psres", help="integer factor of the principal subresultant")
    mnd(p)
    fmt(p)
    p.set_defaults(func=cmd_psres)

    p = sub.add_parser("charp-table", help="degree of the subresultant in small characteristic")
    mnd(p)
    p.add_argument("--upto", type=int, default=None, help="list primes below this (default m+n-d)")
    fmt(p)
    p.set_defaults(func=cmd_charp_table)

    p = sub.add_parser("verify", help="run the invariant sweep")
    p.add_argument("--max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="evaluate one supporting identity instance")
    p.add_argument("kind", choices=("ostrowski", "pfaff-saalschutz", "binomial-kernel", "sum-q"))
    mnd(p, required=False)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--a", default=None, help="comma-separated naturals")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--x", default="0")
    p.add_argument("--y", default="0")
    p.add_argument("--z", default="1")
    fmt(p)
    p.set_defaults(func=cmd_identity)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("SUBRES_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
