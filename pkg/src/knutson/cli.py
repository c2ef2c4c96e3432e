"""Command-line interface.

Every subcommand prints a short human-readable summary on stdout and can
write a JSON report with ``--out``.  Exit codes: 0 success, 1 a check
failed (including a false answer from ``member`` / ``equal``), 2 usage
or input error, 3 closure cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from typing import Optional

from .closure import WitnessPolicy, closure, family_report
from .errors import ClosureCapExceeded, KnutsonError
from .field import field_from_characteristic, is_prime, primes_upto
from .groebner import Ideal, ideal_contains, ideal_equal
from .hankel import HankelSpec, default_ring, verify_primary_dec, verify_theorem_membership
from .ideal_ops import ideal_colon, ideal_intersect, ideal_sum
from .modp import prime_scan, scan_summary
from .monomial import hilbert_summary
from .orders import parse_order
from .polynomial import PolyRing
from .suites import SUITES, SuiteRefused, run_suite
from .text import parse_polynomial, parse_polynomials

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- helpers -----------------------------------------------------------------


def _read_text(value: str) -> str:
    """A literal, ``@path`` or an existing file path."""
    if value.startswith("@"):
        path = value[1:]
    elif os.path.isfile(value):
        path = value
    else:
        return value
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _infer_nvars(*texts) -> int:
    idx = [int(k) for t in texts if t for k in re.findall(r"\bx(\d+)\b", t)]
    if not idx:
        raise UsageError("cannot infer the number of variables; pass --vars")
    return max(idx)


def _ring(args, *texts) -> PolyRing:
    char = args.char
    if char != 0 and not is_prime(char):
        raise UsageError(f"--char must be 0 or a prime, got {char}")
    names = tuple(args.names.split(",")) if args.names else ()
    n = args.vars or (len(names) if names else _infer_nvars(*texts))
    order = parse_order(args.order)
    return PolyRing(n, field_from_characteristic(char), order, names)


def _ideal(text: str, ring: PolyRing) -> Ideal:
    return Ideal(parse_polynomials(text, ring), ring)


def _emit(args, payload: dict, lines: list):
    for line in lines:
        print(line)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))


def _ring_args(p: argparse.ArgumentParser):
    p.add_argument("--vars", type=int, default=0, help="number of variables (default: inferred)")
    p.add_argument("--names", default="", help="comma separated variable names")
    p.add_argument("--order", default="lex", help="lex | grevlex | matrix:r1;r2;...")
    p.add_argument("--char", type=int, default=0, help="0 or a prime")


def _out_args(p: argparse.ArgumentParser):
    p.add_argument("--out", "--report", dest="out", help="write the JSON report here")
    p.add_argument("--json", action="store_true", help="also print the JSON report")


# -- subcommands ---------------------------------------------------------------


def cmd_gb(args) -> int:
    text = _read_text(args.ideal)
    ring = _ring(args, text)
    I = _ideal(text, ring)
    gb = I.groebner()
    payload = {"ring": str(ring), "groebner_basis": gb.format(),
               "initial_ideal": gb.initial_ideal().format(ring.names)}
    if args.command == "initial":
        _emit(args, payload, ["(" + ", ".join(payload["initial_ideal"]) + ")"])
    else:
        _emit(args, payload, gb.format())
    return EXIT_OK


def cmd_member(args) -> int:
    text = _read_text(args.ideal)
    ring = _ring(args, text, args.poly)
    f = parse_polynomial(args.poly, ring)
    ans = _ideal(text, ring).contains(f)
    _emit(args, {"polynomial": str(f), "member": ans}, [str(ans).lower()])
    return EXIT_OK if ans else EXIT_CHECK


def cmd_equal(args) -> int:
    a, b = _read_text(args.ideal), _read_text(args.other)
    ring = _ring(args, a, b)
    I, J = _ideal(a, ring), _ideal(b, ring)
    ans = ideal_equal(I, J)
    payload = {"equal": ans, "contains": ideal_contains(I, J), "contained": ideal_contains(J, I)}
    _emit(args, payload, [str(ans).lower()])
    return EXIT_OK if ans else EXIT_CHECK


def cmd_binary(args) -> int:
    a, b = _read_text(args.ideal), _read_text(args.other)
    ring = _ring(args, a, b)
    I, J = _ideal(a, ring), _ideal(b, ring)
    op = {"sum": ideal_sum, "intersect": ideal_intersect, "colon": ideal_colon}[args.command]
    R = op(I, J)
    payload = {"operation": args.command, "groebner_basis": R.format(),
               "initial_ideal": R.initial_ideal().format(ring.names)}
    _emit(args, payload, R.format())
    return EXIT_OK


def cmd_hilbert(args) -> int:
    text = _read_text(args.ideal)
    ring = _ring(args, text)
    summ = hilbert_summary(_ideal(text, ring).initial_ideal())
    payload = summ.to_json()
    _emit(args, payload, [f"h_vector={payload['h_vector']} dim={payload['dim']} "
                          f"height={payload['height']} multiplicity={payload['multiplicity']}"])
    return EXIT_OK


def _policy(args, ring) -> WitnessPolicy:
    sources = {s.strip() for s in args.witnesses.split(",") if s.strip()}
    unknown = sources - {"members", "vars", "none", "default"}
    if unknown:
        raise UsageError(f"unknown witness source(s): {', '.join(sorted(unknown))}")
    if "default" in sources:
        sources |= {"members", "vars"}
    extra = []
    for w in args.witness or ():
        extra.extend(parse_polynomials(_read_text(w), ring))
    return WitnessPolicy(member_generators="members" in sources,
                         single_variables="vars" in sources, extra=tuple(extra),
                         max_iterations=args.max_iterations, max_members=args.max_members)


def _family_lines(rep: dict) -> list:
    lines = [f"{'#':>3}  {'operation':<10} {'initial ideal':<28} generators"]
    for m in rep["members"]:
        init = "(" + ", ".join(m["initial_ideal"]) + ")"
        lines.append(f"{m['index']:>3}  {m['provenance']['operation']:<10} {init:<28} "
                     + "; ".join(m["generators"]))
    if "checks" in rep:
        lines.append(f"checks passed: {rep['checks']['passed']}")
    return lines


def cmd_closure(args) -> int:
    ring = _ring(args, args.seed)
    f = parse_polynomial(args.seed, ring)
    fam = closure(f, _policy(args, ring))
    rep = family_report(fam)
    _emit(args, rep, _family_lines(rep))
    return EXIT_OK if rep["checks"]["passed"] else EXIT_CHECK


def cmd_hankel_verify(args) -> int:
    if args.m > args.limit:
        raise UsageError(f"m={args.m} exceeds the desk-scale limit {args.limit}")
    spec = HankelSpec.of_shape(args.m, args.shape)
    if args.char != 0 and not is_prime(args.char):
        raise UsageError(f"--char must be 0 or a prime, got {args.char}")
    ring = default_ring(spec, field_from_characteristic(args.char), parse_order(args.order))
    mem = verify_theorem_membership(spec, ring)
    payload = {"spec": mem["spec"], "shape": args.shape, "char": args.char,
               "members": mem["members"], "checks": list(mem["checks"]),
               "family": family_report(mem["family"])}
    if "comparison" in mem:
        payload["comparison"] = mem["comparison"]
    if args.shape == "square":
        for t in range(2, args.m + 1):
            dec = verify_primary_dec(spec, t, ring)
            payload["checks"] += [dict(c, check=f"t={t}: {c['check']}") for c in dec["checks"]]
    payload["checks"] += [{"check": "family certification", "anchor": "groebner-union",
                           "expected": True, "actual": payload["family"]["checks"]["passed"],
                           "passed": payload["family"]["checks"]["passed"]}]
    payload["passed"] = all(c["passed"] for c in payload["checks"])
    _emit(args, payload, _check_lines(payload["checks"]) + [f"members: {mem['members']}"])
    return EXIT_OK if payload["passed"] else EXIT_CHECK


def _primes(text: str) -> list:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}")
    bad = [p for p in ps if not is_prime(p)]
    if bad:
        raise UsageError(f"not prime: {bad}")
    return ps


def cmd_modp(args) -> int:
    text = _read_text(args.ideal)
    args.char = 0
    ring = _ring(args, text)
    I = _ideal(text, ring)
    primes = _primes(args.primes) if args.sub == "compare" else primes_upto(args.upto)
    reports = prime_scan(I, primes)
    payload = {"reports": [r.to_json(ring.names) for r in reports],
               "summary": scan_summary(reports)}
    lines = [f"p={r.p:<5} {r.status:<5} {'match' if r.match else r.reason}" for r in reports]
    lines.append(f"bad primes: {payload['summary']['bad_primes']}")
    _emit(args, payload, lines)
    if args.expect_bad is not None:
        return EXIT_OK if payload["summary"]["bad_primes"] == _primes(args.expect_bad) else EXIT_CHECK
    return EXIT_OK


def _check_lines(checks: list) -> list:
    return [f"{'PASS' if c['passed'] else 'FAIL'}  [{c['anchor']}] {c['check']}"
            + ("" if c["passed"] else f"  expected={c['expected']!r} actual={c['actual']!r}")
            for c in checks]


def cmd_suite(args) -> int:
    params = {}
    for key in ("m", "n", "limit", "upto", "p"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.chars:
        params["chars"] = [int(c) for c in args.chars.split(",")]
    for c in params.get("chars", []):
        if c != 0 and not is_prime(c):
            raise UsageError(f"--char must be 0 or a prime, got {c}")
    if args.timings:
        params["timings"] = True
    try:
        code, rep = run_suite(args.name, params)
    except SuiteRefused as exc:
        raise UsageError(str(exc))
    lines = _check_lines(rep["checks"])
    lines.append(f"{rep['suite']}: {'PASS' if rep['passed'] else 'FAIL'} "
                 f"({sum(c['passed'] for c in rep['checks'])}/{len(rep['checks'])} checks)")
    _emit(args, rep, lines)
    return code


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knutson", description="Knutson ideal toolkit")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, helptext in (("gb", "reduced Groebner basis"), ("initial", "initial ideal")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("ideal", help="generators, or @file")
        _ring_args(p)
        _out_args(p)
        p.set_defaults(func=cmd_gb)

    p = sub.add_parser("member", help="ideal membership")
    p.add_argument("poly")
    p.add_argument("ideal")
    _ring_args(p)
    _out_args(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("equal", help="ideal equality")
    p.add_argument("ideal")
    p.add_argument("other")
    _ring_args(p)
    _out_args(p)
    p.set_defaults(func=cmd_equal)

    for name in ("sum", "intersect", "colon"):
        p = sub.add_parser(name, help=f"ideal {name}")
        p.add_argument("ideal")
        p.add_argument("other")
        _ring_args(p)
        _out_args(p)
        p.set_defaults(func=cmd_binary)

    p = sub.add_parser("hilbert", help="h-vector, dimension, height, multiplicity")
    p.add_argument("ideal")
    _ring_args(p)
    _out_args(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("knutson-closure", help="compute the family generated by (f)")
    p.add_argument("--seed", required=True)
    p.add_argument("--witnesses", default="default",
                   help="comma list of pool sources: members, vars, default, none")
    p.add_argument("--witness", action="append", help="extra witness polynomial(s) or @file")
    p.add_argument("--max-iterations", type=int, default=1000)
    p.add_argument("--max-members", type=int, default=10_000)
    _ring_args(p)
    _out_args(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("hankel", help="Hankel determinantal ideals")
    hsub = p.add_subparsers(dest="sub", required=True)
    v = hsub.add_parser("verify", help="membership, decompositions and invariants")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--shape", choices=("square", "rect"), default="square")
    v.add_argument("--char", type=int, default=0)
    v.add_argument("--order", default="lex")
    v.add_argument("--limit", type=int, default=4, help="desk-scale guard on m")
    _out_args(v)
    v.set_defaults(func=cmd_hankel_verify)

    p = sub.add_parser("modp", help="reduction modulo primes")
    msub = p.add_subparsers(dest="sub", required=True)
    for name in ("compare", "scan"):
        q = msub.add_parser(name)
        q.add_argument("--ideal", required=True, help="generators, or a file")
        if name == "compare":
            q.add_argument("--primes", required=True, help="comma separated primes")
        else:
            q.add_argument("--upto", type=int, default=200)
        q.add_argument("--expect-bad", help="exit 1 unless exactly these primes are bad")
        q.add_argument("--vars", type=int, default=0)
        q.add_argument("--names", default="")
        q.add_argument("--order", default="lex")
        _out_args(q)
        q.set_defaults(func=cmd_modp)

    p = sub.add_parser("suite", help="run a reproduction suite")
    p.add_argument("name", choices=SUITES)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--char", dest="chars", help="comma list of characteristics, e.g. 0,101")
    p.add_argument("--limit", type=int, help="desk-scale guard")
    p.add_argument("--upto", type=int, help="largest prime scanned (modp)")
    p.add_argument("--p", type=int, help="prime for the family comparison (modp)")
    p.add_argument("--timings", action="store_true", help="include wall time in the report")
    _out_args(p)
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ClosureCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        if getattr(args, "out", None) and exc.family is not None:
            partial = family_report(exc.family, certify=False)
            partial["error"] = str(exc)
            _emit(args, partial, [])
        return EXIT_CAP
    except (UsageError, KnutsonError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
