"""Scripted reproduction suites.

Each suite returns a report whose ``checks`` list entries carry a short
anchor naming the property being checked, the expected value and the
actual value.  A suite passes when every check passes.
"""

from __future__ import annotations

import time
from math import prod
from typing import Optional

from .closure import WitnessPolicy, certify_family, closure, family_report
from .errors import ClosureCapExceeded, KnutsonError
from .field import field_from_characteristic, primes_upto
from .groebner import Ideal
from .ideal_ops import ideal_sum
from .hankel import (
    HankelSpec,
    default_ring,
    hankel_policy,
    minor_ideal,
    seed_polynomial,
    submatrices,
    verify_independence_of_m,
    verify_primary_dec,
    verify_theorem_membership,
)
from .monomial import (
    hilbert_summary,
    squarefree_monomial_ideals,
    theoretical_hankel_height,
    theoretical_hankel_hvector,
)
from .modp import knutson_family_mod_p, prime_scan, scan_summary
from .polynomial import PolyRing

SUITES = ("hankel-square", "hankel-rect", "modp", "squarefree-monomial")
DEFAULT_LIMITS = {"hankel": 4, "monomial": 4}


class SuiteRefused(KnutsonError, ValueError):
    """Parameters outside the desk-scale guard or otherwise invalid."""


class _Report:
    def __init__(self, suite: str, params: dict):
        self.suite = suite
        self.params = params
        self.checks: list = []
        self.extra: dict = {}

    def check(self, name: str, anchor: str, expected, actual):
        self.checks.append({"check": name, "anchor": anchor, "expected": expected,
                            "actual": actual, "passed": expected == actual})

    def absorb(self, checks: list, prefix: str = ""):
        for c in checks:
            self.checks.append(dict(c, check=prefix + c["check"]))

    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "params": self.params, "passed": self.passed(),
               "checks": self.checks}
        out.update(self.extra)
        return out


def _certify_checks(rep: _Report, family, label: str):
    cert = certify_family(family)
    by_kind: dict = {}
    for v in cert["violations"]:
        by_kind.setdefault(v["check"], []).append(v["members"])
    for kind, anchor in (("squarefree_initial", "squarefree-initial"),
                         ("union_groebner", "groebner-union"),
                         ("initial_of_intersection", "lt-distributivity"),
                         ("initial_of_sum", "lt-distributivity"),
                         ("distinct_initials", "distinct-initials")):
        rep.check(f"{label}: {kind} violations", anchor, [], by_kind.get(kind, []))
    return cert


def _invariant_checks(rep: _Report, spec: HankelSpec, ring: PolyRing, label: str):
    subs = submatrices(spec)
    hs = {}
    for role, sub in subs.items():
        for t in range(1, sub.max_minor + 1):
            summ = hilbert_summary(minor_ideal(sub, t, ring).initial_ideal())
            hs[(role, t)] = summ.h
            rep.check(f"{label}: height I_{t}({role})", "height-formula",
                      theoretical_hankel_height(t, sub.nvars), summ.height)
            exp = theoretical_hankel_hvector(t, sub.nvars - t + 1)
            rep.check(f"{label}: h-vector I_{t}({role})", "hankel-hvector",
                      list(exp.entries), list(summ.h))
            rep.check(f"{label}: multiplicity I_{t}({role})", "hankel-multiplicity",
                      exp.multiplicity(), summ.multiplicity)
    # P1 lives in one variable less than X
    for t in range(1, subs["P1"].max_minor + 1):
        if ("X", t) not in hs or subs["P1"].nvars != subs["X"].nvars - 1:
            continue
        hx, hp = hs[("X", t)], hs[("P1", t)]
        diff = [hx[i] - (hx[i - 1] if i else 0) for i in range(len(hx))]
        rep.check(f"{label}: h(I_{t}(P1)) = h_i - h_i-1 of I_{t}(X), i < {t}",
                  "hankel-hvector", diff, list(hp))


def _hankel_suite(rep: _Report, shape: str, m: int, char: int, policy_caps: dict):
    spec = HankelSpec.of_shape(m, shape)
    ring = default_ring(spec, field_from_characteristic(char))
    label = f"{shape} m={m} char={char}"
    f = seed_polynomial(spec, ring)
    lt = f.leading_term().monomial
    rep.check(f"{label}: lt(f) is the product of all variables", "seed-leading-term",
              [1] * spec.n, list(lt))
    family = closure(f, hankel_policy(spec, ring, **policy_caps))
    rep.check(f"{label}: closure reached a fixpoint", "closure-fixpoint", True, family.complete)
    _certify_checks(rep, family, label)
    mem = verify_theorem_membership(spec, ring, family=family)
    rep.absorb(mem["checks"], f"{label}: ")
    if "comparison" in mem:
        rep.extra.setdefault("comparisons", {})[label] = mem["comparison"]
    if shape == "square":
        for t in range(2, m + 1):
            dec = verify_primary_dec(spec, t, ring)
            rep.absorb(dec["checks"], f"{label} t={t}: ")
        top = ideal_sum(minor_ideal(spec, m, ring),
                        minor_ideal(submatrices(spec)["Q"], m - 1, ring))
        e = hilbert_summary(top.initial_ideal()).multiplicity
        rep.check(f"{label}: e(I_m(X)+I_m-1(Q)) = m(m-1)", "multiplicity-of-sum", m * (m - 1), e)
    _invariant_checks(rep, spec, ring, label)
    for t in range(1, spec.max_minor + 1):
        for m2 in range(t, spec.n + 2 - t):
            if m2 != m:
                rep.check(f"{label}: I_{t}(X_{m}) = I_{t}(X_{m2}) in {spec.n} variables",
                          "minor-ideal-independence", True,
                          verify_independence_of_m(t, spec.n, m, m2, ring))
    rep.extra.setdefault("families", {})[label] = family_report(family, certify=False)
    return family


def _guard(value: int, limit: int, what: str):
    if value < 1:
        raise SuiteRefused(f"{what} must be positive")
    if value > limit:
        raise SuiteRefused(f"{what}={value} exceeds the desk-scale limit {limit}; "
                           f"raise it with --limit if you mean it")


def run_suite(name: str, params: Optional[dict] = None) -> tuple:
    """Run a suite and return ``(exit_code, report)``.

    Exit code 0 when every check passes, 1 on any failed check, 3 when a
    closure cap was hit.  Invalid parameters raise SuiteRefused.
    """
    params = dict(params or {})
    if name not in SUITES:
        raise SuiteRefused(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    timings = params.pop("timings", False)
    caps = {k: params.pop(k) for k in ("max_iterations", "max_members") if k in params}
    start = time.perf_counter()
    rep = _Report(name, dict(params))
    try:
        if name in ("hankel-square", "hankel-rect"):
            m = int(params.get("m", 2))
            _guard(m, int(params.get("limit", DEFAULT_LIMITS["hankel"])), "m")
            if name == "hankel-square" and m < 2:
                raise SuiteRefused("square suite needs m >= 2")
            chars = params.get("chars", [params.get("char", 0)])
            for char in chars:
                _hankel_suite(rep, "square" if name == "hankel-square" else "rect", m,
                              int(char), caps)
        elif name == "modp":
            _modp_suite(rep, params, caps)
        else:
            n = int(params.get("n", 3))
            _guard(n, int(params.get("limit", DEFAULT_LIMITS["monomial"])), "n")
            _monomial_suite(rep, n, caps)
    except ClosureCapExceeded as exc:
        rep.extra["error"] = str(exc)
        rep.check("closure within caps", "closure-caps", True, False)
        out = rep.to_json()
        if timings:
            out["seconds"] = round(time.perf_counter() - start, 3)
        return 3, out
    out = rep.to_json()
    if timings:
        out["seconds"] = round(time.perf_counter() - start, 3)
    return (0 if rep.passed() else 1), out


def _modp_suite(rep: _Report, params: dict, caps: dict):
    upto = int(params.get("upto", 101))
    toy_upto = int(params.get("toy_upto", 50))
    ring = PolyRing(2)
    toy = Ideal([ring("2*x1 - x2")], ring)
    summ = scan_summary(prime_scan(toy, primes_upto(toy_upto)))
    rep.check(f"(2*x1 - x2): mismatching primes up to {toy_upto}", "reduction-mod-p",
              [2], summ["bad_primes"])
    rep.extra["toy_scan"] = summ
    p_family = int(params.get("p", 101))
    cases = params.get("cases", [("square", 2), ("square", 3), ("rect", 2)])
    primes = primes_upto(upto)
    for shape, m in cases:
        spec = HankelSpec.of_shape(m, shape)
        r = default_ring(spec)
        policy = hankel_policy(spec, r, **caps)
        f = seed_polynomial(spec, r)
        family = closure(f, policy)
        bad = {}
        for mem in family:
            s = scan_summary(prime_scan(mem.ideal, primes))
            if s["bad_primes"]:
                bad[mem.index] = s["bad_primes"]
        label = f"{shape} m={m}"
        rep.check(f"{label}: members with a bad prime up to {upto}", "reduction-mod-p", {}, bad)
        fp = knutson_family_mod_p(f, p_family, policy)
        rep.check(f"{label}: member count over GF({p_family}) equals count over QQ",
                  "family-mod-p", len(family), len(fp))


def _monomial_suite(rep: _Report, n: int, caps: dict):
    ring = PolyRing(n)
    f = prod(ring.gens(), start=ring.one())
    family = closure(f, WitnessPolicy(**caps))
    oracle = set(squarefree_monomial_ideals(n))
    computed = {m.initial for m in family}
    rep.check(f"n={n}: member count", "squarefree-monomial-family", len(oracle), len(family))
    rep.check(f"n={n}: members equal the nonzero squarefree monomial ideals",
              "squarefree-monomial-family", True, computed == oracle)
    rep.check(f"n={n}: every member is monomial", "squarefree-monomial-family", True,
              all(all(len(g.terms) == 1 for g in m.basis) for m in family))
    _certify_checks(rep, family, f"n={n}")
