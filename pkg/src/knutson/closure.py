"""Fixpoint computation of the Knutson family C_f.

Starting from ``(f)``, the family is closed under pairwise sums,
intersections and colons ``I : (c)`` for witnesses ``c`` from a finite
pool.  For radical members every minimal prime is such a colon for a
suitable witness, so a rich enough pool reaches the whole family; the
engine cannot certify that a given pool is rich enough.

Members are deduplicated by their reduced Groebner basis and every
insertion asserts that the initial ideal is squarefree.  Work is done in
rounds: each round handles every pair and every (member, witness)
combination not seen before, in a fixed order, so the result and its
provenance do not depend on anything but the inputs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .errors import ClosureCapExceeded, SeedRejected, SquarefreeViolation
from .groebner import Ideal, is_union_groebner
from .ideal_ops import ideal_intersect, ideal_sum, minimal_prime_by_witness
from .monomial import MonomialIdeal, hilbert_summary, monomial_intersect
from .orders import TermOrder
from .polynomial import LeadingTerm, Polynomial, format_monomial, is_squarefree_monomial

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessPolicy:
    member_generators: bool = True
    single_variables: bool = True
    extra: tuple = ()
    max_iterations: int = 1000
    max_members: int = 10_000

    def __post_init__(self):
        if self.max_iterations < 1 or self.max_members < 1:
            raise ValueError("caps must be positive")

    def describe(self) -> dict:
        return {
            "member_generators": self.member_generators,
            "single_variables": self.single_variables,
            "extra": [str(c) for c in self.extra],
            "max_iterations": self.max_iterations,
            "max_members": self.max_members,
        }


@dataclass(frozen=True)
class Provenance:
    operation: str  # seed | sum | intersect | colon
    parents: tuple = ()
    witness: Optional[Polynomial] = None

    def to_json(self) -> dict:
        out = {"operation": self.operation, "parents": list(self.parents)}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        return out


@dataclass
class Member:
    index: int
    ideal: Ideal
    key: tuple
    provenance: Provenance

    @property
    def basis(self):
        return self.ideal.groebner()

    @property
    def initial(self) -> MonomialIdeal:
        return self.ideal.initial_ideal()

    def is_unit(self) -> bool:
        return self.basis.is_unit()


@dataclass
class KnutsonFamily:
    seed: Polynomial
    order: TermOrder
    policy: WitnessPolicy
    members: list = field(default_factory=list)
    by_key: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    sums: dict = field(default_factory=dict)
    intersections: dict = field(default_factory=dict)
    colons: dict = field(default_factory=dict)
    stats: dict = field(default_factory=lambda: {"iterations": 0, "peak_candidates": 0,
                                                  "member_counts": []})
    complete: bool = False

    @property
    def ring(self):
        return self.seed.ring

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def keys(self) -> set:
        return set(self.by_key)

    def find(self, I: Ideal) -> Optional[Member]:
        return self.by_key.get(I.key(self.order))

    def _insert(self, ideal: Ideal, prov: Provenance) -> tuple:
        """Returns (member, is_new)."""
        key = ideal.key(self.order)
        hit = self.by_key.get(key)
        if hit is not None:
            return hit, False
        init = ideal.initial_ideal(self.order)
        if not init.is_squarefree():
            raise SquarefreeViolation(
                f"member {ideal} has non-squarefree initial ideal {init}")
        if len(self.members) >= self.policy.max_members:
            raise ClosureCapExceeded(f"more than {self.policy.max_members} members", self)
        m = Member(len(self.members), ideal, key, prov)
        self.members.append(m)
        self.by_key[key] = m
        return m, True


def _witness_key(c: Polynomial) -> tuple:
    return c.monic().terms


def seed_check(f: Polynomial, order: Optional[TermOrder] = None) -> LeadingTerm:
    lt = f.leading_term(order)
    if not is_squarefree_monomial(lt.monomial):
        raise SeedRejected(format_monomial(lt.monomial, f.ring.names))
    return lt


def closure(f: Polynomial, policy: Optional[WitnessPolicy] = None,
            order: Optional[TermOrder] = None) -> KnutsonFamily:
    """Compute the family generated by ``(f)`` under sum, intersection and
    colon by witnesses from ``policy``."""
    policy = policy or WitnessPolicy()
    order = order or f.ring.order
    ring = f.ring.with_order(order)
    f = f.in_ring(ring)
    seed_check(f)
    family = KnutsonFamily(f, order, policy)
    family._insert(Ideal([f], ring), Provenance("seed"))
    _run(family)
    return family


def extend_closure(family: KnutsonFamily) -> KnutsonFamily:
    """Continue a (possibly partial) family to its fixpoint in place."""
    _run(family)
    return family


def _refresh_pool(family: KnutsonFamily, seen: set):
    ring = family.ring
    pol = family.policy
    candidates = []
    if pol.single_variables:
        candidates.extend(ring.gens())
    candidates.extend(c.in_ring(ring) for c in pol.extra)
    if pol.member_generators:
        for m in family.members:
            candidates.extend(m.basis.basis)
    added = 0
    for c in candidates:
        if c.is_zero():
            continue
        k = _witness_key(c)
        if k not in seen:
            seen.add(k)
            family.witnesses.append(c.monic())
            added += 1
    return added


def _run(family: KnutsonFamily):
    pol = family.policy
    seen = {_witness_key(c) for c in family.witnesses}
    _refresh_pool(family, seen)
    while True:
        if family.stats["iterations"] >= pol.max_iterations:
            raise ClosureCapExceeded(f"more than {pol.max_iterations} iterations", family)
        family.stats["iterations"] += 1
        nmem = len(family.members)
        nwit = len(family.witnesses)
        pair_jobs = [(i, j) for j in range(nmem) for i in range(j)
                     if (i, j) not in family.sums]
        colon_jobs = [(i, w) for i in range(nmem) for w in range(nwit)
                      if (i, w) not in family.colons]
        ncand = 2 * len(pair_jobs) + len(colon_jobs)
        family.stats["peak_candidates"] = max(family.stats["peak_candidates"], ncand)
        before = len(family.members)
        for i, j in pair_jobs:
            _pair(family, i, j)
        for i, w in colon_jobs:
            _colon(family, i, w)
        grown = len(family.members) > before
        new_wit = _refresh_pool(family, seen)
        family.stats["member_counts"].append(len(family.members))
        log.info("round %d: %d members, %d witnesses, %d candidates",
                 family.stats["iterations"], len(family.members), len(family.witnesses), ncand)
        if not grown and not new_wit:
            family.complete = True
            return


def _pair(family: KnutsonFamily, i: int, j: int):
    a, b = family.members[i], family.members[j]
    s, _ = family._insert(ideal_sum(a.ideal, b.ideal), Provenance("sum", (i, j)))
    family.sums[(i, j)] = s.index
    x, _ = family._insert(ideal_intersect(a.ideal, b.ideal, family.order),
                          Provenance("intersect", (i, j)))
    family.intersections[(i, j)] = x.index


def _colon(family: KnutsonFamily, i: int, w: int):
    c = family.witnesses[w]
    r, _ = family._insert(minimal_prime_by_witness(family.members[i].ideal, c, family.order),
                          Provenance("colon", (i,), c))
    family.colons[(i, w)] = r.index


def family_contains(family: KnutsonFamily, I: Ideal):
    """Membership by canonical key plus the derivation back to the seed.

    Returns ``(found, chain)`` where ``chain`` lists ``(index, provenance)``
    for every member needed to derive I, seed first.
    """
    m = family.find(I)
    if m is None:
        return False, []
    needed, stack = set(), [m.index]
    while stack:
        k = stack.pop()
        if k in needed:
            continue
        needed.add(k)
        stack.extend(family.members[k].provenance.parents)
    return True, [(k, family.members[k].provenance) for k in sorted(needed)]


def certify_family(family: KnutsonFamily) -> dict:
    """Re-check the structural properties of a computed family.

    Every member: squarefree initial ideal.  Every pair: the union of the
    reduced bases is a Groebner basis, the initial ideal of the
    intersection is the intersection of the initial ideals and the initial
    ideal of the sum is the sum of the initial ideals.  Distinct members
    have distinct initial ideals.
    """
    order = family.order
    members = family.members
    violations = []
    inits = [m.initial for m in members]
    for m, init in zip(members, inits):
        if not init.is_squarefree():
            violations.append({"check": "squarefree_initial", "members": [m.index]})
    seen: dict = {}
    for m, init in zip(members, inits):
        if init in seen:
            violations.append({"check": "distinct_initials", "members": [seen[init], m.index]})
        seen.setdefault(init, m.index)
    npairs = 0
    for j in range(len(members)):
        for i in range(j):
            npairs += 1
            a, b = members[i], members[j]
            if not is_union_groebner(a.ideal, b.ideal, order):
                violations.append({"check": "union_groebner", "members": [i, j]})
            k = family.intersections.get((i, j))
            inter = members[k].ideal if k is not None else ideal_intersect(a.ideal, b.ideal, order)
            if inter.initial_ideal(order) != monomial_intersect(inits[i], inits[j]):
                violations.append({"check": "initial_of_intersection", "members": [i, j]})
            k = family.sums.get((i, j))
            summ = members[k].ideal if k is not None else ideal_sum(a.ideal, b.ideal)
            if summ.initial_ideal(order) != inits[i] + inits[j]:
                violations.append({"check": "initial_of_sum", "members": [i, j]})
    return {
        "members": len(members),
        "pairs": npairs,
        "passed": not violations,
        "violations": violations,
    }


def member_report(family: KnutsonFamily, m: Member) -> dict:
    names = family.ring.names
    return {
        "index": m.index,
        "key": "; ".join(m.basis.format()),
        "generators": m.basis.format(),
        "initial_ideal": m.initial.format(names),
        "hilbert_summary": hilbert_summary(m.initial).to_json(),
        "unit": m.is_unit(),
        "provenance": m.provenance.to_json(),
    }


def family_report(family: KnutsonFamily, certify: bool = True) -> dict:
    out = {
        "seed": str(family.seed),
        "ring": str(family.ring),
        "order": family.order.spec(),
        "policy": family.policy.describe(),
        "members": [member_report(family, m) for m in family.members],
        "stats": {
            "iterations": family.stats["iterations"],
            "peak_candidates": family.stats["peak_candidates"],
            "member_counts": list(family.stats["member_counts"]),
            "witnesses": len(family.witnesses),
        },
        "complete": family.complete,
    }
    if certify:
        out["checks"] = certify_family(family)
    return out
