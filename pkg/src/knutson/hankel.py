"""Generic Hankel matrices, their minors and the determinantal ideals built
from them, plus verification routines for the Knutson family of the
Hankel seed polynomial.

``X_m^{(l,n)}`` is the Hankel matrix with ``m`` rows whose (i, j) entry
(1-based) is ``x_{l+i+j-2}``; it has ``n - m - l + 2`` columns.  Matrices
are built inside a fixed ambient ring (by default ``K[x1..xn]`` for the
largest matrix of a suite) so that minors of submatrices can be compared
directly.

The determinantal ideals of generic Hankel matrices are prime; that fact
is assumed here, not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .closure import WitnessPolicy, closure, family_contains
from .errors import OrderNotDiagonal
from .field import QQ, Field
from .groebner import Ideal, ideal_equal
from .ideal_ops import ideal_intersect, ideal_sum
from .monomial import (
    hilbert_summary,
    sum_hvector_from_parts,
    theoretical_hankel_height,
    theoretical_hankel_hvector,
)
from .orders import LEX, TermOrder
from .polynomial import Polynomial, PolyRing, mono_mul

ROLES = ("X", "P1", "P2", "Q")


@dataclass(frozen=True)
class HankelSpec:
    m: int
    l: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.l < 1:
            raise ValueError(f"invalid Hankel spec {self}")
        if self.m > 0 and self.cols < 1:
            raise ValueError(f"Hankel spec {self} has no columns")

    @property
    def cols(self) -> int:
        return self.n - self.m - self.l + 2

    @property
    def rows(self) -> int:
        return self.m

    @property
    def nvars(self) -> int:
        """Number of distinct variables appearing in the matrix."""
        return self.n - self.l + 1

    @property
    def max_minor(self) -> int:
        return min(self.rows, self.cols) if self.m else 0

    @property
    def shape(self) -> Optional[str]:
        if self.l != 1:
            return None
        if self.n == 2 * self.m - 1:
            return "square"
        if self.n == 2 * self.m:
            return "rect"
        return None

    @classmethod
    def square(cls, m: int) -> "HankelSpec":
        return cls(m, 1, 2 * m - 1)

    @classmethod
    def rect(cls, m: int) -> "HankelSpec":
        return cls(m, 1, 2 * m)

    @classmethod
    def of_shape(cls, m: int, shape: str) -> "HankelSpec":
        if shape not in ("square", "rect"):
            raise ValueError(f"unknown shape {shape!r}")
        return cls.square(m) if shape == "square" else cls.rect(m)

    def label(self) -> str:
        return f"X_{self.m}^({self.l},{self.n})"


def default_ring(spec: HankelSpec, field: Field = QQ, order: TermOrder = LEX) -> PolyRing:
    return PolyRing(spec.n, field, order)


def build_matrix(spec: HankelSpec, ring: Optional[PolyRing] = None) -> list:
    ring = ring or default_ring(spec)
    if spec.n > ring.nvars:
        raise ValueError(f"{spec.label()} needs {spec.n} variables, ring has {ring.nvars}")
    return [[ring.var(spec.l + i + j - 1) for j in range(spec.cols)]
            for i in range(spec.rows)]


def determinant(matrix: list) -> Polynomial:
    """Laplace expansion along rows, memoized over the set of used columns."""
    k = len(matrix)
    if k == 0:
        raise ValueError("empty matrix has no ring; use minor_ideal for t = 0")
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")

    @lru_cache(maxsize=None)
    def rec(row: int, cols: tuple) -> Polynomial:
        # rows row..k-1 against the columns in ``cols``
        if row == k - 1:
            return matrix[row][cols[0]]
        total = None
        for pos, c in enumerate(cols):
            a = matrix[row][c]
            if a.is_zero():
                continue
            term = a * rec(row + 1, cols[:pos] + cols[pos + 1:])
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        return total if total is not None else matrix[0][0].ring.zero()

    return rec(0, tuple(range(k)))


def _diagonal_lead(sub: list, det: Polynomial):
    ring = det.ring
    diag = (0,) * ring.nvars
    for i in range(len(sub)):
        diag = mono_mul(diag, sub[i][i].leading_monomial())
    lt = det.leading_term()
    if lt.monomial != diag or lt.coefficient != 1:
        raise OrderNotDiagonal(
            f"leading term of minor {det} is not the diagonal product under {ring.order}")


def minors(matrix: list, t: int, check_diagonal: bool = True) -> list:
    """All distinct nonzero t x t minors, in row/column subset order."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if not 1 <= t <= min(rows, cols):
        raise ValueError(f"t={t} out of range for a {rows}x{cols} matrix")
    out, seen = [], set()
    for R in combinations(range(rows), t):
        for C in combinations(range(cols), t):
            sub = [[matrix[i][j] for j in C] for i in R]
            det = determinant(sub)
            if det.is_zero():
                continue
            if check_diagonal:
                _diagonal_lead(sub, det)
            if det not in seen:
                seen.add(det)
                out.append(det)
    return out


def minor_ideal(spec: HankelSpec, t: int, ring: Optional[PolyRing] = None) -> Ideal:
    """I_t of the Hankel matrix; t = 0 gives the unit ideal."""
    ring = ring or default_ring(spec)
    if t == 0:
        return Ideal.unit(ring)
    if not 1 <= t <= spec.max_minor:
        raise ValueError(f"t={t} out of range for {spec.label()}")
    return Ideal(minors(build_matrix(spec, ring), t), ring)


def submatrices(spec: HankelSpec) -> dict:
    """Specs of X, P1, P2, Q for a square or almost-square Hankel matrix."""
    m, l, n = spec.m, spec.l, spec.n
    shape = spec.shape
    if shape == "square":
        return {"X": spec, "P1": HankelSpec(m - 1, l, n - 1),
                "P2": HankelSpec(m, l + 1, n), "Q": HankelSpec(m - 1, l + 1, n - 1)}
    if shape == "rect":
        return {"X": spec, "P1": HankelSpec(m, l, n - 1),
                "P2": HankelSpec(m, l + 1, n), "Q": HankelSpec(m, l + 1, n - 1)}
    raise ValueError(f"{spec.label()} is neither square nor m x (m+1)")


def _det_of(spec: HankelSpec, ring: PolyRing) -> Polynomial:
    if spec.m == 0:
        return ring.one()
    return determinant(build_matrix(spec, ring))


def seed_polynomial(spec: HankelSpec, ring: Optional[PolyRing] = None) -> Polynomial:
    """det X * det Q (square) or det P1 * det P2 (m x (m+1))."""
    ring = ring or default_ring(spec)
    subs = submatrices(spec)
    if spec.shape == "square":
        f = _det_of(subs["X"], ring) * _det_of(subs["Q"], ring)
    else:
        f = _det_of(subs["P1"], ring) * _det_of(subs["P2"], ring)
    expected = tuple(1 if spec.l <= i + 1 <= spec.n else 0 for i in range(ring.nvars))
    lt = f.leading_term()
    if lt.monomial != expected or lt.coefficient != 1:
        raise OrderNotDiagonal(f"seed {f} does not lead with x{spec.l}..x{spec.n} "
                               f"under {ring.order}")
    return f


def all_minor_witnesses(spec: HankelSpec, ring: Optional[PolyRing] = None) -> tuple:
    """Every t-minor (t >= 2) of X, P1, P2, Q, made monic, without repeats."""
    ring = ring or default_ring(spec)
    out, seen = [], set()
    for role, sub in submatrices(spec).items():
        if sub.m == 0:
            continue
        mat = build_matrix(sub, ring)
        for t in range(2, sub.max_minor + 1):
            for d in minors(mat, t):
                d = d.monic()
                if d not in seen:
                    seen.add(d)
                    out.append(d)
    return tuple(out)


def hankel_policy(spec: HankelSpec, ring: Optional[PolyRing] = None, **caps) -> WitnessPolicy:
    """Default pool (variables and member generators) plus all minors."""
    return WitnessPolicy(extra=all_minor_witnesses(spec, ring), **caps)


# -- identities ------------------------------------------------------------


def verify_independence_of_m(t: int, n: int, m1: int, m2: int,
                             ring: Optional[PolyRing] = None) -> bool:
    """I_t(X_{m1}^{(1,n)}) == I_t(X_{m2}^{(1,n)})."""
    for m in (m1, m2):
        if not t <= m <= n + 1 - t:
            raise ValueError(f"need t <= m <= n + 1 - t, got t={t}, m={m}, n={n}")
    ring = ring or PolyRing(n)
    a = minor_ideal(HankelSpec(m1, 1, n), t, ring)
    b = minor_ideal(HankelSpec(m2, 1, n), t, ring)
    return ideal_equal(a, b)


def role_ideal(spec: HankelSpec, role: str, t: int, ring: PolyRing) -> Ideal:
    sub = submatrices(spec)[role]
    if t > sub.max_minor:
        return Ideal([], ring)
    return minor_ideal(sub, t, ring)


def expected_invariants(sub: HankelSpec, t: int) -> dict:
    """Height and h-vector of I_t(sub) predicted by the closed forms."""
    if t == 0:
        return {"height": None, "h_vector": [], "multiplicity": 0}
    s = sub.nvars - t + 1
    h = theoretical_hankel_hvector(t, s)
    return {"height": theoretical_hankel_height(t, sub.nvars),
            "h_vector": list(h.entries), "multiplicity": h.multiplicity()}


def _summary(I: Ideal):
    return hilbert_summary(I.initial_ideal())


def _check(checks: list, name: str, anchor: str, expected, actual):
    checks.append({"check": name, "anchor": anchor, "expected": expected,
                   "actual": actual, "passed": expected == actual})


def verify_primary_dec(spec: HankelSpec, t: int, ring: Optional[PolyRing] = None) -> dict:
    """Check the two decompositions at level t (2 <= t <= m) of a square matrix:

        I_t(X) + I_{t-1}(Q)         = I_{t-1}(P1) cap I_{t-1}(P2)
        I_{t-1}(P1) + I_{t-1}(P2)   = I_{t-1}(X)  cap I_{t-2}(Q)

    together with heights and multiplicities of the six ideals involved
    and the equality of multiplicities of each sum and its decomposition.
    """
    if spec.shape != "square":
        raise ValueError("decompositions are stated for square matrices")
    if not 2 <= t <= spec.m:
        raise ValueError(f"need 2 <= t <= m, got t={t}")
    ring = ring or default_ring(spec)
    subs = submatrices(spec)
    parts = {
        "I_t(X)": ("X", t), "I_t-1(Q)": ("Q", t - 1),
        "I_t-1(P1)": ("P1", t - 1), "I_t-1(P2)": ("P2", t - 1),
        "I_t-1(X)": ("X", t - 1), "I_t-2(Q)": ("Q", t - 2),
    }
    ideals = {k: minor_ideal(subs[r], s, ring) for k, (r, s) in parts.items()}
    checks: list = []
    lhs1 = ideal_sum(ideals["I_t(X)"], ideals["I_t-1(Q)"])
    rhs1 = ideal_intersect(ideals["I_t-1(P1)"], ideals["I_t-1(P2)"])
    lhs2 = ideal_sum(ideals["I_t-1(P1)"], ideals["I_t-1(P2)"])
    rhs2 = ideal_intersect(ideals["I_t-1(X)"], ideals["I_t-2(Q)"])
    _check(checks, "I_t(X)+I_t-1(Q) == I_t-1(P1) cap I_t-1(P2)", "primary-decomposition-1",
           True, ideal_equal(lhs1, rhs1))
    _check(checks, "I_t-1(P1)+I_t-1(P2) == I_t-1(X) cap I_t-2(Q)", "primary-decomposition-2",
           True, ideal_equal(lhs2, rhs2))
    info = {}
    for k, (r, s) in parts.items():
        summ = _summary(ideals[k])
        exp = expected_invariants(subs[r], s)
        info[k] = summ.to_json()
        _check(checks, f"height {k}", "height-formula", exp["height"], summ.height)
        _check(checks, f"multiplicity {k}", "hankel-multiplicity",
               exp["multiplicity"], summ.multiplicity)
    e = {k: info[k]["multiplicity"] for k in info}
    s1, s2 = _summary(lhs1), _summary(lhs2)
    info["sum1"], info["sum2"] = s1.to_json(), s2.to_json()
    _check(checks, "e(I_t(X)+I_t-1(Q)) == e(I_t-1(P1)) + e(I_t-1(P2))", "multiplicity-of-sum",
           e["I_t-1(P1)"] + e["I_t-1(P2)"], s1.multiplicity)
    _check(checks, "e(I_t(X)+I_t-1(Q)) == 2 e(I_t-1(P1))", "multiplicity-of-sum",
           2 * e["I_t-1(P1)"], s1.multiplicity)
    _check(checks, "e(I_t-1(P1)+I_t-1(P2)) == e(I_t-1(X)) + e(I_t-2(Q))", "multiplicity-of-sum",
           e["I_t-1(X)"] + e["I_t-2(Q)"], s2.multiplicity)
    h_p1 = _summary(ideals["I_t-1(P1)"]).h
    _check(checks, "h(I_t-1(P1)+I_t-1(P2)) from partial sums", "sum-hvector",
           list(sum_hvector_from_parts(h_p1, "P1P2")), list(s2.h))
    h_x = _summary(ideals["I_t(X)"]).h
    _check(checks, "h(I_t(X)+I_t-1(Q)) from partial sums", "sum-hvector",
           list(sum_hvector_from_parts(h_x, "XQ")), list(s1.h))
    _check(checks, "h(I_t-1(P1)+I_t-1(P2)) palindromic", "sum-hvector", True,
           s2.h_vector.is_palindromic())
    _check(checks, "h(I_t(X)+I_t-1(Q)) palindromic", "sum-hvector", True,
           s1.h_vector.is_palindromic())
    return {"spec": spec.label(), "t": t, "ideals": info, "checks": checks,
            "assumption": "determinantal ideals of generic Hankel matrices are prime",
            "passed": all(c["passed"] for c in checks)}


def theorem_family_shapes(spec: HankelSpec, ring: Optional[PolyRing] = None) -> dict:
    """Label -> ideal for every nonzero ideal of the listed shapes

        I_t(P1), I_t(P2), I_t(X), I_t(Q),
        I_t(X) + I_{t-1}(Q), I_{t-1}(P1) + I_{t-1}(P2)   (t - 1 >= 1).
    """
    ring = ring or default_ring(spec)
    subs = submatrices(spec)
    out = {}
    for role in ("P1", "P2", "X", "Q"):
        for t in range(1, subs[role].max_minor + 1):
            out[f"I_{t}({role})"] = minor_ideal(subs[role], t, ring)
    for t in range(2, spec.m + 1):
        a = role_ideal(spec, "X", t, ring)
        b = role_ideal(spec, "Q", t - 1, ring)
        if not (a.is_zero() and b.is_zero()):
            out[f"I_{t}(X)+I_{t-1}(Q)"] = ideal_sum(a, b)
        a = role_ideal(spec, "P1", t - 1, ring)
        b = role_ideal(spec, "P2", t - 1, ring)
        if not (a.is_zero() and b.is_zero()):
            out[f"I_{t-1}(P1)+I_{t-1}(P2)"] = ideal_sum(a, b)
    return out


def compare_with_listed(family, listed: dict) -> dict:
    """Set comparison of a computed family with the listed shapes.

    (f) and the unit ideal are boundary members: they may appear in the
    family without matching a listed shape.
    """
    order = family.order
    listed_keys: dict = {}
    for label, I in listed.items():
        listed_keys.setdefault(I.key(order), []).append(label)
    computed = {m.key: m for m in family.members}
    seed_key = family.members[0].key
    unit_key = Ideal.unit(family.ring).key(order)
    missing = sorted(lbl for k, lbls in listed_keys.items() if k not in computed for lbl in lbls)
    extra = [m for k, m in computed.items() if k not in listed_keys]
    boundary = [m.index for m in extra if m.key in (seed_key, unit_key)]
    unexpected = [m.index for m in extra if m.key not in (seed_key, unit_key)]
    return {
        "listed": len(listed_keys),
        "computed": len(computed),
        "missing_from_family": missing,
        "boundary_members": [{"index": i, "generators": family.members[i].basis.format(),
                              "role": "seed" if family.members[i].key == seed_key else "unit"}
                             for i in boundary],
        "unexpected_members": [{"index": i, "generators": family.members[i].basis.format()}
                               for i in unexpected],
        "matches_up_to_boundary": not missing and not unexpected,
    }


def verify_theorem_membership(spec: HankelSpec, ring: Optional[PolyRing] = None,
                              policy: Optional[WitnessPolicy] = None, family=None) -> dict:
    """Run the closure from the seed and check that I_t(M) is a member for
    every role M and every t; for square matrices also compare the whole
    family with the listed shapes."""
    ring = ring or default_ring(spec)
    if family is None:
        f = seed_polynomial(spec, ring)
        family = closure(f, policy or hankel_policy(spec, ring))
    subs = submatrices(spec)
    checks: list = []
    for role in ROLES:
        for t in range(1, subs[role].max_minor + 1):
            found, chain = family_contains(family, minor_ideal(subs[role], t, ring))
            anchor = "hankel-membership" if role == "X" else "hankel-membership-submatrix"
            _check(checks, f"I_{t}({role}) in C_f", anchor, True, found)
    report = {"spec": spec.label(), "shape": spec.shape, "members": len(family),
              "checks": checks, "family": family}
    if spec.shape == "square":
        cmp = compare_with_listed(family, theorem_family_shapes(spec, ring))
        report["comparison"] = cmp
        _check(checks, "family equals listed shapes up to (f) and (1)",
               "hankel-characterization", True, cmp["matches_up_to_boundary"])
    report["passed"] = all(c["passed"] for c in checks)
    return report
