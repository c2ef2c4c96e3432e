"""Exact Groebner-basis toolkit for Knutson ideals and Hankel determinantal ideals."""

from .closure import (
    KnutsonFamily,
    WitnessPolicy,
    certify_family,
    closure,
    family_contains,
    seed_check,
)
from .errors import *  # noqa: F401,F403
from .field import GF, QQ, PrimeField, RationalField, is_prime
from .groebner import (
    Ideal,
    ReducedGB,
    buchberger,
    ideal_contains,
    ideal_equal,
    ideal_member,
    initial_ideal,
    is_groebner,
    is_union_groebner,
    normal_form,
    s_polynomial,
)
from .hankel import HankelSpec, build_matrix, minor_ideal, seed_polynomial
from .ideal_ops import ideal_colon, ideal_intersect, ideal_sum, minimal_prime_by_witness
from .modp import compare_initials, integral_form, prime_scan, reduce_ideal
from .monomial import MonomialIdeal, hilbert_summary
from .orders import GREVLEX, LEX, TermOrder, elimination, matrix_order, parse_order
from .polynomial import Polynomial, PolyRing
from .text import format_polynomial, parse_polynomial, parse_polynomials

__version__ = "0.1.0"
