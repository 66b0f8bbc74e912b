"""Exact Dedekind-sum arithmetic.

s(h, k) is the rational number sum_{r=1}^{k-1} (r/k)(hr/k - floor(hr/k) - 1/2),
with s(h, 1) = 0.  The module provides the defining sum as an O(k) oracle, a
reciprocity-based O(log k) evaluation, two lattice-point identities used as
cross-checks, and the integer multiplier omega(a, b, c, d) that drives the
eta transformation phase.

All arithmetic is exact: values are fractions.Fraction (lowest terms, positive
denominator), never floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "dedekind_sum_naive",
    "dedekind_sum_fast",
    "floor_sum_check",
    "floor_square_sum_check",
    "omega",
]


def _check_modulus(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def _check_coprime(h: int, k: int) -> None:
    g = gcd(h, k)
    if g != 1:
        raise ValueError(f"h and k must be coprime, got gcd({h}, {k}) = {g}")


def dedekind_sum_naive(h: int, k: int) -> Fraction:
    """s(h, k) by direct evaluation of the defining sum.

    Works for any integer h (coprimality is not part of the definition).
    Each term is r/k * ((hr mod k)/k - 1/2); accumulating the numerators over
    the common denominator 2k^2 keeps the loop in integer arithmetic.
    """
    _check_modulus(k)
    total = 0
    for r in range(1, k):
        hr_mod_k = h * r - k * ((h * r) // k)
        total += r * (2 * hr_mod_k - k)
    return Fraction(total, 2 * k * k)


def dedekind_sum_fast(h: int, k: int) -> Fraction:
    """s(h, k) for coprime arguments in O(log k) steps.

    First reduce h mod k (s is periodic in h), then repeat the reciprocity
    exchange

        s(h, k) = (h^2 + k^2 - 3hk + 1) / (12hk) - s(k, h),
        s(k, h) = s(k mod h, h),

    until the second argument reaches 1, where s vanishes.  Each step is a
    Euclidean division, so the (h, k) pair shrinks like gcd computation.
    """
    _check_modulus(k)
    _check_coprime(h, k)
    h %= k
    total = Fraction(0)
    sign = 1
    while h > 0:
        total += sign * Fraction(h * h + k * k - 3 * h * k + 1, 12 * h * k)
        sign = -sign
        h, k = k % h, h
    return total


def floor_sum_check(h: int, k: int) -> tuple[int, int]:
    """Both sides of sum_{r=1}^{k-1} floor(hr/k) = (h-1)(k-1)/2, independently.

    Requires gcd(h, k) = 1 and h >= 1; the two return values agree exactly
    whenever the hypotheses hold.
    """
    _check_modulus(k)
    _check_coprime(h, k)
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    lhs = sum((h * r) // k for r in range(1, k))
    rhs = (h - 1) * (k - 1) // 2
    return lhs, rhs


def floor_square_sum_check(h: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the squared floor-sum identity, independently.

    lhs = sum_{r=1}^{k-1} floor(hr/k)^2
    rhs = 2h s(k, h) + (2hk - 3h - k + 3)(h - 1)/6

    for positive coprime h, k.  Both sides are returned as exact fractions.
    """
    _check_modulus(k)
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    _check_coprime(h, k)
    lhs = Fraction(sum(((h * r) // k) ** 2 for r in range(1, k)))
    rhs = 2 * h * dedekind_sum_fast(k, h) + Fraction((2 * h * k - 3 * h - k + 3) * (h - 1), 6)
    return lhs, rhs


def omega(a: int, b: int, c: int, d: int) -> int:
    """Multiplier exponent omega(a, b, c, d) = (a + d)/c + 12 s(-d, c).

    Defined for a unimodular integer matrix with c >= 1.  The value is always
    an integer; the combination is computed in exact rational arithmetic and
    integrality is asserted, so a non-integer result can only mean a bug in
    the Dedekind-sum code, never bad input.
    """
    if a * d - b * c != 1:
        raise ValueError(f"matrix ({a}, {b}; {c}, {d}) must have determinant 1")
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    value = Fraction(a + d, c) + 12 * dedekind_sum_fast(-d, c)
    if value.denominator != 1:
        raise AssertionError(
            f"omega({a}, {b}, {c}, {d}) = {value} is not an integer; "
            "Dedekind-sum arithmetic is broken"
        )
    return value.numerator
