"""Exact truncated power series over the integers, in one nome variable or two.

Everything here is exact: coefficients are Python ints, truncation orders are
explicit, and an identity between two series means coefficient-by-coefficient
equality up to the stated order.  These series carry the combinatorial side of
the toolkit: the Euler product, the pentagonal-number series, both sides of
the Jacobi triple product, and the theta-series form of eta driven by the
Dirichlet character mod 12.
"""

from __future__ import annotations

from math import isqrt

__all__ = [
    "QSeries",
    "BiSeries",
    "chi12",
    "euler_product_series",
    "pentagonal_series",
    "jtp_product_side",
    "jtp_sum_side",
    "jtp_shift_residual",
    "eta_char_qseries",
]

# chi12(n) is the Dirichlet character mod 12: +1 at n = +-1, -1 at n = +-5,
# zero elsewhere, period 12, completely multiplicative.
_CHI12_TABLE = (0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1)


def chi12(n: int) -> int:
    """Dirichlet character mod 12 (+1 on 1, 11; -1 on 5, 7; else 0)."""
    return _CHI12_TABLE[n % 12]


class QSeries:
    """Power series in one variable, truncated at `order`, with int coefficients.

    Coefficients are stored sparsely (zero entries are dropped).  Exponents
    above `order` are unknown, not zero; arithmetic truncates to the minimum
    order of its operands so an unknown coefficient is never reported.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[int, int], order: int):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        cleaned = {}
        for e, c in coeffs.items():
            if e < 0 or e > order:
                raise ValueError(f"exponent {e} outside [0, {order}]")
            if c:
                cleaned[e] = c
        self.coeffs = cleaned
        self.order = order

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls({0: 1}, order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls({}, order)

    def coeff(self, e: int) -> int:
        """Coefficient at exponent e; raises if e is beyond the known range."""
        if e > self.order:
            raise ValueError(f"coefficient at {e} is unknown (order {self.order})")
        return self.coeffs.get(e, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(sorted(self.coeffs.items()))))

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self.coeffs.items()}, self.order)

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if e <= order}
        for e, c in other.coeffs.items():
            if e <= order:
                out[e] = out.get(e, 0) + c
        return QSeries(out, order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other: "QSeries") -> "QSeries":
        """Exact Cauchy product, truncated to min(order, other.order)."""
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            if e1 > order:
                continue
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e <= order:
                    out[e] = out.get(e, 0) + c1 * c2
        return QSeries(out, order)

    def __repr__(self):
        terms = sorted(self.coeffs.items())
        head = " ".join(f"{c:+d}*q^{e}" for e, c in terms[:6])
        if len(terms) > 6:
            head += " ..."
        return f"QSeries({head or '0'}; order={self.order})"


class BiSeries:
    """Series in w truncated at `order`, Laurent in z^2, with int coefficients.

    A key (m, j) holds the coefficient of w^m * z^(2j); j may be negative.
    Both sides of the Jacobi triple product live here, so for every monomial
    |j| <= m (a z^2 step always costs at least one power of w).
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[tuple[int, int], int], order: int):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        cleaned = {}
        for (m, j), c in coeffs.items():
            if m < 0 or m > order:
                raise ValueError(f"w-exponent {m} outside [0, {order}]")
            if abs(j) > m:
                raise ValueError(f"z^2-exponent {j} exceeds w-degree {m}")
            if c:
                cleaned[(m, j)] = c
        self.coeffs = cleaned
        self.order = order

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        return cls({(0, 0): 1}, order)

    def coeff(self, m: int, j: int) -> int:
        if m > self.order:
            raise ValueError(f"coefficient at w^{m} is unknown (order {self.order})")
        return self.coeffs.get((m, j), 0)

    def z2_slice(self, m: int) -> dict[int, int]:
        """The coefficient of w^m, as a map j -> int (the z^2 Laurent polynomial)."""
        if m > self.order:
            raise ValueError(f"coefficient at w^{m} is unknown (order {self.order})")
        return {j: c for (mm, j), c in self.coeffs.items() if mm == m}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(sorted(self.coeffs.items()))))

    def __neg__(self) -> "BiSeries":
        return BiSeries({k: -c for k, c in self.coeffs.items()}, self.order)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        if not isinstance(other, BiSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = {k: c for k, c in self.coeffs.items() if k[0] <= order}
        for k, c in other.coeffs.items():
            if k[0] <= order:
                out[k] = out.get(k, 0) - c
        return BiSeries(out, order)

    def __repr__(self):
        terms = sorted(self.coeffs.items())
        head = " ".join(f"{c:+d}*w^{m}*z^{2 * j}" for (m, j), c in terms[:4])
        if len(terms) > 4:
            head += " ..."
        return f"BiSeries({head or '0'}; order={self.order})"


def euler_product_series(n_order: int) -> QSeries:
    """prod_{n=1}^{N} (1 - q^n) truncated to order N.

    Factors with n > N cannot touch coefficients of exponent <= N, so the
    finite product determines the truncation exactly.  Computed with a dense
    coefficient table: multiplying by (1 - q^n) is c[e] -= c[e-n].
    """
    if n_order < 0:
        raise ValueError(f"order must be >= 0, got {n_order}")
    dense = [0] * (n_order + 1)
    dense[0] = 1
    for n in range(1, n_order + 1):
        dense[n:] = [a - b for a, b in zip(dense[n:], dense)]
    return QSeries({e: c for e, c in enumerate(dense) if c}, n_order)


def pentagonal_series(n_order: int) -> QSeries:
    """sum over all integers n of (-1)^n q^((3n^2 - n)/2), truncated to order N.

    The exponents (3n^2 -+ n)/2 are the generalized pentagonal numbers.
    """
    if n_order < 0:
        raise ValueError(f"order must be >= 0, got {n_order}")
    coeffs = {0: 1}
    n = 1
    while True:
        e_pos = (3 * n * n - n) // 2   # from +n
        e_neg = (3 * n * n + n) // 2   # from -n
        if e_pos > n_order:
            break
        sign = -1 if n % 2 else 1
        coeffs[e_pos] = sign
        if e_neg <= n_order:
            coeffs[e_neg] = sign
        n += 1
    return QSeries(coeffs, n_order)


def jtp_product_side(n_order: int) -> BiSeries:
    """Triple product prod_{n>=1} (1 - w^2n)(1 + w^(2n-1) z^2)(1 + w^(2n-1) z^-2).

    Expanded exactly to w-order N.  Only factors with 2n - 1 <= N can
    contribute, so n runs to ceil((N + 1) / 2).
    """
    if n_order < 0:
        raise ValueError(f"order must be >= 0, got {n_order}")
    coeffs: dict[tuple[int, int], int] = {(0, 0): 1}
    for n in range(1, (n_order + 2) // 2 + 1):
        for shift, dj, sign in ((2 * n, 0, -1), (2 * n - 1, 1, 1), (2 * n - 1, -1, 1)):
            if shift > n_order:
                continue
            updated = dict(coeffs)
            for (m, j), c in coeffs.items():
                m2 = m + shift
                if m2 <= n_order:
                    key = (m2, j + dj)
                    updated[key] = updated.get(key, 0) + sign * c
            coeffs = {k: v for k, v in updated.items() if v}
    return BiSeries(coeffs, n_order)


def jtp_sum_side(n_order: int) -> BiSeries:
    """Theta sum sum over n of w^(n^2) z^(2n), truncated to w-order N."""
    if n_order < 0:
        raise ValueError(f"order must be >= 0, got {n_order}")
    coeffs = {(0, 0): 1}
    n = 1
    while n * n <= n_order:
        coeffs[(n * n, n)] = 1
        coeffs[(n * n, -n)] = 1
        n += 1
    return BiSeries(coeffs, n_order)


def jtp_shift_residual(n_order: int) -> BiSeries:
    """(z^2 w) * F(w, wz) - F(w, z) truncated to w-order N, with F the triple product.

    Substituting z -> wz sends the monomial w^m z^(2j) to w^(m+2j) z^(2j), so
    after the extra z^2 w factor a source monomial (m, j) lands at
    (m + 2j + 1, j + 1).  A z^2 step at w-cost 2n - 1 uses each odd weight at
    most once, hence |j| <= sqrt(m); source terms with m up to (sqrt(N) + 2)^2
    therefore cover every target w-degree <= N.  The residual is the zero
    series exactly when the shift relation holds.
    """
    if n_order < 0:
        raise ValueError(f"order must be >= 0, got {n_order}")
    source_order = (isqrt(n_order) + 2) ** 2
    source = jtp_product_side(source_order)
    shifted: dict[tuple[int, int], int] = {}
    for (m, j), c in source.coeffs.items():
        m2 = m + 2 * j + 1
        if m2 <= n_order:
            key = (m2, j + 1)
            shifted[key] = shifted.get(key, 0) + c
    return BiSeries(shifted, n_order) - jtp_product_side(n_order)


def eta_char_qseries(n_order: int) -> QSeries:
    """Theta form of eta in the variable u = q^(1/24): sum_{n>=1} chi12(n) u^(n^2).

    One unit of exponent here is 1/24 of a power of q, which keeps the series
    over integer-indexed coefficients.  Equals u times the Euler product
    rewritten in u^24, which is what the tests pin down.
    """
    if n_order < 0:
        raise ValueError(f"order must be >= 0, got {n_order}")
    coeffs = {}
    n = 1
    while n * n <= n_order:
        c = chi12(n)
        if c:
            coeffs[n * n] = c
        n += 1
    return QSeries(coeffs, n_order)
