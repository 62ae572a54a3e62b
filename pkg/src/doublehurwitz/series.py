"""Exact truncated Laurent series in one variable z.

A series stores coefficients from z^start upward and the order N through
which they are known: everything at or below z^N is exact, nothing above it
is. Coefficients are Fractions, or any exact ring element supporting + - *
and comparison with 0 (MultiPoly is used for symbolic chamber work).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import IncompatibleTruncation, OddIndex, ZeroArgument

__all__ = [
    "LaurentSeries",
    "bernoulli",
    "exp_series",
    "sigma_series",
    "inv_sigma_series",
    "x_over_sigma_coefficients",
    "fmt_rational",
    "parse_rational",
]


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _is_zero(c) -> bool:
    return c == 0


class LaurentSeries:
    """c_start z^start + ... + c_order z^order + O(z^(order+1))."""

    __slots__ = ("start", "coeffs", "order")

    def __init__(self, coeffs, start: int = 0, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = start + len(coeffs) - 1
        keep = order - start + 1
        if keep < 0:
            coeffs, start = [], order + 1
        else:
            coeffs = coeffs[:keep]
        # drop leading zeros so start is the valuation
        lead = 0
        while lead < len(coeffs) and _is_zero(coeffs[lead]):
            lead += 1
        coeffs = coeffs[lead:]
        start += lead
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            start = order + 1
        self.start = start
        self.coeffs = coeffs
        self.order = order

    # -- construction -------------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "LaurentSeries":
        return cls([c], 0, order)

    @classmethod
    def monomial(cls, c, k: int, order: int) -> "LaurentSeries":
        return cls([c], k, order)

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls([], order + 1, order)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (order+1 for a zero series)."""
        return self.start

    @property
    def pole_order(self) -> int:
        return max(0, -self.start)

    def coefficient(self, k: int):
        if k > self.order:
            raise IncompatibleTruncation(f"z^{k} requested, series known through z^{self.order}")
        i = k - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.coeffs[0] * 0 if self.coeffs else Fraction(0)

    def __getitem__(self, k: int):
        return self.coefficient(k)

    def items(self):
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                yield self.start + i, c

    def truncate(self, N: int) -> "LaurentSeries":
        if N > self.order:
            raise IncompatibleTruncation(f"cannot extend z^{self.order} series to z^{N}")
        return LaurentSeries(self.coeffs, self.start, N)

    def equal_through(self, other: "LaurentSeries", N: int) -> bool:
        if N > self.order or N > other.order:
            raise IncompatibleTruncation(f"comparison through z^{N} exceeds known order")
        lo = min(self.start, other.start)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(lo, N + 1))

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return self.order == other.order and self.start == other.start and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.start, self.order, tuple(self.coeffs)))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries([other], 0, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        lo = min(self.start, other.start)
        if lo > order:
            return LaurentSeries.zero(order)
        coeffs = [None] * (order - lo + 1)
        for k in range(lo, order + 1):
            a = self._raw(k)
            b = other._raw(k)
            coeffs[k - lo] = b if a is None else (a if b is None else a + b)
        zero = Fraction(0)
        return LaurentSeries([zero if c is None else c for c in coeffs], lo, order)

    __radd__ = __add__

    def _raw(self, k):
        i = k - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return None

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.start, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries([c * x for x in self.coeffs], self.start, self.order)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        # each factor is exact through its order; the product is exact up to
        # the first place an unknown coefficient of one meets the other
        order = min(self.order + other.start, other.order + self.start)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(order)
        start = self.start + other.start
        length = order - start + 1
        if length <= 0:
            return LaurentSeries.zero(order)
        out = [None] * length
        for i, a in enumerate(self.coeffs):
            if i >= length:
                break
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= length:
                    break
                term = a * b
                out[k] = term if out[k] is None else out[k] + term
        zero = self.coeffs[0] * 0
        return LaurentSeries([zero if c is None else c for c in out], start, order)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by z^k."""
        return LaurentSeries(self.coeffs, self.start + k, self.order + k)

    def substitute_scale(self, a) -> "LaurentSeries":
        """f(z) -> f(a z) for a nonzero scalar a."""
        a = Fraction(a)
        if a == 0:
            raise ZeroArgument("scale must be nonzero")
        return LaurentSeries([c * a ** (self.start + i) for i, c in enumerate(self.coeffs)],
                             self.start, self.order)

    def reciprocal(self) -> "LaurentSeries":
        """1/f for a series with invertible leading coefficient."""
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of a zero series")
        v = self.start
        u = self.coeffs
        rel = self.order - v  # u is known through z^rel
        inv_lead = 1 / Fraction(u[0])
        out = [inv_lead]
        for k in range(1, rel + 1):
            s = sum((u[j] * out[k - j] for j in range(1, min(k, len(u) - 1) + 1)), Fraction(0))
            out.append(-s * inv_lead)
        return LaurentSeries(out, -v, rel - v)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.reciprocal()
        return self.scale(Fraction(1) / Fraction(other))

    # -- output -------------------------------------------------------------

    def to_json(self) -> dict:
        p = self.pole_order
        return {
            "pole_order": p,
            "order": self.order,
            "coeffs": [fmt_rational(self.coefficient(k)) for k in range(-p, self.order + 1)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentSeries":
        p = data["pole_order"]
        coeffs = [Fraction(c) for c in data["coeffs"]]
        order = data.get("order", len(coeffs) - 1 - p)
        return cls(coeffs, -p, order)

    def to_text(self, var: str = "z") -> str:
        parts = []
        for k, c in self.items():
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = fmt_rational(mag)
            else:
                mono = f"{var}" if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{fmt_rational(mag)}*{mono}"
            parts.append((sign, body))
        if not parts:
            head = "0"
        else:
            head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, body in parts[1:]:
                head += f" {sign} {body}"
        return f"{head} + O({var}^{self.order + 1})"

    def __repr__(self):
        return f"LaurentSeries({self.to_text()})"


# -- special series -----------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    B = [Fraction(1)]
    for k in range(1, n + 1):
        s = sum((math.comb(k + 1, j) * B[j] for j in range(k)), Fraction(0))
        B.append(-s / (k + 1))
    return tuple(B)


def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2."""
    if k < 0:
        raise ValueError("index must be non-negative")
    if k > 1 and k % 2:
        raise OddIndex(f"B_{k} is zero for odd k > 1; only even indices are accepted")
    return _bernoulli_table(k)[k]


def exp_series(a, N: int) -> LaurentSeries:
    """e^(a z) through z^N."""
    coeffs, term = [], Fraction(1)
    for k in range(N + 1):
        coeffs.append(term)
        term = term * a / (k + 1)
    return LaurentSeries(coeffs, 0, N)


def sigma_series(a, N: int) -> LaurentSeries:
    """varsigma(a z) = e^(a z/2) - e^(-a z/2) through z^N.

    ``a`` may be a rational or a MultiPoly; the coefficients are
    2 (a/2)^k / k! for odd k.
    """
    if N < 0:
        return LaurentSeries.zero(N)
    half = a * Fraction(1, 2)
    coeffs = [half * 0] * (N + 1)
    power = half
    for k in range(1, N + 1):
        if k % 2:
            coeffs[k] = power * Fraction(2, math.factorial(k))
        power = power * half
    return LaurentSeries(coeffs, 0, N)


def x_over_sigma_coefficients(K: int) -> list[Fraction]:
    """c_0..c_K with x / varsigma(x) = sum_k c_k x^(2k)."""
    out = [Fraction(1)]
    for k in range(1, K + 1):
        out.append(-(1 - Fraction(2) ** (1 - 2 * k)) * bernoulli(2 * k) / math.factorial(2 * k))
    return out


def inv_sigma_series(a, N: int) -> LaurentSeries:
    """1/varsigma(a z) = (1/(a z)) * sum_k c_k (a z)^(2k) through z^N."""
    a = Fraction(a)
    if a == 0:
        raise ZeroArgument("1/varsigma(0 z) is undefined")
    K = max(0, (N + 1) // 2)
    c = x_over_sigma_coefficients(K)
    coeffs = [Fraction(0)] * (N + 2)
    for k in range(K + 1):
        e = 2 * k - 1
        if e <= N:
            coeffs[e + 1] = c[k] * a ** e
    return LaurentSeries(coeffs, -1, N)
