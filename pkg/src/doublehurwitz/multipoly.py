"""Sparse multivariate polynomials with exact rational coefficients.

Chamber polynomials live in the variables mu_1..mu_m, nu_1..nu_(n-1); the
last part nu_n is eliminated as sum(mu) - sum(nu_j, j < n), so every
polynomial on the hyperplane |mu| = |nu| has a unique representation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InexactDivision
from .series import fmt_rational

__all__ = ["MultiPoly", "hurwitz_variables", "hurwitz_variable_names"]


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Fraction] | None = None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            if c:
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} has wrong arity for {nvars} variables")
                clean[tuple(exps)] = Fraction(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    # -- basic protocol -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def homogeneous_component(self, deg: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == deg})

    def homogeneous_components(self) -> dict[int, "MultiPoly"]:
        return {k: self.homogeneous_component(k) for k in self.degrees()}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient by lex long division; any remainder raises InexactDivision."""
        divisor = self._lift(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        de, dc = divisor.leading_term()
        quotient: dict = {}
        rest = self
        while rest:
            e, c = rest.leading_term()
            diff = tuple(a - b for a, b in zip(e, de))
            if any(x < 0 for x in diff):
                raise InexactDivision(
                    f"leading term {c}*{e} not divisible by {dc}*{de}")
            q = c / dc
            quotient[diff] = quotient.get(diff, 0) + q
            rest = rest - MultiPoly(self.nvars, {diff: q}) * divisor
        return MultiPoly(self.nvars, quotient)

    # -- output -------------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": fmt_rational(c)}
                for e, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[dict]) -> "MultiPoly":
        return cls(nvars, {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data})

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0]))):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            mag = abs(c)
            if not mono:
                body = fmt_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{fmt_rational(mag)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"


def hurwitz_variable_names(m: int, n: int) -> list[str]:
    return [f"mu{i + 1}" for i in range(m)] + [f"nu{j + 1}" for j in range(n - 1)]


def hurwitz_variables(m: int, n: int) -> tuple[list[MultiPoly], list[MultiPoly], MultiPoly]:
    """Symbolic mu_1..mu_m, nu_1..nu_n (nu_n eliminated) and d."""
    k = m + n - 1
    mus = [MultiPoly.variable(k, i) for i in range(m)]
    nus = [MultiPoly.variable(k, m + j) for j in range(n - 1)]
    d = sum(mus[1:], mus[0])
    last = d - sum(nus, MultiPoly(k))
    return mus, nus + [last], d
