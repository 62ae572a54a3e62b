"""Energy-truncated model of the charge-zero infinite wedge.

A basis vector v_lam is a Maya diagram: black stones at lam_i - i + 1/2 for
i = 1, 2, ... (all but finitely many are the vacuum's stones at -1/2, -3/2,
...). Operators move one stone at a time:

* alpha_n moves a stone from x to x - n, with sign (-1)^(stones jumped);
  positive n lowers |lam| by n and annihilates the vacuum.
* E_r(z) makes the same moves weighted by e^(z * midpoint of the move); E_0
  acts diagonally and carries the constant 1/varsigma(z).
* F_2 is diagonal with eigenvalue (1/2) sum a'^2 - (1/2) sum b'^2.

Everything is exact. A vector records the largest energy it may hold; any
operation that would step past it raises instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CutoffExceeded, CutoffTooSmall
from .partitions import Partition, f2_from_frobenius, frobenius_coords
from .series import LaurentSeries, exp_series, inv_sigma_series

__all__ = [
    "WedgeVector",
    "OperatorSymbol",
    "Alpha",
    "F2",
    "E",
    "maya_stones",
    "apply_alpha",
    "apply_f2",
    "apply_E",
    "apply_operator",
    "apply_sequence",
    "energy_profile",
    "vacuum_expectation",
]

HALF = Fraction(1, 2)


def _nonzero(c) -> bool:
    if isinstance(c, LaurentSeries):
        return not c.is_zero()
    return c != 0


@dataclass
class WedgeVector:
    """Finite combination of v_lam with |lam| <= cutoff."""

    terms: dict = field(default_factory=dict)
    cutoff: int = 0

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            lam = Partition(lam)
            if lam.size > self.cutoff:
                raise CutoffExceeded(f"v_{tuple(lam)} has energy {lam.size} > cutoff {self.cutoff}")
            if _nonzero(c):
                clean[lam] = c
        self.terms = clean

    @classmethod
    def vacuum(cls, cutoff: int = 0) -> "WedgeVector":
        return cls({Partition(): Fraction(1)}, cutoff)

    @classmethod
    def basis(cls, lam: Sequence[int], cutoff: int | None = None) -> "WedgeVector":
        lam = Partition(lam)
        return cls({lam: Fraction(1)}, lam.size if cutoff is None else cutoff)

    def coefficient(self, lam: Sequence[int]):
        return self.terms.get(Partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (t[0].size, tuple(t[0])))

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return WedgeVector(out, max(self.cutoff, other.cutoff))

    def __neg__(self):
        return WedgeVector({lam: -c for lam, c in self.terms.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WedgeVector":
        return WedgeVector({lam: c * v for lam, v in self.terms.items()}, self.cutoff)

    def equal_through(self, other: "WedgeVector", N: int) -> bool:
        """Equality with series coefficients compared through z^N."""
        for lam in set(self.terms) | set(other.terms):
            a, b = self.coefficient(lam), other.coefficient(lam)
            if isinstance(a, LaurentSeries) or isinstance(b, LaurentSeries):
                a = a if isinstance(a, LaurentSeries) else LaurentSeries.constant(a, N)
                b = b if isinstance(b, LaurentSeries) else LaurentSeries.constant(b, N)
                if not a.equal_through(b, N):
                    return False
            elif a != b:
                return False
        return True

    def __repr__(self):
        body = " + ".join(f"({c})v{tuple(lam)}" for lam, c in self.items()) or "0"
        return f"WedgeVector({body}; D={self.cutoff})"


@dataclass(frozen=True)
class OperatorSymbol:
    """alpha_n, F_2, or E_r(scale * z)."""

    kind: str
    index: int = 0
    scale: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("alpha", "F2", "E"):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.kind == "alpha" and self.index == 0:
            raise ValueError("alpha_0 is not part of the model")
        object.__setattr__(self, "scale", Fraction(self.scale))

    @property
    def energy(self) -> int:
        """Amount by which the operator lowers |lam|."""
        return 0 if self.kind == "F2" else self.index

    def __str__(self):
        if self.kind == "alpha":
            return f"a({self.index})"
        if self.kind == "F2":
            return "F2"
        return f"E({self.index}; {self.scale}z)"


def Alpha(n: int) -> OperatorSymbol:
    return OperatorSymbol("alpha", n)


def F2() -> OperatorSymbol:
    return OperatorSymbol("F2")


def E(r: int, scale) -> OperatorSymbol:
    return OperatorSymbol("E", r, Fraction(scale))


def maya_stones(lam: Sequence[int], depth: int) -> list[Fraction]:
    """Positions of the top ``depth`` black stones of v_lam, decreasing."""
    lam = Partition(lam)
    return [(lam[i] if i < len(lam) else 0) - i - 1 + HALF for i in range(depth)]


def _moves(lam: Partition, n: int):
    """Yield (new partition, sign, midpoint) for each stone moved down by n."""
    depth = len(lam) + abs(n)
    stones = maya_stones(lam, depth)
    occupied = set(stones)
    floor = stones[-1]  # everything below is filled
    for x in stones:
        y = x - n
        if y in occupied or y < floor:
            continue
        lo, hi = (y, x) if y < x else (x, y)
        jumped = sum(1 for s in stones if lo < s < hi)
        new = sorted([s for s in stones if s != x] + [y], reverse=True)
        parts = [int(s - HALF) + i + 1 for i, s in enumerate(new)]
        yield Partition(p for p in parts if p > 0), (-1 if jumped % 2 else 1), (x + y) / 2


def apply_alpha(n: int, v: WedgeVector) -> WedgeVector:
    if n == 0:
        raise ValueError("alpha_0 is not part of the model")
    out: dict = {}
    for lam, c in v.terms.items():
        for mu, sign, _ in _moves(lam, n):
            if mu.size > v.cutoff:
                raise CutoffExceeded(f"alpha_{n} v_{tuple(lam)} reaches energy {mu.size} > {v.cutoff}")
            term = c if sign > 0 else -c
            out[mu] = out[mu] + term if mu in out else term
    return WedgeVector(out, v.cutoff)


def apply_f2(v: WedgeVector) -> WedgeVector:
    return WedgeVector({lam: f2_from_frobenius(lam) * c for lam, c in v.terms.items()}, v.cutoff)


def _as_series(c, N: int) -> LaurentSeries:
    return c if isinstance(c, LaurentSeries) else LaurentSeries.constant(c, N)


def _e0_eigenvalue(lam: Partition, scale: Fraction, N: int) -> LaurentSeries:
    coords = frobenius_coords(lam)
    total = inv_sigma_series(scale, N)
    for a in coords.electrons:
        total = total + exp_series(a * scale, N)
    for b in coords.positrons:
        total = total - exp_series(-b * scale, N)
    return total


def apply_E(r: int, scale, v: WedgeVector, N: int) -> WedgeVector:
    """E_r(scale * z) v with coefficients as series through z^N."""
    scale = Fraction(scale)
    out: dict = {}
    if r == 0:
        for lam, c in v.terms.items():
            out[lam] = _as_series(c, N) * _e0_eigenvalue(lam, scale, N)
        return WedgeVector(out, v.cutoff)
    for lam, c in v.terms.items():
        cs = _as_series(c, N)
        for mu, sign, mid in _moves(lam, r):
            if mu.size > v.cutoff:
                raise CutoffExceeded(f"E_{r} v_{tuple(lam)} reaches energy {mu.size} > {v.cutoff}")
            term = cs * exp_series(mid * scale, N)
            if sign < 0:
                term = -term
            out[mu] = out[mu] + term if mu in out else term
    return WedgeVector(out, v.cutoff)


def apply_operator(op: OperatorSymbol, v: WedgeVector, N: int = 0) -> WedgeVector:
    if op.kind == "alpha":
        return apply_alpha(op.index, v)
    if op.kind == "F2":
        return apply_f2(v)
    return apply_E(op.index, op.scale, v, N)


def energy_profile(ops: Sequence[OperatorSymbol]) -> list[int]:
    """Energies of the intermediate states when ops act right to left on |0>."""
    e, out = 0, []
    for op in reversed(ops):
        e -= op.energy
        out.append(e)
    return out


def apply_sequence(ops: Sequence[OperatorSymbol], v: WedgeVector, N: int = 0) -> WedgeVector:
    for op in reversed(list(ops)):
        v = apply_operator(op, v, N)
        if v.is_zero():
            break
    return v


def vacuum_expectation(ops: Sequence[OperatorSymbol], N: int = 0,
                       D: int | None = None) -> LaurentSeries:
    """<0| ops |0> as a series exact through z^N."""
    ops = list(ops)
    profile = energy_profile(ops)
    if not ops or profile[-1] != 0 or min(profile) < 0:
        # nonzero total energy, or a positive-energy operator hits the vacuum
        value = Fraction(1) if not ops else Fraction(0)
        return LaurentSeries.constant(value, N)
    need = max(profile)
    if D is None:
        D = need
    elif D < need:
        raise CutoffTooSmall(f"intermediate energy {need} exceeds cutoff {D}")
    # each E_0 factor carries a simple pole; pad the working order to absorb it
    pad = sum(1 for op in ops if op.kind == "E" and op.index == 0)
    result = apply_sequence(ops, WedgeVector.vacuum(D), N + pad)
    return _as_series(result.coefficient(()), N + pad).truncate(N)
