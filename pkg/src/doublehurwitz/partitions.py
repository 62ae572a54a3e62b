"""Partitions, Frobenius coordinates and symmetric-group characters.

Characters are computed with the Murnaghan-Nakayama rule, using beta-sets
(bead positions ``lambda_i + l - i``) to enumerate border strips: removing a
strip of length k is sliding one bead down by k onto an empty position, and
the strip height is the number of beads jumped.

The module also holds the character-theoretic Hurwitz oracle

    H^r(mu, nu) = 1/(prod mu prod nu) * sum_{|lam| = d} chi^lam_mu f2(lam)^r chi^lam_nu

which every other route in the package is checked against.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import OnWall, SizeMismatch

__all__ = [
    "Partition",
    "FrobeniusCoordinates",
    "BorderStrip",
    "HurwitzInput",
    "partitions_of",
    "frobenius_coords",
    "from_frobenius",
    "border_strips",
    "character",
    "character_column",
    "central_character_f2",
    "f2_from_frobenius",
    "dimension",
    "conjugacy_class_size",
    "hurwitz_oracle",
    "is_on_wall",
    "vanishing_walls",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Parts given in any order are sorted; ``reordered`` records whether that
    happened, since downstream algorithms care about part order.
    """

    def __new__(cls, parts: Sequence[int] = ()):
        raw = tuple(int(p) for p in parts)
        if any(p <= 0 for p in raw):
            raise ValueError(f"partition parts must be positive, got {raw}")
        canonical = tuple(sorted(raw, reverse=True))
        obj = super().__new__(cls, canonical)
        obj.reordered = canonical != raw
        return obj

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, column) pairs, 0-based."""
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def to_json(self) -> list[int]:
        return list(self)


def partitions_of(d: int) -> list[Partition]:
    """All partitions of d in lexicographically descending order."""
    if d < 0:
        raise ValueError("d must be non-negative")
    out: list[Partition] = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


# -- Frobenius coordinates ---------------------------------------------------

@dataclass(frozen=True)
class FrobeniusCoordinates:
    """Modified Frobenius coordinates: electron and positron energy levels.

    Both tuples hold strictly decreasing positive half-integers; their total
    is the size of the partition.
    """

    electrons: tuple[Fraction, ...]
    positrons: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.electrons) != len(self.positrons):
            raise ValueError("electron and positron lists must have equal length")
        for seq in (self.electrons, self.positrons):
            for a, b in zip(seq, seq[1:]):
                if not a > b:
                    raise ValueError("coordinates must be strictly decreasing")
            for x in seq:
                if x <= 0 or (2 * x).denominator != 1 or (2 * x) % 2 != 1:
                    raise ValueError(f"{x} is not a positive half-integer")

    @property
    def total(self) -> Fraction:
        return sum(self.electrons, Fraction(0)) + sum(self.positrons, Fraction(0))


HALF = Fraction(1, 2)


def frobenius_coords(lam: Sequence[int]) -> FrobeniusCoordinates:
    lam = Partition(lam)
    conj = lam.conjugate()
    rank = sum(1 for i, p in enumerate(lam) if p > i)
    electrons = tuple(lam[i] - i - 1 + HALF for i in range(rank))
    positrons = tuple(conj[i] - i - 1 + HALF for i in range(rank))
    return FrobeniusCoordinates(electrons, positrons)


def from_frobenius(coords: FrobeniusCoordinates) -> Partition:
    rank = len(coords.electrons)
    arms = [int(a - HALF) for a in coords.electrons]
    legs = [int(b - HALF) for b in coords.positrons]
    rows = [arms[i] + i + 1 for i in range(rank)]
    cols = [legs[j] + j + 1 for j in range(rank)]
    # rows below the Durfee square are read off the leg columns
    depth = max(cols, default=0)
    for i in range(rank, depth):
        rows.append(sum(1 for c in cols if c > i))
    return Partition(rows)


# -- border strips and characters --------------------------------------------

@dataclass(frozen=True)
class BorderStrip:
    """A border strip of ``size`` cells occupying rows start_row..end_row (0-based)."""

    start_row: int
    end_row: int
    size: int

    @property
    def height(self) -> int:
        return self.end_row - self.start_row

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


def _beta_set(lam: Sequence[int], length: int) -> list[int]:
    return [(lam[i] if i < len(lam) else 0) + length - 1 - i for i in range(length)]


def _from_beta(beads: Sequence[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    k = len(beads)
    return Partition(p for p in (b - (k - 1 - i) for i, b in enumerate(beads)) if p > 0)


def border_strips(lam: Sequence[int], size: int) -> list[tuple[BorderStrip, Partition]]:
    """All border strips of the given size removable from lam, with the remainder."""
    lam = Partition(lam)
    if size <= 0:
        raise ValueError("strip size must be positive")
    beads = _beta_set(lam, len(lam))
    occupied = set(beads)
    out = []
    for row, b in enumerate(beads):
        target = b - size
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beads if target < c < b)
        rest = [c for c in beads if c != b] + [target]
        out.append((BorderStrip(row, row + jumped, size), _from_beta(rest)))
    return out


@lru_cache(maxsize=None)
def _character(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    total = 0
    for strip, rest in border_strips(lam, mu[0]):
        total += strip.sign * _character(tuple(rest), mu[1:])
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """The symmetric-group character chi^lam evaluated on the class mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|lambda| = {lam.size} but |mu| = {mu.size}")
    return _character(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _column(mu: tuple) -> dict:
    if not mu:
        return {Partition(): 1}
    k = mu[-1]
    out: Counter = Counter()
    for lam, coeff in _column(mu[:-1]).items():
        length = len(lam) + k
        beads = _beta_set(lam, length)
        occupied = set(beads)
        for b in beads:
            target = b + k
            if target in occupied:
                continue
            jumped = sum(1 for c in beads if b < c < target)
            rest = [c for c in beads if c != b] + [target]
            out[_from_beta(rest)] += -coeff if jumped % 2 else coeff
    return {lam: c for lam, c in out.items() if c}


def character_column(mu: Sequence[int]) -> dict[Partition, int]:
    """All nonzero chi^lam_mu for |lam| = |mu|, built by adding border strips."""
    return dict(_column(tuple(Partition(mu))))


def central_character_f2(lam: Sequence[int]) -> int:
    """Central character of a transposition, computed as the content sum."""
    return sum(j - i for i, j in Partition(lam).cells())


def f2_from_frobenius(lam: Sequence[int]) -> Fraction:
    coords = frobenius_coords(lam)
    return (sum(a * a for a in coords.electrons) - sum(b * b for b in coords.positrons)) / 2


def dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, j in lam.cells():
        hooks *= (lam[i] - j) + (conj[j] - i) - 1
    return math.factorial(lam.size) // hooks


def conjugacy_class_size(mu: Sequence[int]) -> int:
    mu = Partition(mu)
    z = 1
    for part, mult in Counter(mu).items():
        z *= part ** mult * math.factorial(mult)
    return math.factorial(mu.size) // z


# -- Hurwitz input and oracle ------------------------------------------------

@dataclass(frozen=True)
class HurwitzInput:
    """Ramification data (mu, nu) with |mu| = |nu| = d.

    Parts are kept in the order given: as a point of R_{m,n} the labels
    matter (chamber signatures, closed-form evaluation). ``partitions()``
    gives the sorted, order-free view.
    """

    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))
        object.__setattr__(self, "nu", tuple(int(x) for x in self.nu))
        if not self.mu or not self.nu:
            raise ValueError("mu and nu must be nonempty")
        if any(x <= 0 for x in self.mu + self.nu):
            raise ValueError("parts must be positive")
        if sum(self.mu) != sum(self.nu):
            raise SizeMismatch(f"|mu| = {sum(self.mu)} but |nu| = {sum(self.nu)}")

    @property
    def d(self) -> int:
        return sum(self.mu)

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def n(self) -> int:
        return len(self.nu)

    @property
    def reordered(self) -> bool:
        """True if either side is not weakly decreasing as given."""
        return Partition(self.mu).reordered or Partition(self.nu).reordered

    def partitions(self) -> tuple[Partition, Partition]:
        return Partition(self.mu), Partition(self.nu)

    def sorted(self) -> "HurwitzInput":
        return HurwitzInput(tuple(Partition(self.mu)), tuple(Partition(self.nu)))

    def r_for_genus(self, g: int) -> int:
        return 2 * g - 2 + self.m + self.n

    def genus_for_r(self, r: int) -> int:
        twice = r + 2 - self.m - self.n
        if twice % 2:
            raise ValueError(f"r = {r} does not correspond to an integer genus")
        return twice // 2

    def mu_sum(self, indices) -> int:
        """Sum of mu_i over a set of 1-based indices."""
        return sum(self.mu[i - 1] for i in indices)

    def nu_sum(self, indices) -> int:
        return sum(self.nu[j - 1] for j in indices)

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu)}


def _as_input(mu, nu=None) -> HurwitzInput:
    if isinstance(mu, HurwitzInput):
        return mu
    return HurwitzInput(tuple(mu), tuple(nu))


def hurwitz_oracle(inp: HurwitzInput, r: int, method: str = "sparse") -> Fraction:
    """Disconnected double Hurwitz number from the character formula.

    ``method="full"`` sums over every partition of d with the recursive
    character; ``"sparse"`` skips the lambda where chi^lam_mu vanishes by
    building the nonzero character columns directly. Both are exact.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    mu, nu = inp.partitions()
    if mu.size != nu.size:
        raise SizeMismatch("sizes differ")
    total = 0
    if method == "full":
        for lam in partitions_of(inp.d):
            cm = character(lam, mu)
            if cm:
                total += cm * central_character_f2(lam) ** r * character(lam, nu)
    elif method == "sparse":
        col_mu = character_column(mu)
        col_nu = col_mu if mu == nu else character_column(nu)
        for lam, cm in col_mu.items():
            cn = col_nu.get(lam)
            if cn:
                total += cm * central_character_f2(lam) ** r * cn
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(total, math.prod(mu) * math.prod(nu))


def _proper_subsets(k: int, allow_empty: bool):
    lo = 0 if allow_empty else 1
    for size in range(lo, k + 1):
        yield from (frozenset(c) for c in combinations(range(1, k + 1), size))


def vanishing_walls(inp: HurwitzInput) -> list[tuple[frozenset, frozenset]]:
    """All pairs (I, J) other than (empty, empty) and ([m], [n]) with |mu_I| = |nu_J|."""
    full = (frozenset(range(1, inp.m + 1)), frozenset(range(1, inp.n + 1)))
    hits = []
    for I in _proper_subsets(inp.m, True):
        a = inp.mu_sum(I)
        for J in _proper_subsets(inp.n, True):
            if (not I and not J) or (I, J) == full:
                continue
            if a == inp.nu_sum(J):
                hits.append((I, J))
    return hits


def is_on_wall(inp: HurwitzInput) -> bool:
    return bool(vanishing_walls(inp))


def require_off_wall(inp: HurwitzInput) -> None:
    hits = vanishing_walls(inp)
    if hits:
        I, J = hits[0]
        raise OnWall(f"{inp.mu}, {inp.nu} lies on wall W_{{{sorted(I)},{sorted(J)}}}",
                     wall=(I, J))
