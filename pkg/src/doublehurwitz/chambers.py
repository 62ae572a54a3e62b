"""Resonance arrangement, chamber polynomials and wall crossing.

Points of R_{m,n} are labeled: (mu, nu) and a permutation of it may sit in
different chambers. Walls W_{I,J} are |mu_I| = |nu_J| with I and J proper and
nonempty (a wall with one side empty or full cannot meet positive parts);
W_{I,J} and W_{I^c,J^c} coincide, and the representative with 1 in I is
canonical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import (ChamberMismatch, DegenerateDegree, InconsistentSystem, NonPositiveDelta,
                     NotAdjacent, OnWall, SingularSystem, SubInputOnWall)
from .multipoly import MultiPoly, hurwitz_variable_names, hurwitz_variables
from .partitions import HurwitzInput, hurwitz_oracle, is_on_wall
from .patterns import closed_form, evaluate_series
from .series import (LaurentSeries, bernoulli, fmt_rational, inv_sigma_series, sigma_series,
                     x_over_sigma_coefficients)

__all__ = [
    "Wall",
    "wall_list",
    "ChamberSignature",
    "chamber_signature",
    "same_chamber",
    "chamber_representatives",
    "sample_points",
    "point_coordinates",
    "ChamberPolynomial",
    "top_degree",
    "symbolic_polynomial",
    "SppReport",
    "verify_spp",
    "bernoulli_factor",
    "bernoulli_relation",
    "simplex_lattice",
    "interpolate_polynomial",
    "WallCrossingSpec",
    "find_adjacent",
    "sigma_ratio_product",
    "sub_inputs",
    "wall_crossing_lhs",
    "wall_crossing_rhs",
]


# -- walls and chambers ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class Wall:
    I: tuple
    J: tuple

    def __str__(self):
        return f"W({set(self.I) or '{}'},{set(self.J) or '{}'})"

    def value(self, inp: HurwitzInput) -> int:
        return inp.mu_sum(self.I) - inp.nu_sum(self.J)

    def complement(self, m: int, n: int) -> tuple:
        return (tuple(i for i in range(1, m + 1) if i not in self.I),
                tuple(j for j in range(1, n + 1) if j not in self.J))

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J)}


def canonical_wall(I, J, m: int, n: int) -> Wall:
    I, J = frozenset(I), frozenset(J)
    if 1 not in I:
        I = frozenset(range(1, m + 1)) - I
        J = frozenset(range(1, n + 1)) - J
    return Wall(tuple(sorted(I)), tuple(sorted(J)))


def wall_list(m: int, n: int) -> list[Wall]:
    """Canonical proper walls of R_{m,n}, sorted."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    walls = set()
    for a in range(1, m):
        for I in combinations(range(1, m + 1), a):
            for b in range(1, n):
                for J in combinations(range(1, n + 1), b):
                    walls.add(canonical_wall(I, J, m, n))
    return sorted(walls, key=lambda w: (len(w.I), w.I, len(w.J), w.J))


@dataclass(frozen=True)
class ChamberSignature:
    m: int
    n: int
    signs: tuple  # ((Wall, +1 | -1), ...) in wall_list order

    def sign(self, wall: Wall) -> int:
        return dict(self.signs)[wall]

    def differing_walls(self, other: "ChamberSignature") -> list[Wall]:
        a, b = dict(self.signs), dict(other.signs)
        return [w for w in a if a[w] != b[w]]

    def to_json(self) -> list[dict]:
        return [{**w.to_json(), "sign": "+" if s > 0 else "-"} for w, s in self.signs]

    def to_text(self) -> str:
        if not self.signs:
            return "(no walls: single chamber)"
        return ", ".join(f"{w}:{'+' if s > 0 else '-'}" for w, s in self.signs)


def chamber_signature(inp: HurwitzInput) -> ChamberSignature:
    signs = []
    for w in wall_list(inp.m, inp.n):
        v = w.value(inp)
        if v == 0:
            raise OnWall(f"{inp.mu}, {inp.nu} lies on wall {w}", wall=w)
        signs.append((w, 1 if v > 0 else -1))
    return ChamberSignature(inp.m, inp.n, tuple(signs))


def same_chamber(a: HurwitzInput, b: HurwitzInput) -> bool:
    return (a.m, a.n) == (b.m, b.n) and chamber_signature(a) == chamber_signature(b)


def _compositions(d: int, k: int):
    if k == 1:
        yield (d,)
        return
    for first in range(1, d - k + 2):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest


def chamber_representatives(m: int, n: int, max_d: int) -> dict[ChamberSignature, HurwitzInput]:
    """First off-wall labeled point (by d, then lexicographic) in each chamber met with d <= max_d."""
    reps: dict = {}
    for d in range(max(m, n), max_d + 1):
        for mu in _compositions(d, m):
            for nu in _compositions(d, n):
                inp = HurwitzInput(mu, nu)
                if is_on_wall(inp):
                    continue
                sig = chamber_signature(inp)
                reps.setdefault(sig, inp)
    return reps


def _random_composition(rng: random.Random, d: int, k: int) -> tuple:
    cuts = sorted(rng.sample(range(1, d), k - 1))
    bounds = [0] + cuts + [d]
    return tuple(bounds[i + 1] - bounds[i] for i in range(k))


def sample_points(signature: ChamberSignature, count: int, seed: int = 0, max_d: int = 40,
                  tries: int = 200000) -> list[HurwitzInput]:
    """Distinct random labeled points with the given signature (rejection sampling)."""
    rng = random.Random(seed)
    m, n = signature.m, signature.n
    found: list = []
    seen = set()
    lo = max(m, n, 2)
    for _ in range(tries):
        d = rng.randint(lo, max_d)
        inp = HurwitzInput(_random_composition(rng, d, m), _random_composition(rng, d, n))
        key = (inp.mu, inp.nu)
        if key in seen or is_on_wall(inp):
            continue
        seen.add(key)
        if chamber_signature(inp) == signature:
            found.append(inp)
            if len(found) == count:
                return found
    raise ChamberMismatch(f"found only {len(found)} of {count} points in the chamber")


def point_coordinates(inp: HurwitzInput) -> tuple:
    """Coordinates in the polynomial variables: mu_1..mu_m, nu_1..nu_(n-1)."""
    return tuple(inp.mu) + tuple(inp.nu[:-1])


def input_from_coordinates(coords: Sequence[int], m: int, n: int) -> HurwitzInput:
    mu = tuple(int(x) for x in coords[:m])
    nus = tuple(int(x) for x in coords[m:])
    return HurwitzInput(mu, nus + (sum(mu) - sum(nus),))


# -- chamber polynomials ----------------------------------------------------------

def top_degree(m: int, n: int, g: int) -> int:
    return 4 * g - 3 + m + n


@dataclass
class ChamberPolynomial:
    """H_g = P^{c,r} = sum_k (-1)^k P_{g,k} on one chamber."""

    chamber: ChamberSignature
    m: int
    n: int
    g: int
    polynomial: MultiPoly
    components: dict = field(default_factory=dict)  # k -> P_{g,k}

    @property
    def r(self) -> int:
        return 2 * self.g - 2 + self.m + self.n

    def evaluate(self, inp: HurwitzInput) -> Fraction:
        return self.polynomial.evaluate(point_coordinates(inp))

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n, "g": self.g, "r": self.r,
            "variables": hurwitz_variable_names(self.m, self.n),
            "chamber": self.chamber.to_json(),
            "polynomial": self.polynomial.to_json(),
            "components": {str(k): p.to_json() for k, p in sorted(self.components.items())},
        }

    def to_text(self) -> str:
        names = hurwitz_variable_names(self.m, self.n)
        lines = [f"chamber: {self.chamber.to_text()}",
                 f"g = {self.g}, r = {self.r}, nu{self.n} = d - " +
                 (" - ".join(f"nu{j}" for j in range(1, self.n)) if self.n > 1 else "0").replace("d - 0", "d"),
                 f"H = {self.polynomial.to_text(names)}"]
        for k, p in sorted(self.components.items()):
            lines.append(f"P[{self.g},{k}] (degree {top_degree(self.m, self.n, self.g) - 2 * k}) = {p.to_text(names)}")
        return "\n".join(lines)


def _pattern_coefficients(sample: HurwitzInput, upto: int) -> list[MultiPoly]:
    """[z^j] of sum_P prod_l varsigma(Q_l z) as polynomials, j = 0..upto."""
    cf = closed_form(sample)
    m, n = sample.m, sample.n
    k = m + n - 1
    total = LaurentSeries.zero(upto)
    for p in cf.patterns:
        prod = None
        for step in p.steps:
            s = sigma_series(step.sigma_poly(m, n), upto)
            prod = s if prod is None else prod * s
        total = total + prod.truncate(upto)
    zero = MultiPoly(k)
    return [zero + total.coefficient(j) for j in range(upto + 1)]


def symbolic_polynomial(sample: HurwitzInput, g: int) -> ChamberPolynomial:
    """The chamber polynomial of genus g through the closed form, with exact division."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    m, n = sample.m, sample.n
    top = top_degree(m, n, g)
    if top < 0:
        raise DegenerateDegree(f"degree 4g-3+m+n = {top} < 0 for m={m}, n={n}, g={g}")
    signature = chamber_signature(sample)
    r = 2 * g - 2 + m + n
    coeffs = _pattern_coefficients(sample, r + 1)
    c = x_over_sigma_coefficients(g)
    mus, nus, d = hurwitz_variables(m, n)
    divisor = d
    for v in mus + nus:
        divisor = divisor * v
    components = {}
    total = MultiPoly(m + n - 1)
    for kk in range(g + 1):
        term = coeffs[r + 1 - 2 * kk] * (d ** (2 * kk)) * (abs(c[kk]) * math.factorial(r))
        comp = term.divide_exact(divisor)
        components[kk] = comp
        total = total + comp * (-1) ** kk
    return ChamberPolynomial(signature, m, n, g, total, components)


@dataclass
class SppReport:
    checks: list = field(default_factory=list)  # (name, ok, witness)

    def add(self, name: str, ok: bool, witness: str = "") -> None:
        self.checks.append((name, bool(ok), witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_text(self) -> str:
        return "\n".join(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  [{w}]" if w and not ok else "")
                         for name, ok, w in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "checks": [{"name": n, "ok": ok, "witness": w} for n, ok, w in self.checks]}


def verify_spp(cp: ChamberPolynomial, samples: Sequence[HurwitzInput]) -> SppReport:
    """Degrees, positivity, parity and lower degree bound of a chamber polynomial."""
    rep = SppReport()
    m, n, g = cp.m, cp.n, cp.g
    top = top_degree(m, n, g)
    allowed = {top - 2 * k for k in range(g + 1)}
    for s in samples:
        if chamber_signature(s) != cp.chamber:
            raise ChamberMismatch(f"sample {s.mu},{s.nu} is not in the polynomial's chamber")
    degs = set(cp.polynomial.degrees())
    rep.add("degrees in {4g-3+m+n-2k}", degs <= allowed, f"found {sorted(degs)}, allowed {sorted(allowed)}")
    for k, comp in sorted(cp.components.items()):
        want = top - 2 * k
        rep.add(f"P[{g},{k}] homogeneous of degree {want}", comp.degrees() == [want],
                f"degrees {comp.degrees()}")
        bad = [s for s in samples if not comp.evaluate(point_coordinates(s)) > 0]
        rep.add(f"P[{g},{k}] > 0 on {len(samples)} samples", not bad,
                f"value {fmt_rational(comp.evaluate(point_coordinates(bad[0])))} at {bad[0].mu},{bad[0].nu}" if bad else "")
    missing = [k for k in range(g + 1) if k not in cp.components]
    rep.add("all components k=0..g present", not missing, f"missing {missing}")
    parity = top % 2
    odd = [e for e in cp.polynomial.terms if sum(e) % 2 != parity]
    rep.add(f"parity {'odd' if parity else 'even'}", not odd, f"term {odd[:1]}")
    low = min(degs) if degs else None
    rep.add("lowest degree >= 2g-3+m+n", low is not None and low >= 2 * g - 3 + m + n,
            f"lowest degree {low}")
    return rep


def bernoulli_factor(k: int, d: MultiPoly) -> MultiPoly:
    """(1 - (1/2)^(2k-1)) |B_2k| d^(2k) / (2k)!"""
    coeff = (1 - Fraction(1, 2) ** (2 * k - 1)) * abs(bernoulli(2 * k)) / math.factorial(2 * k)
    return (d ** (2 * k)) * coeff


def bernoulli_relation(sample: HurwitzInput, g: int, k: int, with_factorial: bool = False):
    """Return (P_{g,k}, predicted) for the relation P_{g,k} = factor * P_{g-k,0}.

    With ``with_factorial`` the factor carries r!/(r-2k)!, r = 2g-2+m+n, which
    accounts for the r! in H^r = r! [z^r] H(z).
    """
    if not 1 <= k <= g:
        raise ValueError("need 1 <= k <= g")
    _, _, d = hurwitz_variables(sample.m, sample.n)
    high = symbolic_polynomial(sample, g)
    low = symbolic_polynomial(sample, g - k)
    factor = bernoulli_factor(k, d)
    if with_factorial:
        r = 2 * g - 2 + sample.m + sample.n
        factor = factor * Fraction(math.factorial(r), math.factorial(r - 2 * k))
    return high.components[k], factor * low.components[0]


# -- interpolation ----------------------------------------------------------------

def _monomials(nvars: int, max_deg: int) -> list[tuple]:
    """Exponent vectors of total degree <= max_deg, by degree then lexicographically descending."""
    def rec(k, deg):
        if k == 1:
            yield (deg,)
            return
        for first in range(deg, -1, -1):
            for rest in rec(k - 1, deg - first):
                yield (first,) + rest

    return [e for deg in range(max_deg + 1) for e in rec(nvars, deg)]


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact least-squares-free solve of an overdetermined consistent system."""
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ncols = len(matrix[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            raise SingularSystem(f"lattice does not determine the coefficient of basis element {col}")
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [a * inv for a in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(rows)):
        if rows[i][-1] != 0:
            raise InconsistentSystem("oracle values are not fitted by a polynomial of this degree")
    return [rows[i][-1] for i in range(ncols)]


def _binomial_poly(t: MultiPoly, a: int) -> MultiPoly:
    out = MultiPoly.constant(t.nvars, 1)
    for i in range(a):
        out = out * (t - i)
    return out * Fraction(1, math.factorial(a))


def simplex_lattice(sample: HurwitzInput, g: int, seed: int = 0,
                    max_d: int = 12) -> tuple[HurwitzInput, list[HurwitzInput]]:
    """Base point and k independent step points, all in the sample's chamber.

    Every point base + sum a_i step_i (a_i >= 0) is a positive combination of
    chamber points, hence in the chamber, and the points with sum a_i <= D
    are unisolvent for degree D.
    """
    sig = chamber_signature(sample)
    k = sample.m + sample.n - 1
    pool = sorted(chamber_representatives_in(sig, max_d), key=lambda p: (p.d, p.mu, p.nu))
    rng = random.Random(seed)
    rng.shuffle(pool)
    pool.sort(key=lambda p: p.d)
    steps: list = []
    for p in pool:
        cand = steps + [p]
        if _rank([[Fraction(x) for x in point_coordinates(q)] for q in cand]) == len(cand):
            steps = cand
            if len(steps) == k:
                break
    if len(steps) < k:
        raise SingularSystem(f"could not find {k} independent points with d <= {max_d}")
    return sample, steps


def chamber_representatives_in(sig: ChamberSignature, max_d: int) -> list[HurwitzInput]:
    out = []
    for d in range(max(sig.m, sig.n), max_d + 1):
        for mu in _compositions(d, sig.m):
            for nu in _compositions(d, sig.n):
                inp = HurwitzInput(mu, nu)
                if not is_on_wall(inp) and chamber_signature(inp) == sig:
                    out.append(inp)
    return out


def _oracle_value(inp: HurwitzInput, r: int) -> Fraction:
    return hurwitz_oracle(inp, r)


def interpolate_polynomial(sample: HurwitzInput, g: int,
                           lattice: Sequence[HurwitzInput] | None = None,
                           seed: int = 0) -> MultiPoly:
    """The polynomial of degree <= 4g-3+m+n through oracle values on a lattice.

    Without a lattice, a principal simplex lattice is built inside the chamber
    and the interpolant is read off by multivariate forward differences.
    With an explicit lattice, the Vandermonde system is solved exactly.
    """
    m, n = sample.m, sample.n
    k = m + n - 1
    D = top_degree(m, n, g)
    if D < 0:
        raise DegenerateDegree(f"degree {D} < 0")
    r = 2 * g - 2 + m + n
    sig = chamber_signature(sample)
    if lattice is not None:
        return _interpolate_general(sig, lattice, k, D, r)
    base, steps = simplex_lattice(sample, g, seed)
    b = [Fraction(x) for x in point_coordinates(base)]
    V = [[Fraction(x) for x in point_coordinates(s)] for s in steps]  # rows are step vectors
    values: dict = {}
    for a in _monomials(k, D):
        coords = [b[i] + sum(a[j] * V[j][i] for j in range(k)) for i in range(k)]
        pt = input_from_coordinates(coords, m, n)
        values[a] = _oracle_value(pt, r)
    # forward differences: Delta^a f(0) = sum_{c <= a} (-1)^{|a-c|} prod C(a_i, c_i) f(c)
    diffs = {}
    for a in values:
        total = Fraction(0)
        for c in product(*(range(x + 1) for x in a)):
            sign = -1 if (sum(a) - sum(c)) % 2 else 1
            total += sign * math.prod(math.comb(x, y) for x, y in zip(a, c)) * values[c]
        if total:
            diffs[a] = total
    # x = b + sum_j t_j V[j], so t = (V^T)^{-1} (x - b)
    x_vars = [MultiPoly.variable(k, i) for i in range(k)]
    M = _invert([[V[j][i] for j in range(k)] for i in range(k)])
    ts = []
    for j in range(k):
        t = MultiPoly(k)
        for i in range(k):
            if M[j][i]:
                t = t + (x_vars[i] - b[i]) * M[j][i]
        ts.append(t)
    result = MultiPoly(k)
    for a, delta in diffs.items():
        term = MultiPoly.constant(k, delta)
        for j, aj in enumerate(a):
            if aj:
                term = term * _binomial_poly(ts[j], aj)
        result = result + term
    return result


def _invert(A: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(A)
    rows = [list(r) + [Fraction(int(i == j)) for j in range(size)] for i, r in enumerate(A)]
    for col in range(size):
        piv = next((i for i in range(col, size) if rows[i][col] != 0), None)
        if piv is None:
            raise SingularSystem("step vectors are linearly dependent")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for i in range(size):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return [r[size:] for r in rows]


def _interpolate_general(sig: ChamberSignature, lattice, k: int, D: int, r: int) -> MultiPoly:
    for p in lattice:
        if is_on_wall(p) or chamber_signature(p) != sig:
            raise ChamberMismatch(f"lattice point {p.mu},{p.nu} is not in the chamber")
    monos = _monomials(k, D)
    if len(lattice) < len(monos):
        raise SingularSystem(f"{len(lattice)} points for {len(monos)} unknowns")
    origin = point_coordinates(lattice[0])
    matrix, rhs = [], []
    for p in lattice:
        local = [x - o for x, o in zip(point_coordinates(p), origin)]
        matrix.append([Fraction(math.prod(x ** e for x, e in zip(local, mono))) for mono in monos])
        rhs.append(_oracle_value(p, r))
    coeffs = _solve(matrix, rhs)
    x_vars = [MultiPoly.variable(k, i) - origin[i] for i in range(k)]
    result = MultiPoly(k)
    for mono, c in zip(monos, coeffs):
        if c:
            term = MultiPoly.constant(k, c)
            for v, e in zip(x_vars, mono):
                if e:
                    term = term * v ** e
            result = result + term
    return result


# -- wall crossing ----------------------------------------------------------------

@dataclass(frozen=True)
class WallCrossingSpec:
    """Wall (I, J) oriented so that delta = |mu_I| - |nu_J| > 0 on the target side."""

    I: tuple
    J: tuple
    delta: int
    d1: int
    d2: int

    @classmethod
    def at(cls, target: HurwitzInput, I, J, orient: bool = True) -> "WallCrossingSpec":
        I, J = tuple(sorted(I)), tuple(sorted(J))
        delta = target.mu_sum(I) - target.nu_sum(J)
        if delta == 0:
            raise OnWall(f"target lies on the wall {I},{J}", wall=(I, J))
        if delta < 0 and orient:
            I = tuple(i for i in range(1, target.m + 1) if i not in I)
            J = tuple(j for j in range(1, target.n + 1) if j not in J)
            delta = -delta
        Jc = [j for j in range(1, target.n + 1) if j not in J]
        return cls(I, J, delta, target.mu_sum(I), target.nu_sum(Jc))

    @property
    def wall(self) -> Wall:
        return Wall(self.I, self.J)

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J), "delta": self.delta, "d1": self.d1, "d2": self.d2}


def find_adjacent(target: HurwitzInput, spec: WallCrossingSpec, seed: int = 0,
                  max_d: int | None = None, tries: int = 200000) -> HurwitzInput:
    """A point whose chamber differs from the target's at exactly the given wall."""
    sig = chamber_signature(target)
    wall = canonical_wall(spec.I, spec.J, target.m, target.n)
    rng = random.Random(seed)
    max_d = max_d or max(2 * target.d, 12)
    lo = max(target.m, target.n, 2)
    for _ in range(tries):
        d = rng.randint(lo, max_d)
        cand = HurwitzInput(_random_composition(rng, d, target.m), _random_composition(rng, d, target.n))
        if is_on_wall(cand):
            continue
        if sig.differing_walls(chamber_signature(cand)) == [wall]:
            return cand
    raise NotAdjacent(f"no chamber adjacent across {wall} found with d <= {max_d}")


def _check_adjacent(p1: HurwitzInput, p2: HurwitzInput, spec: WallCrossingSpec) -> None:
    diff = chamber_signature(p1).differing_walls(chamber_signature(p2))
    wall = canonical_wall(spec.I, spec.J, p1.m, p1.n)
    if diff not in ([], [wall]):
        raise NotAdjacent(f"chambers differ at {[str(w) for w in diff]}, not only at {wall}")


def wall_crossing_lhs(target: HurwitzInput, spec: WallCrossingSpec, p1: HurwitzInput,
                      p2: HurwitzInput, N: int) -> LaurentSeries:
    """S^2(target) - S^1(target): chamber closed forms of p2 and p1 evaluated at the target."""
    _check_adjacent(p1, p2, spec)
    s2 = evaluate_series(closed_form(p2), target, N)
    s1 = evaluate_series(closed_form(p1), target, N)
    return s2 - s1


def sigma_ratio_product(spec: WallCrossingSpec, d: int, N: int) -> LaurentSeries:
    """varsigma(d1 z)/varsigma(delta d1 z) * varsigma(d2 z)/varsigma(delta d2 z) * varsigma(delta d z)/varsigma(d z)."""
    w = N + 2
    out = sigma_series(spec.d1, w) * inv_sigma_series(spec.delta * spec.d1, w)
    out = out * sigma_series(spec.d2, w) * inv_sigma_series(spec.delta * spec.d2, w)
    out = out * sigma_series(spec.delta * d, w) * inv_sigma_series(d, w)
    return out.truncate(N)


def sub_inputs(target: HurwitzInput, spec: WallCrossingSpec) -> tuple[HurwitzInput, HurwitzInput]:
    Ic = [i for i in range(1, target.m + 1) if i not in spec.I]
    Jc = [j for j in range(1, target.n + 1) if j not in spec.J]
    mu_I = [target.mu[i - 1] for i in spec.I]
    nu_J = [target.nu[j - 1] for j in spec.J] + [spec.delta]
    mu_Ic = [target.mu[i - 1] for i in Ic] + [spec.delta]
    nu_Jc = [target.nu[j - 1] for j in Jc]
    first = HurwitzInput(tuple(sorted(mu_I, reverse=True)), tuple(sorted(nu_J, reverse=True)))
    second = HurwitzInput(tuple(sorted(mu_Ic, reverse=True)), tuple(sorted(nu_Jc, reverse=True)))
    return first, second


def wall_crossing_rhs(target: HurwitzInput, spec: WallCrossingSpec, N: int) -> LaurentSeries:
    if spec.delta <= 0:
        raise NonPositiveDelta(f"delta = {spec.delta}; evaluate on the side where it is positive")
    first, second = sub_inputs(target, spec)
    for sub in (first, second):
        if is_on_wall(sub):
            raise SubInputOnWall(f"sub-input {sub.mu},{sub.nu} lies on a wall")
    h1 = evaluate_series(closed_form(first), first, N)
    h2 = evaluate_series(closed_form(second), second, N)
    ratio = sigma_ratio_product(spec, target.d, N)
    return (ratio * h1 * h2).scale(spec.delta ** 2).truncate(N)
