"""Commutation patterns and closed forms for H_{mu,nu}(z).

Starting from

    H(z) = 1/(prod mu prod nu) < E_{mu}(0) ... E_{-nu}(nu z) ... >

every operator is a symbol E(I, J) = E_{|mu_I| - |nu_J|}(|nu_J| z). The
algorithm repeatedly takes the rightmost symbol of positive energy and
either passes it one slot to the right or replaces it and its neighbour by
their commutator

    [E(I,J), E(K,L)] = varsigma(|mu_I||nu_L| - |mu_K||nu_J|) E(I+K, J+L).

A branch dies when a positive symbol reaches the right end (it kills the
vacuum) or when the leftmost symbol is negative (it kills the covacuum; such
a symbol can never be merged again, so the branch is already zero). A branch
survives when only E([m],[n]) = E_0(dz) is left, whose expectation is
1/varsigma(dz). The record of merges along a surviving branch is a
commutation pattern.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NotTotallyNegative, OnWall
from .multipoly import MultiPoly, hurwitz_variables
from .partitions import HurwitzInput, require_off_wall
from .series import LaurentSeries, fmt_rational, inv_sigma_series, sigma_series

__all__ = [
    "Step",
    "CommutationPattern",
    "ClosedForm",
    "default_ordering",
    "parse_order",
    "run_algorithm",
    "closed_form",
    "evaluate_series",
    "hurwitz_number",
    "PhiPart",
    "phi_ordering",
    "is_totally_negative",
    "product_formula",
]

Symbol = tuple  # (frozenset I, frozenset J)


@dataclass(frozen=True)
class Step:
    """One fired commutator [E(I,J), E(K,L)], left symbol first."""

    I: frozenset
    J: frozenset
    K: frozenset
    L: frozenset

    def sigma_arg(self, at: HurwitzInput) -> int:
        return at.mu_sum(self.I) * at.nu_sum(self.L) - at.mu_sum(self.K) * at.nu_sum(self.J)

    def sigma_poly(self, m: int, n: int) -> MultiPoly:
        mus, nus, _ = hurwitz_variables(m, n)
        zero = MultiPoly(m + n - 1)

        def s(vs, idx):
            return sum((vs[i - 1] for i in idx), zero)

        return s(mus, self.I) * s(nus, self.L) - s(mus, self.K) * s(nus, self.J)

    def to_json(self) -> dict:
        return {k: sorted(getattr(self, k)) for k in "IJKL"}

    @classmethod
    def from_json(cls, data: dict) -> "Step":
        return cls(*(frozenset(data[k]) for k in "IJKL"))


@dataclass(frozen=True)
class CommutationPattern:
    steps: tuple

    def validate(self, m: int, n: int) -> None:
        if len(self.steps) != m + n - 1:
            raise AssertionError(f"pattern has {len(self.steps)} steps, expected {m + n - 1}")
        for s in self.steps:
            if s.I & s.K or s.J & s.L:
                raise AssertionError(f"overlapping step {s}")
        last = self.steps[-1]
        if last.I | last.K != frozenset(range(1, m + 1)) or last.J | last.L != frozenset(range(1, n + 1)):
            raise AssertionError("final step does not involve every part")

    def sigma_args(self, at: HurwitzInput) -> list[int]:
        return [s.sigma_arg(at) for s in self.steps]

    def step_set(self) -> frozenset:
        return frozenset(self.steps)

    def to_json(self, at: HurwitzInput | None = None) -> dict:
        out = {"steps": [s.to_json() for s in self.steps]}
        if at is not None:
            out["sigma_args"] = self.sigma_args(at)
        return out


# -- orderings ----------------------------------------------------------------

def default_ordering(inp: HurwitzInput) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Left-to-right operator order: mu smallest..largest, then nu largest..smallest.

    For sorted input this is E_{mu_m}...E_{mu_1} E_{-nu_1}...E_{-nu_n}.
    """
    mu_order = tuple(sorted(range(1, inp.m + 1), key=lambda i: (inp.mu[i - 1], -i)))
    nu_order = tuple(sorted(range(1, inp.n + 1), key=lambda j: (-inp.nu[j - 1], j)))
    return mu_order, nu_order


def parse_order(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse "2,1/1,2" into ((2, 1), (1, 2))."""
    try:
        left, right = text.split("/")
        return (tuple(int(x) for x in left.split(",") if x.strip()),
                tuple(int(x) for x in right.split(",") if x.strip()))
    except ValueError as exc:
        raise ValueError(f"bad ordering {text!r}; expected e.g. '2,1/1,2'") from exc


def _check_ordering(inp: HurwitzInput, mu_order, nu_order) -> None:
    if sorted(mu_order) != list(range(1, inp.m + 1)):
        raise ValueError(f"mu ordering {mu_order} is not a permutation of 1..{inp.m}")
    if sorted(nu_order) != list(range(1, inp.n + 1)):
        raise ValueError(f"nu ordering {nu_order} is not a permutation of 1..{inp.n}")


# -- the algorithm ------------------------------------------------------------

def run_algorithm(inp: HurwitzInput, mu_order: Sequence[int] | None = None,
                  nu_order: Sequence[int] | None = None) -> list[CommutationPattern]:
    """All nonvanishing commutation patterns for the given operator order."""
    if mu_order is None or nu_order is None:
        dm, dn = default_ordering(inp)
        mu_order = dm if mu_order is None else mu_order
        nu_order = dn if nu_order is None else nu_order
    _check_ordering(inp, mu_order, nu_order)
    full = (frozenset(range(1, inp.m + 1)), frozenset(range(1, inp.n + 1)))
    empty = frozenset()

    def energy(sym: Symbol) -> int:
        return inp.mu_sum(sym[0]) - inp.nu_sum(sym[1])

    def measure(state) -> tuple:
        return len(state), sum(len(state) - 1 - p for p, s in enumerate(state) if energy(s) > 0)

    @lru_cache(maxsize=None)
    def explore(state: tuple) -> tuple:
        if len(state) == 1:
            if state[0] != full:
                raise AssertionError(f"lone symbol {state[0]} is not the full one")
            return ((),)
        energies = [energy(s) for s in state]
        for s, e in zip(state, energies):
            if e == 0:
                raise OnWall(f"symbol E({sorted(s[0])},{sorted(s[1])}) has zero energy", wall=s)
        if energies[0] < 0:
            return ()
        p = max(i for i, e in enumerate(energies) if e > 0)
        if p == len(state) - 1:
            return ()
        left, right = state[p], state[p + 1]
        before = measure(state)
        passed = state[:p] + (right, left) + state[p + 2:]
        merged_sym = (left[0] | right[0], left[1] | right[1])
        merged = state[:p] + (merged_sym,) + state[p + 2:]
        assert measure(passed) < before and measure(merged) < before
        out = list(explore(passed))
        step = Step(left[0], left[1], right[0], right[1])
        out.extend((step,) + tail for tail in explore(merged))
        return tuple(out)

    start = tuple((frozenset({i}), empty) for i in mu_order) + \
        tuple((empty, frozenset({j})) for j in nu_order)
    patterns = [CommutationPattern(steps) for steps in explore(start)]
    for p in patterns:
        p.validate(inp.m, inp.n)
    return patterns


@dataclass(frozen=True)
class ClosedForm:
    """H(z) = 1/(prod mu prod nu varsigma(dz)) * sum_P prod_l varsigma(Q_l z)."""

    input: HurwitzInput
    mu_order: tuple
    nu_order: tuple
    patterns: tuple

    @property
    def prefactor(self) -> Fraction:
        return Fraction(1, math.prod(self.input.mu) * math.prod(self.input.nu))

    def sigma_args(self, at: HurwitzInput | None = None) -> list[list[int]]:
        at = self.input if at is None else at
        return [p.sigma_args(at) for p in self.patterns]

    def to_json(self) -> dict:
        return {
            "mu": list(self.input.mu),
            "nu": list(self.input.nu),
            "ordering": {"mu": list(self.mu_order), "nu": list(self.nu_order)},
            "prefactor": fmt_rational(self.prefactor),
            "divisor_arg": self.input.d,
            "patterns": [p.to_json(self.input) for p in self.patterns],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClosedForm":
        inp = HurwitzInput(tuple(data["mu"]), tuple(data["nu"]))
        pats = tuple(CommutationPattern(tuple(Step.from_json(s) for s in p["steps"]))
                     for p in data["patterns"])
        return cls(inp, tuple(data["ordering"]["mu"]), tuple(data["ordering"]["nu"]), pats)

    def to_text(self) -> str:
        inp = self.input
        lines = [f"mu = {list(inp.mu)}, nu = {list(inp.nu)}, d = {inp.d}",
                 f"ordering: mu {list(self.mu_order)} / nu {list(self.nu_order)}",
                 f"H(z) = {fmt_rational(self.prefactor)} / S({inp.d}z) * [sum of {len(self.patterns)} pattern(s)]"]
        for k, p in enumerate(self.patterns, 1):
            args = " ".join(f"S({a}z)" for a in p.sigma_args(inp))
            lines.append(f"  P{k}: {args}")
            for s in p.steps:
                lines.append(f"      [E({sorted(s.I)},{sorted(s.J)}), E({sorted(s.K)},{sorted(s.L)})]")
        lines.append("S(x) = exp(x/2) - exp(-x/2)")
        return "\n".join(lines)

    def to_latex(self) -> str:
        inp = self.input
        m, n = inp.m, inp.n
        denom = r"\,".join([rf"\mu_{{{i}}}" for i in range(1, m + 1)] +
                           [rf"\nu_{{{j}}}" for j in range(1, n + 1)])
        terms_sym, terms_num = [], []
        for p in self.patterns:
            terms_sym.append("".join(rf"\varsigma\big(z({_quad_tex(s, m, n)})\big)" for s in p.steps))
            terms_num.append("".join(rf"\varsigma({a}z)" for a in p.sigma_args(inp)))
        head = rf"H_{{\mu,\nu}}(z) = \frac{{1}}{{{denom}\,\varsigma(dz)}}"
        sym = head + r"\left(" + " + ".join(terms_sym) + r"\right)"
        values = "".join(rf"\cdot {x}" for x in inp.mu + inp.nu)[len(r"\cdot "):]
        num = (rf"H_{{{_tuple_tex(inp.mu)},{_tuple_tex(inp.nu)}}}(z) = "
               rf"\frac{{1}}{{{values}\,\varsigma({inp.d}z)}}\left(" + " + ".join(terms_num) + r"\right)")
        return sym + "\n" + num


def _tuple_tex(parts) -> str:
    return "(" + ",".join(str(x) for x in parts) + ")"


def _sum_tex(idx, letter: str, size: int) -> str | None:
    if not idx:
        return None
    if len(idx) == size:
        return "d"
    names = [rf"{letter}_{{{i}}}" for i in sorted(idx)]
    return names[0] if len(names) == 1 else "(" + "+".join(names) + ")"


def _quad_tex(s: Step, m: int, n: int) -> str:
    a, b = _sum_tex(s.I, r"\mu", m), _sum_tex(s.L, r"\nu", n)
    c, e = _sum_tex(s.K, r"\mu", m), _sum_tex(s.J, r"\nu", n)
    pos = f"{a}{b}" if a and b else None
    neg = f"{c}{e}" if c and e else None
    if pos and neg:
        return f"{pos}-{neg}"
    return pos or (f"-{neg}" if neg else "0")


def closed_form(inp: HurwitzInput, mu_order: Sequence[int] | None = None,
                nu_order: Sequence[int] | None = None) -> ClosedForm:
    require_off_wall(inp)
    dm, dn = default_ordering(inp)
    mu_order = tuple(dm if mu_order is None else mu_order)
    nu_order = tuple(dn if nu_order is None else nu_order)
    pats = run_algorithm(inp, mu_order, nu_order)
    return ClosedForm(inp, mu_order, nu_order, tuple(pats))


def evaluate_series(cf: ClosedForm, at: HurwitzInput | None = None, N: int = 10) -> LaurentSeries:
    """The closed form's series at ``at`` (default: its own input) through z^N."""
    at = cf.input if at is None else at
    if (at.m, at.n) != (cf.input.m, cf.input.n):
        raise ValueError("evaluation point has a different number of parts")
    k = at.m + at.n - 1
    work = N + 2
    total = LaurentSeries.zero(work + k - 1)
    cache: dict = {}
    for p in cf.patterns:
        prod = None
        for a in p.sigma_args(at):
            if a not in cache:
                cache[a] = sigma_series(a, work)
            prod = cache[a] if prod is None else prod * cache[a]
        total = total + prod
    result = (total * inv_sigma_series(at.d, work)).scale(
        Fraction(1, math.prod(at.mu) * math.prod(at.nu)))
    assert result.pole_order == 0, "the 1/z pole must cancel"
    return result.truncate(N)


def hurwitz_number(inp: HurwitzInput, r: int, N: int | None = None,
                   mu_order: Sequence[int] | None = None,
                   nu_order: Sequence[int] | None = None) -> Fraction:
    """r! [z^r] H_{mu,nu}(z) from the closed form."""
    if r < 0:
        raise ValueError("r must be non-negative")
    N = r + 2 if N is None else N
    if N < r:
        raise ValueError("truncation order below r")
    series = evaluate_series(closed_form(inp, mu_order, nu_order), inp, N)
    return math.factorial(r) * Fraction(series.coefficient(r))


# -- totally negative chambers --------------------------------------------------

@dataclass(frozen=True)
class PhiPart:
    value: int
    side: str  # "mu" or "nu"
    index: int  # 1-based label on its side

    def __str__(self):
        return f"{self.value}_{self.side}{self.index}"


def phi_ordering(inp: HurwitzInput) -> list[PhiPart]:
    """Parts in the order the all-commutator branch absorbs them.

    The branch starts by merging the largest mu with the largest nu (the
    larger of the two comes first, mu on a tie); afterwards a merged symbol
    of positive energy absorbs the next nu, a negative one the next mu.
    """
    require_off_wall(inp)
    mu_order, nu_order = default_ordering(inp)
    mus = [PhiPart(inp.mu[i - 1], "mu", i) for i in reversed(mu_order)]
    nus = [PhiPart(inp.nu[j - 1], "nu", j) for j in nu_order]
    a, b = mus.pop(0), nus.pop(0)
    order = [a, b] if a.value >= b.value else [b, a]
    energy = a.value - b.value
    while mus or nus:
        if energy > 0:
            nxt = nus.pop(0)
            energy -= nxt.value
        else:
            nxt = mus.pop(0)
            energy += nxt.value
        order.append(nxt)
    return order


def is_totally_negative(inp: HurwitzInput) -> bool:
    phi = phi_ordering(inp)
    for k in range(1, len(phi)):
        later = sum(p.value for p in phi[k + 1:] if p.side != phi[k].side)
        if not phi[k].value > later:
            return False
    return True


def product_formula(inp: HurwitzInput) -> list[int]:
    """varsigma arguments phi(l) * sum_{j<l, j opposite l} phi(j), l = 2..m+n."""
    if not is_totally_negative(inp):
        raise NotTotallyNegative(f"{inp.mu}, {inp.nu} is not in a totally negative chamber")
    phi = phi_ordering(inp)
    return [p.value * sum(q.value for q in phi[:l] if q.side != p.side)
            for l, p in enumerate(phi) if l > 0]
