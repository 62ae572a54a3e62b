"""Self-verification suites run by ``doublehurwitz verify``.

Each check is a module-level function returning (ok, witness) so suites can
be farmed out to worker processes. Reports list checks in registration
order whatever order they finish in.
"""

from __future__ import annotations

import os
from itertools import permutations
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .chambers import (WallCrossingSpec, bernoulli_relation, chamber_representatives, chamber_signature,
                       find_adjacent, interpolate_polynomial, sample_points, sigma_ratio_product,
                       symbolic_polynomial, verify_spp, wall_crossing_lhs, wall_crossing_rhs)
from .fock import Alpha, F2, WedgeVector, apply_alpha, apply_E, vacuum_expectation
from .partitions import (HurwitzInput, character_column, f2_from_frobenius,
                         central_character_f2, hurwitz_oracle, is_on_wall, partitions_of)
from .patterns import (closed_form, evaluate_series, hurwitz_number, is_totally_negative,
                       product_formula, run_algorithm)
from .series import LaurentSeries, exp_series, fmt_rational, sigma_series

SUITES = ("oracle-equivalence", "fock-identities", "spp", "wallcross")


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable
    args: tuple = ()


@dataclass(frozen=True)
class Result:
    name: str
    ok: bool
    witness: str = ""


# -- partitions of bounded length ---------------------------------------------

def bounded_inputs(max_d: int, max_len: int, min_d: int = 1):
    for d in range(min_d, max_d + 1):
        parts = [p for p in partitions_of(d) if len(p) <= max_len]
        for mu in parts:
            for nu in parts:
                inp = HurwitzInput(tuple(mu), tuple(nu))
                if not is_on_wall(inp):
                    yield inp


def shape_inputs(d: int, m: int, n: int):
    mus = [p for p in partitions_of(d) if len(p) == m]
    nus = [p for p in partitions_of(d) if len(p) == n]
    for mu in mus:
        for nu in nus:
            inp = HurwitzInput(tuple(mu), tuple(nu))
            if not is_on_wall(inp):
                yield inp


# -- oracle equivalence -----------------------------------------------------------

def check_oracle_equivalence(max_d: int = 7, max_len: int = 3, max_g: int = 3):
    count = 0
    for inp in bounded_inputs(max_d, max_len):
        for g in range(max_g + 1):
            r = inp.r_for_genus(g)
            a, b = hurwitz_number(inp, r), hurwitz_oracle(inp, r)
            if a != b:
                return False, f"{inp.mu},{inp.nu} r={r}: closed form {fmt_rational(a)} vs oracle {fmt_rational(b)}"
            count += 1
    return True, f"{count} values"


def check_oracle_methods(max_d: int = 6):
    for d in range(1, max_d + 1):
        for mu in partitions_of(d):
            for nu in partitions_of(d):
                inp = HurwitzInput(tuple(mu), tuple(nu))
                for r in range(4):
                    if hurwitz_oracle(inp, r, "sparse") != hurwitz_oracle(inp, r, "full"):
                        return False, f"{mu},{nu} r={r}"
    return True, ""


def check_ordering_invariance(N: int = 25):
    cases = [((5, 2), (4, 3)), ((4, 3), (5, 2)), ((5, 3, 1), (7, 2)), ((8, 1), (5, 2, 2))]
    for mu, nu in cases:
        inp = HurwitzInput(mu, nu)
        ref = None
        for mo in permutations(range(1, inp.m + 1)):
            for no in permutations(range(1, inp.n + 1)):
                s = evaluate_series(closed_form(inp, mo, no), inp, N)
                if ref is None:
                    ref = s
                elif not s.equal_through(ref, N):
                    return False, f"{mu},{nu} ordering {mo}/{no}"
    return True, ""


def check_singleton_characterization(max_d: int = 10):
    count = 0
    for d in range(2, max_d + 1):
        for m, n in ((2, 2), (2, 3), (3, 2)):
            for inp in shape_inputs(d, m, n):
                pats = run_algorithm(inp)
                tn = is_totally_negative(inp)
                if (len(pats) == 1) != tn:
                    return False, f"{inp.mu},{inp.nu}: {len(pats)} patterns, totally negative={tn}"
                if tn and sorted(product_formula(inp)) != sorted(pats[0].sigma_args(inp)):
                    return False, f"{inp.mu},{inp.nu}: product formula {product_formula(inp)}"
                count += 1
    return True, f"{count} inputs"


# -- Fock space ---------------------------------------------------------------------

def check_alpha_commutators(max_size: int = 8, max_index: int = 4):
    idx = [k for k in range(-max_index, max_index + 1) if k]
    for size in range(max_size + 1):
        for lam in partitions_of(size):
            for a in idx:
                for b in idx:
                    D = size + abs(a) + abs(b)
                    v = WedgeVector.basis(lam, D)
                    lhs = apply_alpha(a, apply_alpha(b, v)) - apply_alpha(b, apply_alpha(a, v))
                    rhs = v.scale(a) if a == -b else WedgeVector({}, D)
                    if not lhs.equal_through(rhs, 0):
                        return False, f"[a{a}, a{b}] on v{tuple(lam)}"
    return True, ""


def check_mn_lemma(max_d: int = 6):
    for d in range(1, max_d + 1):
        for mu in partitions_of(d):
            v = WedgeVector.vacuum(d)
            for part in mu:
                v = apply_alpha(-part, v)
            want = character_column(mu)
            got = {lam: c for lam, c in v.terms.items()}
            if got != want:
                return False, f"mu={tuple(mu)}"
    return True, ""


def check_f2_eigenvalues(max_d: int = 12):
    for d in range(max_d + 1):
        for lam in partitions_of(d):
            if f2_from_frobenius(lam) != central_character_f2(lam):
                return False, f"{tuple(lam)}"
    return True, ""


def check_e_conjugation(max_n: int = 4, max_D: int = 8, N: int = 6):
    """e^{zF2} alpha_{-n} e^{-zF2} has the matrix elements of E_{-n}(nz)."""
    for n in range(1, max_n + 1):
        for size in range(0, max_D - n + 1):
            for lam in partitions_of(size):
                v = WedgeVector.basis(lam, max_D)
                got = apply_E(-n, n, v, N)
                src = central_character_f2(lam)
                for mu, c in apply_alpha(-n, v).terms.items():
                    want = exp_series(central_character_f2(mu) - src, N).scale(c)
                    if not got.coefficient(mu).equal_through(want, N):
                        return False, f"n={n}, v{tuple(lam)} -> v{tuple(mu)}"
                if set(got.terms) != set(apply_alpha(-n, v).terms):
                    return False, f"n={n}, v{tuple(lam)} support"
    return True, ""


def check_e_commutator(max_size: int = 5, N: int = 5):
    """[E_r(az), E_s(bz)] = varsigma((r b - s a) z) E_{r+s}((a+b)z) on basis vectors."""
    cases = [(1, 2, -2, 3), (2, 1, -1, 2), (-1, 1, 3, 2), (1, 3, 0, 2), (0, 2, -2, 1),
             (2, -1, -3, 2), (-1, 2, -2, 3), (3, 1, -3, 2)]
    for r, a, s, b in cases:
        for size in range(max_size + 1):
            for lam in partitions_of(size):
                D = size + abs(r) + abs(s)
                v = WedgeVector.basis(lam, D)
                # the E_0 poles cost one order each; work two orders higher
                W = N + 3
                lhs = apply_E(r, a, apply_E(s, b, v, W), W) - apply_E(s, b, apply_E(r, a, v, W), W)
                arg = r * b - s * a
                rhs = apply_E(r + s, a + b, v, W)
                rhs = WedgeVector({k: c * sigma_series(arg, W) for k, c in rhs.terms.items()}, D)
                if not lhs.equal_through(rhs, N):
                    return False, f"r={r},a={a},s={s},b={b} on v{tuple(lam)}"
    return True, ""


def check_hurwitz_wedge(max_d: int = 5, max_r: int = 4):
    for d in range(1, max_d + 1):
        for mu in partitions_of(d):
            for nu in partitions_of(d):
                inp = HurwitzInput(tuple(mu), tuple(nu))
                for r in range(max_r + 1):
                    ops = [Alpha(p) for p in mu] + [F2()] * r + [Alpha(-q) for q in nu]
                    val = vacuum_expectation(ops, 0).coefficient(0)
                    norm = 1
                    for p in mu + nu:
                        norm *= p
                    if Fraction(val, norm) != hurwitz_oracle(inp, r):
                        return False, f"{mu},{nu} r={r}"
    return True, ""


# -- chambers -------------------------------------------------------------------------

def spp_cases():
    """(sample, g, seed) triples covering the polynomiality checks."""
    cases = []
    for inp in chamber_representatives(2, 2, 8).values():
        for g in range(3):
            cases.append((inp, g))
    for m, n in ((2, 3), (3, 2)):
        reps = list(chamber_representatives(m, n, 9).values())
        for inp in reps[:: max(1, len(reps) // 3)][:3]:
            for g in range(2):
                cases.append((inp, g))
    for nu in ((2, 1), (3, 2, 1), (2, 2, 1, 1), (4, 3, 2, 1)):
        inp = HurwitzInput((sum(nu),), nu)
        for g in range(4):
            if len(nu) == 4 and g == 3:
                continue
            cases.append((inp, g))
    return cases


def check_spp_case(mu, nu, g, seed: int = 0):
    inp = HurwitzInput(mu, nu)
    cp = symbolic_polynomial(inp, g)
    samples = sample_points(chamber_signature(inp), 10, seed=seed)
    rep = verify_spp(cp, samples)
    if not rep.ok:
        return False, rep.to_text()
    return True, ""


def check_interpolation_case(mu, nu, g, seed: int = 0):
    inp = HurwitzInput(mu, nu)
    a = symbolic_polynomial(inp, g).polynomial
    b = interpolate_polynomial(inp, g, seed=seed)
    return a == b, "" if a == b else f"symbolic {a} vs interpolated {b}"


def check_bernoulli_case(mu, nu, g, with_factorial: bool = True):
    inp = HurwitzInput(mu, nu)
    for k in range(1, g + 1):
        lhs, rhs = bernoulli_relation(inp, g, k, with_factorial)
        if lhs != rhs:
            return False, f"k={k}: P_gk = {lhs} but predicted {rhs}"
    return True, ""


WALLCROSS_CASES = [((6, 1), (4, 3), (1,), (1,)),
                   ((4, 3), (6, 1), (2,), (2,)),
                   ((2, 2, 2), (3, 3), (1, 2), (1,)),
                   ((5, 1, 1), (4, 3), (1,), (1,))]


def check_wallcross_case(mu, nu, I, J, N: int = 25, seed: int = 0):
    target = HurwitzInput(mu, nu)
    spec = WallCrossingSpec.at(target, I, J)
    p1 = find_adjacent(target, spec, seed=seed)
    lhs = wall_crossing_lhs(target, spec, p1, target, N)
    rhs = wall_crossing_rhs(target, spec, N)
    if not lhs.equal_through(rhs, N):
        return False, f"LHS {lhs.to_text()} RHS {rhs.to_text()}"
    lead = sigma_ratio_product(spec, target.d, 0).coefficient(0)
    if lead != Fraction(1, spec.delta):
        return False, f"sigma ratio leading term {lead}, expected 1/{spec.delta}"
    return True, ""


def check_cyclic_identity(triples=((5, 3, 2), (7, 1, 4), (12, 5, 9)), N: int = 25):
    for a, b, c in triples:
        s = lambda x: sigma_series(x, N)
        total = s(a - b) * s(c) + s(b - c) * s(a) + s(c - a) * s(b)
        if not total.equal_through(LaurentSeries.zero(N), N):
            return False, f"({a},{b},{c})"
    return True, ""


# -- registry --------------------------------------------------------------------------

def suite_checks(suite: str) -> list[Check]:
    if suite == "oracle-equivalence":
        return [Check("oracle: sparse = full character sum, d<=6", check_oracle_methods),
                Check("closed form = oracle, d<=7, m,n<=3, g<=3", check_oracle_equivalence),
                Check("ordering invariance through z^25", check_ordering_invariance),
                Check("|CP|=1 iff totally negative, d<=10", check_singleton_characterization)]
    if suite == "fock-identities":
        return [Check("[alpha_a, alpha_b] = a delta_{a,-b}, |lam|<=8, |a|,|b|<=4", check_alpha_commutators),
                Check("prod alpha_{-mu}|0> = sum chi^lam_mu v_lam, d<=6", check_mn_lemma),
                Check("F2 eigenvalue = content sum, |lam|<=12", check_f2_eigenvalues),
                Check("e^{zF2} alpha_{-n} e^{-zF2} = E_{-n}(nz), n<=4, D<=8", check_e_conjugation),
                Check("[E_r(az), E_s(bz)] = S((rb-sa)z) E_{r+s}((a+b)z)", check_e_commutator),
                Check("<alpha F2^r alpha> = oracle, d<=5, r<=4", check_hurwitz_wedge)]
    if suite == "spp":
        out = []
        for inp, g in spp_cases():
            tag = f"{list(inp.mu)},{list(inp.nu)} g={g}"
            out.append(Check(f"polynomiality {tag}", check_spp_case, (inp.mu, inp.nu, g)))
            if inp.m > 1 and g <= 2:
                out.append(Check(f"symbolic = interpolation {tag}", check_interpolation_case, (inp.mu, inp.nu, g)))
            if g >= 1:
                out.append(Check(f"Bernoulli relation (with r!/(r-2k)!) {tag}", check_bernoulli_case,
                                 (inp.mu, inp.nu, g)))
        return out
    if suite == "wallcross":
        return [Check("cyclic varsigma identity", check_cyclic_identity)] + [
            Check(f"wall crossing {list(mu)},{list(nu)} at W({list(I)},{list(J)})", check_wallcross_case,
                  (mu, nu, I, J)) for mu, nu, I, J in WALLCROSS_CASES]
    if suite == "all":
        return [c for s in SUITES for c in suite_checks(s)]
    raise KeyError(suite)


def _run_one(check: Check) -> Result:
    try:
        ok, witness = check.func(*check.args)
    except Exception as exc:  # a crash is a failed check, reported with its cause
        ok, witness = False, f"{type(exc).__name__}: {exc}"
    return Result(check.name, bool(ok), witness)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("HW_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(suite: str, workers: int | None = None) -> list[Result]:
    checks = suite_checks(suite)
    workers = thread_cap() if workers is None else workers
    if workers <= 1 or len(checks) == 1:
        return [_run_one(c) for c in checks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, checks))


def format_report(results: list[Result]) -> str:
    lines = []
    for r in results:
        line = f"{'PASS' if r.ok else 'FAIL'}  {r.name}"
        if r.witness and not r.ok:
            line += f"\n      witness: {r.witness}"
        lines.append(line)
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
