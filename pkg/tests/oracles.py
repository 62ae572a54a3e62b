"""Independent reference computations used only by the tests.

Nothing here calls into the package: characters are coefficients of
a_delta * p_mu (Frobenius), Hurwitz numbers are counted over explicit
permutations, partition counts come from Euler's pentagonal recurrence.
"""

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import sympy


@lru_cache(maxsize=None)
def partition_count(n):
    """Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g > n:
                continue
            total += (-1) ** (k + 1) * partition_count(n - g)
        if k * (3 * k - 1) // 2 > n:
            break
        k += 1
    return total


def all_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - p, p):
            yield (p,) + rest


def _perm_sign(p):
    sign, seen = 1, set()
    for s in range(len(p)):
        if s in seen:
            continue
        x, length = s, 0
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        sign *= -1 if length % 2 == 0 else 1
    return sign


@lru_cache(maxsize=None)
def _frobenius_column(mu, k):
    """a_delta * p_mu in k variables as {exponent tuple: coefficient}."""
    delta = tuple(range(k - 1, -1, -1))
    poly = {}
    for p in permutations(range(k)):
        poly[tuple(delta[p[i]] for i in range(k))] = _perm_sign(p)
    for part in mu:
        nxt = {}
        for e, c in poly.items():
            for i in range(k):
                f = e[:i] + (e[i] + part,) + e[i + 1:]
                nxt[f] = nxt.get(f, 0) + c
        poly = {e: c for e, c in nxt.items() if c}
    return poly


def frobenius_character(lam, mu):
    """chi^lam_mu as the coefficient of x^(lam + delta) in a_delta * p_mu."""
    k = max(sum(mu), 1)
    lam = tuple(lam) + (0,) * (k - len(lam))
    target = tuple(lam[i] + k - 1 - i for i in range(k))
    return _frobenius_column(tuple(mu), k).get(target, 0)


def hook_dimension(lam):
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, p in enumerate(lam):
        for j in range(p):
            hooks *= (p - j) + (conj[j] - i) - 1
    return math.factorial(sum(lam)) // hooks


def cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def brute_hurwitz(mu, nu, r):
    """Disconnected double Hurwitz number by counting tuples of permutations.

    Counts (sigma, tau_1..tau_r, rho) with sigma of type mu, tau transpositions,
    rho of type nu and sigma tau_1 ... tau_r rho = id, divided by d!, then
    multiplied by |Aut mu| |Aut nu| (the normalization with 1/prod mu prod nu).
    """
    d = sum(mu)
    perms = list(permutations(range(d)))
    of_type = lambda t: [p for p in perms if cycle_type(p) == tuple(sorted(t, reverse=True))]
    transpositions = of_type((2,) + (1,) * (d - 2)) if d >= 2 else []
    compose = lambda a, b: tuple(a[b[i]] for i in range(d))
    inverse = lambda p: tuple(sorted(range(d), key=lambda i: p[i]))
    rho_set = set(of_type(nu))
    # dynamic programming over products sigma tau_1 ... tau_k
    counts = {}
    for s in of_type(mu):
        counts[s] = counts.get(s, 0) + 1
    for _ in range(r):
        nxt = {}
        for p, c in counts.items():
            for t in transpositions:
                q = compose(p, t)
                nxt[q] = nxt.get(q, 0) + c
        counts = nxt
    total = sum(c for p, c in counts.items() if inverse(p) in rho_set)
    return Fraction(total * automorphisms(mu) * automorphisms(nu), math.factorial(d))


def automorphisms(parts):
    out = 1
    for p in set(parts):
        out *= math.factorial(list(parts).count(p))
    return out


def central_character_by_permutations(lam):
    """C_(2) chi^lam_(2,1..1) / dim lam using the Frobenius character oracle."""
    d = sum(lam)
    transposition_class = math.comb(d, 2)
    chi = frobenius_character(tuple(lam), (2,) + (1,) * (d - 2))
    return Fraction(transposition_class * chi, frobenius_character(tuple(lam), (1,) * d))


def sympy_series_coeffs(expr, z, N):
    s = sympy.series(expr, z, 0, N + 1).removeO()
    return {k: sympy.Rational(s.coeff(z, k)) for k in range(-2, N + 1)}


@lru_cache(maxsize=None)
def _inverse_s_coefficients(g):
    """[t^2k] t / (2 sinh(t/2)) for k = 0..g, from sympy."""
    t = sympy.Symbol("t")
    s = sympy.series(t / (2 * sympy.sinh(t / 2)), t, 0, 2 * g + 2).removeO()
    return tuple(Fraction(int(c.p), int(c.q)) for c in (sympy.Rational(s.coeff(t, 2 * k)) for k in range(g + 1)))


def one_part_hurwitz(d, nu, g):
    """r! d^(r-1) [t^2g] prod S(nu_i t) / S(t) with S(t) = sinh(t/2)/(t/2)."""
    # even power series in t, stored by half-exponent
    series = list(_inverse_s_coefficients(g))
    for a in nu:
        factor = [Fraction(a ** (2 * k), 4 ** k * math.factorial(2 * k + 1)) for k in range(g + 1)]
        series = [sum(series[i] * factor[k - i] for i in range(k + 1)) for k in range(g + 1)]
    r = 2 * g - 1 + len(nu)
    return math.factorial(r) * Fraction(d) ** (r - 1) * series[g]
