"""(q,y)-Laguerre polynomials and the Al-Salam--Chihara family.

The signed polynomials satisfy

    L_{n+1} = (x - (y[n+a+1]_q + [n]_q)) L_n - y [n]_q [n+a]_q L_{n-1}

with L_0 = 1, L_{-1} = 0 and integer a >= -1.  The signless form is
(-1)^n L_n(-x), whose x-coefficients lie in N[y, q].  Three independent
routes produce these polynomials: the recurrence, the explicit sum and the
truncated generating function.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence, Tuple

from .errors import InvalidRange, NegativeExponentResidue, SingularEvaluationPoint
from .mpoly import (
    ONE, ZERO, MPoly, Q, T, X, Y, A, B, TruncationPolicy,
    coeff_in_var, eval_rat, mul, series_inverse, substitute, truncate,
)
from .qnum import q_binomial, q_factorial, q_int


def _check_alpha(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha < -1:
        raise InvalidRange(f"alpha must be an integer >= -1, got {alpha!r}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise InvalidRange(f"n must be a non-negative integer, got {n!r}")


@dataclass(frozen=True)
class LagPoly:
    n: int
    alpha: int
    signless: bool
    poly: MPoly

    def __post_init__(self):
        _check_alpha(self.alpha)
        if self.poly.degree("x") != self.n or coeff_in_var(self.poly, "x", self.n) != ONE:
            raise ValueError("Laguerre polynomial must be monic of x-degree n")

    def coeff(self, k: int) -> MPoly:
        return coeff_in_var(self.poly, "x", k)


@lru_cache(maxsize=None)
def _signed(n: int, alpha: int) -> MPoly:
    if n == 0:
        return ONE
    m = n - 1
    prev = _signed(m, alpha)
    diag = Y * q_int(m + alpha + 1) + q_int(m)
    out = (X - diag) * prev
    if m >= 1:
        out = out - Y * q_int(m) * q_int(m + alpha) * _signed(m - 1, alpha)
    return out


def _flip(p: MPoly, n: int) -> MPoly:
    """(-1)^n p(-x)."""
    terms = {e: (c if (n - e[0]) % 2 == 0 else -c) for e, c in p.terms().items()}
    return MPoly(terms)


def laguerre_rec(n: int, alpha: int) -> LagPoly:
    """Signed L^(alpha)_n(x; y; q) from the three-term recurrence."""
    _check_n(n)
    _check_alpha(alpha)
    return LagPoly(n, alpha, False, _signed(n, alpha))


def laguerre_signless(n: int, alpha: int) -> LagPoly:
    _check_n(n)
    _check_alpha(alpha)
    return LagPoly(n, alpha, True, _flip(_signed(n, alpha), n))


def coeff_l(n: int, k: int, alpha: int) -> MPoly:
    """Coefficient of x^k in the signless polynomial of degree n."""
    if not 0 <= k <= n:
        raise InvalidRange("need 0 <= k <= n")
    return laguerre_signless(n, alpha).coeff(k)


def _falling_q_factorial_ratio(n: int, k: int) -> MPoly:
    """n!_q / k!_q as the product [k+1]_q ... [n]_q."""
    out = ONE
    for i in range(k + 1, n + 1):
        out = out * q_int(i)
    return out


def laguerre_explicit(n: int, alpha: int) -> LagPoly:
    """Signless polynomial from the explicit sum over k.

    The k-th summand carries q^{k(k-n)} and factors x + (1 - y q^{-j})[j]_q.
    Writing each factor as q^{-j}(q^j x + (q^j - y)[j]_q) leaves a single
    monomial q^{e_k} with e_k = k(k-n) - k(k-1)/2, possibly negative.  All
    summands are lifted by the same power q^D, added, and the sum is divided
    back by q^D; any surviving negative exponent is a bug, not a valid state.
    """
    _check_n(n)
    _check_alpha(alpha)
    if n == 0:
        return LagPoly(0, alpha, True, ONE)
    parts: List[Tuple[int, MPoly]] = []
    for k in range(n + 1):
        binom = q_binomial(n + alpha, k + alpha)
        if not binom:
            continue
        prod = ONE
        for j in range(k):
            qj = Q ** j
            prod = prod * (qj * X + (qj - Y) * q_int(j))
        body = _falling_q_factorial_ratio(n, k) * binom * Y ** (n - k) * prod
        parts.append((k * (k - n) - k * (k - 1) // 2, body))
    lift = max(0, -min(e for e, _ in parts))
    total = ZERO
    for e, body in parts:
        total = total + body.shift("q", e + lift)
    if lift:
        if any(exps[2] < lift for exps in total.terms()):
            raise NegativeExponentResidue(
                f"explicit formula left a negative q-power for n={n}, alpha={alpha}")
        total = total.shift("q", -lift)
    return LagPoly(n, alpha, True, total)


# -- generating function -------------------------------------------------

def gf_truncated(alpha: int, t_max: int, q_max: int) -> MPoly:
    """The infinite-product generating function modulo (t^t_max, q^q_max).

    Factors with index k >= q_max are congruent to 1, so every product runs
    over k < q_max; each denominator factor is inverted as a series.
    """
    _check_alpha(alpha)
    if t_max < 1 or q_max < 1:
        raise InvalidRange("t_max and q_max must be positive")
    policy = TruncationPolicy(max_q_degree=q_max, max_t_degree=t_max)
    c = (ONE - Q) * X + Y + ONE
    out = ONE
    for k in range(q_max):
        out = mul(out, ONE - T.shift("q", k), policy)
        if k + alpha + 1 < q_max:
            out = mul(out, ONE - (Y * T).shift("q", k + alpha + 1), policy)
    for k in range(q_max):
        denom = ONE - (c * T).shift("q", k) + (Y * T * T).shift("q", 2 * k)
        out = mul(out, series_inverse(truncate(denom, policy), policy), policy)
    return out


def gf_from_polynomials(alpha: int, t_max: int, q_max: int) -> MPoly:
    """Sum of signless L_n * (n!_q)^{-1} t^n over n < t_max, reduced mod q^q_max."""
    policy = TruncationPolicy(max_q_degree=q_max, max_t_degree=t_max)
    out = ZERO
    for n in range(t_max):
        inv = series_inverse(q_factorial(n), policy)
        out = out + mul(laguerre_signless(n, alpha).poly, inv, policy).shift("t", n)
    return truncate(out, policy)


def gf_coefficient(gf: MPoly, n: int, q_max: int) -> MPoly:
    """Recover the degree-n polynomial from its t^n/n!_q slot modulo q^q_max."""
    policy = TruncationPolicy(max_q_degree=q_max)
    return mul(coeff_in_var(gf, "t", n), q_factorial(n), policy)


def gf_factorization_check(alpha: int, t_max: int, q_max: int) -> bool:
    policy = TruncationPolicy(max_q_degree=q_max, max_t_degree=t_max)
    full = gf_truncated(alpha, t_max, q_max)
    at_zero = substitute(full, "x", 0)
    base = gf_truncated(-1, t_max, q_max)
    return full == mul(at_zero, base, policy)


def zero_gf_closed_form(alpha: int, t_max: int) -> List[MPoly]:
    """Numerators prod_{k<=n}[alpha+k]_q y^n of the x = 0 series, n < t_max."""
    _check_alpha(alpha)
    out = []
    acc = ONE
    for n in range(t_max):
        if n:
            acc = acc * q_int(alpha + n) * Y
        out.append(acc)
    return out


def _y_int(k: int) -> MPoly:
    return MPoly({(0, i, 0, 0, 0, 0, 0): 1 for i in range(k)})


def prop_G_check(n: int) -> bool:
    """L^(-1)_{n+1} = x sum_k [n,k]_q k!_q [k+1]_y L^(-1)_{n-k}."""
    _check_n(n)
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + q_binomial(n, k) * q_factorial(k) * _y_int(k + 1) * laguerre_signless(n - k, -1).poly
    return laguerre_signless(n + 1, -1).poly == X * rhs


def connection_check(n: int, alpha: int, beta: int) -> bool:
    """Expand the alpha family in the beta family (beta <= alpha)."""
    _check_n(n)
    if beta < -1 or beta > alpha:
        raise InvalidRange("need -1 <= beta <= alpha")
    rhs = ZERO
    for k in range(n + 1):
        coef = q_binomial(n, k)
        for j in range(k):
            coef = coef * q_int(alpha - beta + j)
        if not coef:
            continue
        rhs = rhs + coef * (Y ** k).shift("q", (beta + 1) * k) * laguerre_signless(n - k, beta).poly
    return laguerre_signless(n, alpha).poly == rhs


# -- Al-Salam--Chihara ---------------------------------------------------

@lru_cache(maxsize=None)
def asc_rec(n: int) -> MPoly:
    """Q_n(x; a, b | q) from its three-term recurrence."""
    _check_n(n)
    if n == 0:
        return ONE
    m = n - 1
    qm = Q ** m
    out = (2 * X - (A + B) * qm) * asc_rec(m)
    if m >= 1:
        out = out - (ONE - qm) * (ONE - A * B * Q ** (m - 1)) * asc_rec(m - 1)
    return out


def _poch(a: Fraction, q: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= 1 - a * q ** i
    return out


def asc_explicit_eval(n: int, u, a, b, q) -> Fraction:
    """Exact value of Q_n at x = (u + 1/u)/2 from the terminating 3phi2 sum."""
    u, a, b, q = (Fraction(v) for v in (u, a, b, q))
    if u == 0 or a == 0 or q == 0:
        raise SingularEvaluationPoint("u, a and q must be non-zero")
    ab = a * b
    if _poch(q, q, n) == 0 or _poch(ab, q, n) == 0:
        raise SingularEvaluationPoint("vanishing denominator (q;q)_k or (ab;q)_k")
    total = Fraction(0)
    qn_inv = q ** (-n)
    for k in range(n + 1):
        total += (_poch(qn_inv, q, k) * _poch(a * u, q, k) * _poch(a / u, q, k)
                  / (_poch(ab, q, k) * _poch(q, q, k)) * q ** k)
    return _poch(ab, q, n) / a ** n * total


def asc_rec_eval(n: int, x, a, b, q) -> Fraction:
    return eval_rat(asc_rec(n), {"x": x, "a": a, "b": b, "q": q})


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def asc_sample_points(seed: int, count: int, n_max: int) -> List[Tuple[Fraction, ...]]:
    """Seeded (u, a, b, q) points at which the explicit sum is defined for all n <= n_max."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        u, a, b, q = (random_rational(rng) for _ in range(4))
        if u == 0 or a == 0 or q in (0, 1, -1):
            continue
        if _poch(q, q, n_max) == 0 or _poch(a * b, q, n_max) == 0:
            continue
        points.append((u, a, b, q))
    return points


def rescaling_samples(seed: int, count: int) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """Seeded (s, q, x) points with s != 0 and q not in {0, 1}."""
    rng = random.Random(seed)
    points = []
    seen = set()
    while len(points) < count:
        s, q, x = (random_rational(rng, 99) for _ in range(3))
        if s == 0 or q in (0, 1) or (s, q, x) in seen:
            continue
        seen.add((s, q, x))
        points.append((s, q, x))
    return points


def rescaling_check(n: int, alpha: int, samples: Sequence[Tuple]) -> bool:
    """Signless L_n(x; s^2 | q) against the rescaled Al-Salam--Chihara value.

    With y = s^2 every square root is the rational s, so both sides are exact.
    Clearing the powers of (1-q) and s turns the identity into a polynomial
    one in (s, q, x) whose degree d grows linearly in n and alpha.  A non-zero
    polynomial of degree d vanishes at a uniform point of a finite set S with
    probability at most d/|S|, so independent points drawn from the ~6000
    rationals of height <= 99 certify the identity up to a negligible error.
    """
    lhs_poly = laguerre_signless(n, alpha).poly
    for s, q, x in samples:
        s, q, x = Fraction(s), Fraction(q), Fraction(x)
        if s == 0 or q in (0, 1):
            raise SingularEvaluationPoint("need s != 0 and q not in {0, 1}")
        lhs = eval_rat(lhs_poly, {"x": x, "y": s * s, "q": q})
        z = ((1 - q) * x + s * s + 1) / (2 * s)
        rhs = (s / (1 - q)) ** n * asc_rec_eval(n, z, 1 / s, s * q ** (alpha + 1), q)
        if lhs != rhs:
            return False
    return True


def classical_coeffs(n: int, alpha: int) -> List[int]:
    """Coefficients of x^0..x^n in the classical monic Laguerre polynomial.

    The coefficient of x^k is (-1)^(n-k) n!/k! C(n+alpha, n-k).
    """
    _check_n(n)
    _check_alpha(alpha)
    out = []
    for k in range(n + 1):
        out.append((-1) ** (n - k) * factorial(n) // factorial(k) * _binom(n + alpha, n - k))
    return out


def _binom(m: int, j: int) -> int:
    # C(-1, 0) = 1 keeps L_0^(-1) = 1
    if j < 0:
        return 0
    if m < 0:
        return 1 if j == 0 else 0
    return comb(m, j)
