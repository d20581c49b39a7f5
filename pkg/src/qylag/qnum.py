"""q-integers, q-factorials, q-binomials and friends, all as polynomials in q."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .mpoly import ONE, ZERO, MPoly


@lru_cache(maxsize=None)
def q_int(n: int) -> MPoly:
    """[n]_q = 1 + q + ... + q^(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return MPoly({(0, 0, i, 0, 0, 0, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> MPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


def q_binomial(n: int, k: int) -> MPoly:
    """Gaussian binomial, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return _q_binomial(n, k)


@lru_cache(maxsize=None)
def _q_binomial(n: int, k: int) -> MPoly:
    if k == 0 or k == n:
        return ONE
    # Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    return _q_binomial(n - 1, k - 1) + _q_binomial(n - 1, k).shift("q", k)


def q_multinomial(parts: Sequence[int]) -> MPoly:
    """(sum parts)!_q / prod parts_i!_q, built from q-binomials of partial sums.

    Any negative part makes the coefficient zero.
    """
    if any(p < 0 for p in parts):
        return ZERO
    result = ONE
    total = 0
    for p in parts:
        total += p
        result = result * q_binomial(total, p)
    return result


def q_pochhammer(a: MPoly, n: int) -> MPoly:
    """(a; q)_n = prod_{i<n} (1 - a q^i)."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    a = MPoly.coerce(a)
    result = ONE
    for i in range(n):
        result = result * (ONE - a.shift("q", i))
    return result


def rising_factorial(x0, n: int):
    """(x0)_n = x0 (x0+1) ... (x0+n-1); works for ints, Fractions and MPoly."""
    if n < 0:
        raise ValueError("rising_factorial needs n >= 0")
    result = 1 if not isinstance(x0, MPoly) else ONE
    for i in range(n):
        result = result * (x0 + i)
    return result
