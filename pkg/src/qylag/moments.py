"""Moments, the moment functional, orthogonality and linearization.

Moments come from two path-counting engines: weighted Motzkin paths for the
J-fraction (level weight b_h, down weight lambda_h) and weighted Dyck paths
for the S-fraction (down weight gamma_h from height h).  Both are plain
transfer-matrix dynamic programs, so everything stays polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Sequence

from .errors import DegreeTooHigh, InvalidRange
from .laguerre import laguerre_rec
from .mpoly import BETA, ONE, ZERO, MPoly, Y, coeff_in_var, substitute
from .qnum import q_binomial, q_factorial, q_int, q_multinomial, rising_factorial


@dataclass(frozen=True)
class JCoeffs:
    b: Sequence[MPoly]    # b[0], b[1], ...
    lam: Sequence[MPoly]  # lam[0] unused; lam[1], lam[2], ...


@dataclass(frozen=True)
class SCoeffs:
    gamma: Sequence[MPoly]  # gamma[0] unused; gamma[1], gamma[2], ...


@dataclass(frozen=True)
class MomentTable:
    mu: List[MPoly]

    def __post_init__(self):
        if not self.mu or self.mu[0] != ONE:
            raise ValueError("mu_0 must be 1")

    @property
    def N(self) -> int:
        return len(self.mu) - 1

    def __getitem__(self, n: int) -> MPoly:
        return self.mu[n]


def laguerre_jcoeffs(alpha: int, N: int) -> JCoeffs:
    b = [Y * q_int(n + alpha + 1) + q_int(n) for n in range(N + 1)]
    lam = [ZERO] + [Y * q_int(n) * q_int(n + alpha) for n in range(1, N + 1)]
    return JCoeffs(b, lam)


def laguerre_scoeffs(N: int, alpha: int = None) -> SCoeffs:
    """gamma_{2n} = [n]_q, gamma_{2n+1} = y([n]_q + beta q^n).

    With ``alpha`` left as None, beta stays a free variable; otherwise it is
    replaced by [alpha+1]_q.
    """
    beta = BETA if alpha is None else q_int(alpha + 1)
    gamma = [ZERO]
    for h in range(1, 2 * N + 1):
        k = h // 2
        if h % 2 == 0:
            gamma.append(q_int(k))
        else:
            gamma.append(Y * (q_int(k) + beta.shift("q", k)))
    return SCoeffs(gamma)


def moments_jfrac(N: int, coeffs: JCoeffs) -> MomentTable:
    if N < 0:
        raise InvalidRange("N must be non-negative")
    row: List[MPoly] = [ONE]
    mu = [ONE]
    for step in range(1, N + 1):
        # heights above N - step can no longer return to 0
        top = min(step, N - step)
        new = [ZERO] * (top + 1)
        for h, v in enumerate(row):
            if not v:
                continue
            if h + 1 <= top:
                new[h + 1] = new[h + 1] + v
            if h <= top:
                new[h] = new[h] + v * coeffs.b[h]
            if h >= 1 and h - 1 <= top:
                new[h - 1] = new[h - 1] + v * coeffs.lam[h]
        row = new
        mu.append(row[0])
    return MomentTable(mu)


def moments_sfrac(N: int, coeffs: SCoeffs) -> MomentTable:
    if N < 0:
        raise InvalidRange("N must be non-negative")
    row: List[MPoly] = [ONE]
    mu = [ONE]
    for step in range(1, 2 * N + 1):
        top = min(step, 2 * N - step)
        new = [ZERO] * (top + 1)
        for h, v in enumerate(row):
            if not v:
                continue
            if h + 1 <= top:
                new[h + 1] = new[h + 1] + v
            if h >= 1 and h - 1 <= top:
                new[h - 1] = new[h - 1] + v * coeffs.gamma[h]
        row = new
        if step % 2 == 0:
            mu.append(row[0])
    return MomentTable(mu)


def laguerre_moments(N: int, alpha: int) -> MomentTable:
    if alpha < 0:
        raise InvalidRange("moments need alpha >= 0")
    return moments_jfrac(N, laguerre_jcoeffs(alpha, N))


def specialize_beta(table: MomentTable, alpha: int) -> MomentTable:
    return MomentTable([substitute(m, "beta", q_int(alpha + 1)) for m in table.mu])


def functional_L(p: MPoly, table: MomentTable) -> MPoly:
    """Apply the linear functional x^k -> mu_k."""
    deg = p.degree("x")
    if deg > table.N:
        raise DegreeTooHigh(f"x-degree {deg} exceeds moment table size {table.N}")
    out = ZERO
    for k in range(deg + 1):
        c = coeff_in_var(p, "x", k)
        if c:
            out = out + c * table[k]
    return out


def norm_square(n: int, alpha: int) -> MPoly:
    """y^n n!_q prod_{j<=n} [alpha+j]_q."""
    out = Y ** n * q_factorial(n)
    for j in range(1, n + 1):
        out = out * q_int(alpha + j)
    return out


def orthogonality_check(n: int, m: int, alpha: int, table: MomentTable = None) -> bool:
    if alpha < 0:
        raise InvalidRange("orthogonality needs alpha >= 0")
    table = table or laguerre_moments(n + m, alpha)
    value = functional_L(laguerre_rec(n, alpha).poly * laguerre_rec(m, alpha).poly, table)
    expected = norm_square(n, alpha) if n == m else ZERO
    return value == expected


def linearization_formula(n1: int, n2: int, n3: int, alpha: int) -> MPoly:
    """Closed-form value of the functional on L_{n1} L_{n2} L_{n3}.

    Terms where a multinomial part goes negative vanish, which bounds s by
    max(n_i) <= s <= (n1+n2+n3)/2.
    """
    if alpha < 0 or min(n1, n2, n3) < 0:
        raise InvalidRange("need alpha >= 0 and n_i >= 0")
    total_n = n1 + n2 + n3
    inner = ZERO
    for s in range(max(n1, n2, n3), total_n // 2 + 1):
        r = total_n - 2 * s
        head = Y ** s * q_multinomial([r, s - n3, s - n2, s - n1]) * q_binomial(alpha + s, s)
        tail = ZERO
        for k in range(r + 1):
            e = comb(k + 1, 2) + comb(r - k, 2) + k * alpha
            tail = tail + (q_binomial(r, k) * Y ** k).shift("q", e)
        inner = inner + head * tail
    return q_factorial(n1) * q_factorial(n2) * q_factorial(n3) * inner


def linearization_via_moments(n1: int, n2: int, n3: int, alpha: int) -> MPoly:
    if alpha < 0:
        raise InvalidRange("need alpha >= 0")
    prod = laguerre_rec(n1, alpha).poly * laguerre_rec(n2, alpha).poly * laguerre_rec(n3, alpha).poly
    return functional_L(prod, laguerre_moments(n1 + n2 + n3, alpha))


def classical_linearization(n1: int, n2: int, n3: int, alpha: int) -> int:
    """The q = y = 1 linearization sum; negative factorial arguments give 0."""
    if alpha < 0:
        raise InvalidRange("need alpha >= 0")
    total_n = n1 + n2 + n3
    out = Fraction(0)
    for s in range(0, total_n // 2 + 1):
        args = (s - n1, s - n2, s - n3, total_n - 2 * s)
        if min(args) < 0:
            continue
        num = factorial(n1) * factorial(n2) * factorial(n3) * 2 ** (total_n - 2 * s) * rising_factorial(alpha + 1, s)
        den = 1
        for a in args:
            den *= factorial(a)
        out += Fraction(num, den)
    if out.denominator != 1:
        raise ArithmeticError("linearization sum is not an integer")
    return int(out)
