import pytest

from qylag.combstat import moments_bruteforce
from qylag.errors import DegreeTooHigh, InvalidRange
from qylag.laguerre import laguerre_rec
from qylag.moments import (MomentTable, classical_linearization, functional_L, laguerre_jcoeffs,
                           laguerre_moments, laguerre_scoeffs, linearization_formula,
                           linearization_via_moments, moments_jfrac, moments_sfrac, norm_square,
                           orthogonality_check, specialize_beta)
from qylag.mpoly import BETA, ONE, Q, X, Y, ZERO, MPoly, is_nonnegative, substitute_many
from qylag.qnum import q_int


def test_symbolic_displays():
    mu = moments_sfrac(3, laguerre_scoeffs(3)).mu
    assert mu[0] == ONE
    assert mu[1] == Y * BETA
    assert mu[2] == Y * BETA + Y ** 2 * BETA ** 2
    assert mu[3] == Y * BETA + BETA * (1 + (2 + Q) * BETA) * Y ** 2 + Y ** 3 * BETA ** 3


@pytest.mark.parametrize("n", range(8))
def test_permutations_match_s_fraction(n):
    assert moments_bruteforce(n) == moments_sfrac(n, laguerre_scoeffs(n)).mu[n]


@pytest.mark.parametrize("alpha", [0, 1, 2])
def test_j_equals_s(alpha):
    j = laguerre_moments(8, alpha)
    s = specialize_beta(moments_sfrac(8, laguerre_scoeffs(8)), alpha)
    assert j.mu == s.mu
    assert moments_sfrac(8, laguerre_scoeffs(8, alpha)).mu == j.mu


def test_motzkin_engine_counts_paths():
    # unit weights give Motzkin numbers
    coeffs = type(laguerre_jcoeffs(0, 6))([ONE] * 7, [ZERO] + [ONE] * 6)
    assert [m.constant_term() for m in moments_jfrac(6, coeffs).mu] == [1, 1, 2, 4, 9, 21, 51]


def test_moment_table_guard():
    with pytest.raises(ValueError):
        MomentTable([Y])
    with pytest.raises(InvalidRange):
        laguerre_moments(3, -1)


def test_functional_degree_guard():
    with pytest.raises(DegreeTooHigh):
        functional_L(X ** 3, laguerre_moments(2, 0))


@pytest.mark.parametrize("alpha", [0, 1, 2])
def test_orthogonality(alpha):
    table = laguerre_moments(10, alpha)
    for n in range(6):
        for m in range(6):
            assert orthogonality_check(n, m, alpha, table)


def test_norm_square_value():
    assert norm_square(1, 0) == Y
    assert norm_square(2, 1) == Y ** 2 * q_int(2) * q_int(2) * q_int(3)
    value = functional_L(laguerre_rec(2, 1).poly ** 2, laguerre_moments(4, 1))
    assert value == norm_square(2, 1)


@pytest.mark.parametrize("alpha", [0, 1, 2])
def test_linearization_two_routes(alpha):
    for n1 in range(4):
        for n2 in range(n1, 4):
            for n3 in range(n2, 4):
                assert linearization_formula(n1, n2, n3, alpha) == linearization_via_moments(n1, n2, n3, alpha)


def test_linearization_small_values():
    assert linearization_formula(0, 0, 0, 0) == ONE
    assert linearization_formula(1, 1, 0, 0) == Y
    assert linearization_formula(1, 0, 0, 0) == ZERO


@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
def test_linearization_positivity_and_classical(alpha):
    for n1 in range(5):
        for n2 in range(n1, 5):
            for n3 in range(n2, 5):
                v = linearization_formula(n1, n2, n3, alpha)
                assert v.is_zero() or is_nonnegative(v)
                at_one = substitute_many(v, {"y": 1, "q": 1}).constant_term()
                assert at_one == classical_linearization(n1, n2, n3, alpha)


def test_classical_linearization_values():
    assert classical_linearization(1, 1, 1, 0) == 2
    assert classical_linearization(1, 1, 0, 0) == 1
    with pytest.raises(InvalidRange):
        classical_linearization(1, 1, 1, -1)
