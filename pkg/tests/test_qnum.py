import itertools

import pytest

from qylag.combstat import inv
from qylag.mpoly import ONE, Q, ZERO, MPoly
from qylag.qnum import q_binomial, q_factorial, q_int, q_multinomial, q_pochhammer, rising_factorial


def _inv_poly(words) -> MPoly:
    out = ZERO
    for w in words:
        out = out + Q ** inv(w)
    return out


@pytest.mark.parametrize("n", range(7))
def test_q_factorial_counts_inversions(n):
    assert q_factorial(n) == _inv_poly(itertools.permutations(range(n)))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(8) for k in range(n + 1)])
def test_q_binomial_counts_binary_word_inversions(n, k):
    words = set(itertools.permutations([1] * k + [0] * (n - k)))
    assert q_binomial(n, k) == _inv_poly(words)


def test_q_binomial_out_of_range():
    assert q_binomial(3, 4) == ZERO
    assert q_binomial(3, -1) == ZERO
    assert q_binomial(-1, 0) == ZERO


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(3) == ONE + Q + Q ** 2
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_binomial_symmetric_and_at_one():
    from qylag.mpoly import substitute
    from math import comb
    for n in range(9):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)
            assert substitute(q_binomial(n, k), "q", 1).constant_term() == comb(n, k)


def test_q_multinomial():
    words = set(itertools.permutations([0, 0, 1, 2, 2]))
    assert q_multinomial([2, 1, 2]) == _inv_poly(words)
    assert q_multinomial([2, -1]) == ZERO
    assert q_multinomial([]) == ONE


def test_q_pochhammer():
    assert q_pochhammer(Q, 2) == (ONE - Q) * (ONE - Q ** 2)
    assert q_pochhammer(Q, 0) == ONE


def test_rising_factorial():
    assert rising_factorial(3, 4) == 3 * 4 * 5 * 6
    assert rising_factorial(0, 0) == 1
