import itertools
from math import factorial

import pytest

from qylag.combstat import (ColoredPermutation, LaguerreConfig, LaguerreHistory, biane_inverse,
                            biane_phi, config_weight, config_weight_sum, config_words,
                            enumerate_configs, enumerate_histories, inv, lemma1_check,
                            lemma2_check, moments_bruteforce, perm_stats, rl, theorem_key_check)
from qylag.errors import EmptyWord, InvalidHistory, InvalidRange
from qylag.laguerre import coeff_l
from qylag.mpoly import MPoly, substitute_many


def example_config():
    sigma = ColoredPermutation(1, (((7, 4), 0), ((15,), 0), ((13, 5, 2), 1), ((14,), 1)))
    return LaguerreConfig(15, sigma, ((1, 3), (12, 6, 11), (10, 8), (9,)))


def test_worked_configuration():
    c = example_config()
    sw, bw, lw = config_words(c)
    assert sw == (7, 4, 15, 13, 2, 5, 14)
    assert bw == (0, 0, 0, 1, 0, 0, 0, 0)
    assert lw == (1, 3, 12, 6, 11, 10, 8, 9)
    assert sum(rl(w) for w in c.lists) == 3
    assert inv(bw) == 4
    assert inv(sw + lw) == 52
    assert config_weight(c) == MPoly.monomial(1, y=10, q=53)


def test_inv_and_rl():
    assert inv((3, 1, 2)) == 2
    assert inv(()) == 0
    assert inv((1, 0, 0)) == 2
    assert rl((2, 5, 1, 3)) == 2
    assert rl((4,)) == 0
    with pytest.raises(EmptyWord):
        rl(())


def test_colored_permutation_round_trip():
    sigma = ColoredPermutation.from_words(1, [(2, 1), (4, 3)])
    assert sigma.hat(0) == (2, 1) and sigma.hat(1) == (4, 3)
    assert sigma.support() == frozenset({1, 2, 3, 4})
    with pytest.raises(ValueError):
        ColoredPermutation(0, (((1, 2), 0), ((2,), 0)))


def test_config_validation():
    sigma = ColoredPermutation(0, ())
    with pytest.raises(ValueError):
        LaguerreConfig(3, sigma, ((1, 2),))
    c = LaguerreConfig(3, sigma, ((3, 2), (1,)))
    assert c.lists == ((1,), (3, 2))


@pytest.mark.parametrize("n,k,alpha", [(n, k, a) for n in range(6) for k in range(n + 1) for a in (-1, 0, 1, 2)])
def test_configuration_sum(n, k, alpha):
    assert config_weight_sum(n, k, alpha) == coeff_l(n, k, alpha)


def test_slow_and_fast_sums_agree():
    for n, k, a in [(3, 1, 1), (4, 2, 0), (4, 0, 2)]:
        slow = sum((config_weight(c) for c in enumerate_configs(n, k, a)), MPoly())
        assert slow == config_weight_sum(n, k, a)


def test_theorem_key_small():
    assert theorem_key_check(0, 0, 3)
    assert theorem_key_check(2, 1, 0)


def test_configuration_count_at_one():
    # (alpha+1)^cyc summed over uncolored configurations = n!/k! C(n+alpha, n-k)
    for n in range(5):
        for k in range(n + 1):
            total = sum(1 for _ in enumerate_configs(n, k, 1))
            assert total == substitute_many(coeff_l(n, k, 1), {"y": 1, "q": 1}).constant_term()


def test_bad_ranges():
    with pytest.raises(InvalidRange):
        list(enumerate_configs(2, 3, 0))
    with pytest.raises(InvalidRange):
        lemma2_check(3, 0)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("alpha", [0, 1, 2])
def test_lemma_one(n, alpha):
    assert lemma1_check(n, alpha)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(1, n + 1)])
def test_lemma_two(n, k):
    assert lemma2_check(n, k)


def test_perm_stats_small():
    st = perm_stats((2, 1))
    assert (st.wex, st.rec) == (1, 1)
    st = perm_stats((1, 2))
    assert (st.wex, st.rec, st.cros) == (2, 2, 0)


def test_brute_force_moments_small():
    mu = [moments_bruteforce(n) for n in range(4)]
    b, y, q = MPoly.var("beta"), MPoly.var("y"), MPoly.var("q")
    assert mu[1] == y * b
    assert mu[2] == y * b + y ** 2 * b ** 2
    assert mu[3] == y * b + b * (1 + (2 + q) * b) * y ** 2 + y ** 3 * b ** 3


def test_biane_worked_example():
    sigma = (4, 1, 2, 7, 9, 6, 5, 8, 3)
    h = biane_phi(sigma)
    assert h.s == "uu du du ud uu ud dd ud dd".replace(" ", "")
    assert h.xi == (1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1)
    assert biane_inverse(h) == sigma


@pytest.mark.parametrize("n", range(7))
def test_biane_is_a_bijection(n):
    hs = list(enumerate_histories(n))
    assert len(hs) == factorial(n)
    images = {biane_inverse(h) for h in hs}
    assert len(images) == factorial(n)
    for sigma in itertools.permutations(range(1, n + 1)):
        h = biane_phi(sigma)
        assert biane_inverse(h) == sigma
        assert h.stats() == perm_stats(sigma)


def test_invalid_histories():
    with pytest.raises(InvalidHistory):
        LaguerreHistory("du", (1, 1)).validate()
    with pytest.raises(InvalidHistory):
        LaguerreHistory("uudd", (1, 1, 2, 1)).validate()
    with pytest.raises(InvalidHistory):
        LaguerreHistory("ud", (1,)).validate()
