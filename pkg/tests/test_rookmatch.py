import pytest

from qylag.combstat import ColoredPermutation, LaguerreConfig, enumerate_configs
from qylag.errors import CellOutsideBoard, InvalidRange
from qylag.laguerre import coeff_l
from qylag.mpoly import ONE, Q, Y
from qylag.rookmatch import (ColoredBoard, ColoredRookConfig, Matching, RookPlacement,
                             config_to_matching, enumerate_matchings, enumerate_rook_configs,
                             foata_strehl_check, inv_rook, matching_bijection_check,
                             matching_count, matching_identity_check, matching_to_config,
                             phi_config_to_rook, rook_to_config, rook_transport_check,
                             rook_weight_sum, stats_rook, theorem_rook_check)


def example_config():
    sigma = ColoredPermutation(1, (((7, 4), 0), ((15,), 0), ((13, 5, 2), 1), ((14,), 1)))
    return LaguerreConfig(15, sigma, ((1, 3), (12, 6, 11), (10, 8), (9,)))


def test_ferrers_example():
    assert inv_rook((4, 4, 3, 3, 1), {(1, 1), (2, 3), (4, 2)}) == 3
    # leaving the rook cells uncrossed would give 6
    assert inv_rook((2, 1), set()) == 3


def test_inv_rook_outside():
    with pytest.raises(CellOutsideBoard):
        inv_rook((2, 1), {(2, 2)})


def test_inv_rook_on_square_is_word_inversions():
    from itertools import permutations
    from qylag.combstat import inv
    for w in permutations(range(1, 5)):
        cells = {(wj, j) for j, wj in enumerate(w, 1)}
        assert inv_rook((4,) * 4, cells) == inv(w)
    n = 5
    assert inv_rook((n,) * n, {(i, i) for i in range(1, n + 1)}) == 0
    assert inv_rook((n,) * n, {(n + 1 - i, i) for i in range(1, n + 1)}) == n * (n - 1) // 2


def test_worked_rook_configuration():
    r = phi_config_to_rook(example_config())
    assert r.board == ColoredBoard(15, (3, 4), (2, 3, 2, 1))
    assert r.word() == (7, 4, 15, 13, 2, 5, 14, 1, 3, 12, 6, 11, 10, 8, 9)
    cw, cd, inv_c, ind = stats_rook(r)
    assert (cd, inv_c, ind) == (4, 52, 3)
    # cw is the total width of the color blocks, 3 + 4; the worked example
    # prints 1, but cw + ind must equal |sigma| + rl = 7 + 3 for its own weight
    assert cw == 7
    assert cw + ind == 10 and inv_c + cd - ind == 53
    assert rook_to_config(r) == example_config()


def test_trivial_boards():
    r = phi_config_to_rook(LaguerreConfig(0, ColoredPermutation(2, ()), ()))
    assert stats_rook(r) == (0, 0, 0, 0)
    r = phi_config_to_rook(LaguerreConfig(3, ColoredPermutation(-1, ()), ((2, 3, 1),)))
    assert stats_rook(r)[:2] == (0, 0)


def test_config_validation():
    with pytest.raises(ValueError):
        ColoredBoard(3, (1,), (1,))
    with pytest.raises(ValueError):
        RookPlacement({(1, 1), (1, 2)})
    board = ColoredBoard(2, (), (1, 1))
    with pytest.raises(ValueError):
        ColoredRookConfig(board, RookPlacement({(2, 1), (1, 2)}))


def test_small_rook_sum():
    assert rook_weight_sum(2, 1, 0) == 1 + (2 + Q) * Y
    assert theorem_rook_check(0, 0, 1)


@pytest.mark.parametrize("n,k,alpha", [(n, k, a) for n in range(6) for k in range(n + 1) for a in (-1, 0, 1)])
def test_rook_sum_equals_coefficient(n, k, alpha):
    assert rook_weight_sum(n, k, alpha) == coeff_l(n, k, alpha)


@pytest.mark.parametrize("n,k,alpha", [(n, k, a) for n in range(5) for k in range(n + 1) for a in (-1, 0, 1)])
def test_statistic_transport(n, k, alpha):
    configs = list(enumerate_configs(n, k, alpha))
    assert all(rook_transport_check(c) for c in configs)
    assert len(configs) == sum(1 for _ in enumerate_rook_configs(n, k, alpha))


def test_worked_matching():
    gamma = config_to_matching(example_config())
    assert gamma.edges == {(1, 3), (2, 5), (4, 7), (5, 14), (6, 11), (7, 4), (10, 8),
                           (12, 6), (13, 2), (15, 15), (14, 16)}
    assert (gamma.n, gamma.m, len(gamma)) == (15, 16, 11)
    assert matching_to_config(gamma, 1) == example_config()


def test_singletons_give_empty_matching():
    c = LaguerreConfig(4, ColoredPermutation(-1, ()), ((1,), (2,), (3,), (4,)))
    assert len(config_to_matching(c)) == 0


def test_alpha_minus_one_keeps_targets_in_range():
    c = LaguerreConfig(4, ColoredPermutation(-1, ()), ((3, 1, 4, 2),))
    gamma = config_to_matching(c)
    assert gamma.m == 3 and len(gamma) == 3
    assert matching_to_config(gamma, -1) == c


@pytest.mark.parametrize("n,k,alpha", [(n, k, a) for n in range(6) for k in range(n + 1) for a in (-1, 0, 1)
                                       if n + a >= 0])
def test_matching_bijection(n, k, alpha):
    assert matching_bijection_check(n, k, alpha)


def test_matching_count():
    assert matching_count(3, 4, 0) == 1
    assert matching_count(2, 3, 2) == 6
    assert matching_count(2, 3, 3) == 0
    for n, m, k in [(2, 3, 2), (3, 3, 2), (3, 4, 1)]:
        assert sum(1 for _ in enumerate_matchings(n, m, k)) == matching_count(n, m, k)


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching(2, 2, {(1, 1), (2, 1)})
    with pytest.raises(ValueError):
        Matching(2, 2, {(1, 3)})


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("alpha", [-1, 0, 1, 2, 3])
def test_matching_polynomial(n, alpha):
    if n + alpha < 0:
        with pytest.raises(InvalidRange):
            matching_identity_check(n, alpha)
    else:
        assert matching_identity_check(n, alpha)


@pytest.mark.parametrize("n,k,alpha", [(n, k, a) for n in range(7) for k in range(n + 1) for a in (-1, 0, 1, 2)])
def test_foata_strehl(n, k, alpha):
    assert foata_strehl_check(n, k, alpha)
