"""Colored rook configurations and matchings of complete bipartite graphs.

Boards are n x n squares cut into column blocks: first the color blocks of
widths m_0..m_alpha, then the list blocks of widths n_1..n_k.  A rook at
(row, col) uses 1-based indices, rows counted from the top.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .combstat import (ColoredPermutation, LaguerreConfig, Word, config_words, cycles_of,
                       enumerate_configs, inv, rl, _compositions, _split)
from .errors import CellOutsideBoard, InvalidRange
from .laguerre import _binom, classical_coeffs, coeff_l
from .mpoly import MPoly

Cell = Tuple[int, int]


@dataclass(frozen=True)
class ColoredBoard:
    n: int
    m: Tuple[int, ...]   # color block widths m_0..m_alpha
    nn: Tuple[int, ...]  # list block widths n_1..n_k

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        object.__setattr__(self, "nn", tuple(self.nn))
        if any(v < 0 for v in self.m) or any(v < 1 for v in self.nn):
            raise ValueError("need m_i >= 0 and n_j >= 1")
        if sum(self.m) + sum(self.nn) != self.n:
            raise ValueError("block widths must add up to n")

    @property
    def alpha(self) -> int:
        return len(self.m) - 1

    @property
    def k(self) -> int:
        return len(self.nn)

    @property
    def cw(self) -> int:
        return sum(self.m)

    @property
    def cd(self) -> int:
        return sum(i * w for i, w in enumerate(self.m))

    def list_blocks(self) -> List[range]:
        """Column ranges of the list blocks."""
        out, start = [], self.cw + 1
        for w in self.nn:
            out.append(range(start, start + w))
            start += w
        return out


@dataclass(frozen=True)
class RookPlacement:
    cells: FrozenSet[Cell]

    def __post_init__(self):
        cells = frozenset(self.cells)
        object.__setattr__(self, "cells", cells)
        rows = [r for r, _ in cells]
        cols = [c for _, c in cells]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("rooks attack each other")

    def __len__(self):
        return len(self.cells)

    def row_of(self) -> Dict[int, int]:
        return {c: r for r, c in self.cells}


@dataclass(frozen=True)
class ColoredRookConfig:
    board: ColoredBoard
    placement: RookPlacement

    def __post_init__(self):
        n = self.board.n
        if len(self.placement) != n:
            raise ValueError("need n rooks")
        for r, c in self.placement.cells:
            if not (1 <= r <= n and 1 <= c <= n):
                raise CellOutsideBoard(f"rook {(r, c)} is off the {n}x{n} board")
        row = self.placement.row_of()
        mins = [min(row[c] for c in block) for block in self.board.list_blocks()]
        if any(a >= b for a, b in zip(mins, mins[1:])):
            raise ValueError("list block minima must increase")

    def word(self) -> Word:
        row = self.placement.row_of()
        return tuple(row[c] for c in range(1, self.board.n + 1))


@dataclass(frozen=True)
class Matching:
    n: int
    m: int
    edges: FrozenSet[Tuple[int, int]]  # (a, b) stands for the edge a - b'

    def __post_init__(self):
        edges = frozenset(self.edges)
        object.__setattr__(self, "edges", edges)
        tops = [a for a, _ in edges]
        bottoms = [b for _, b in edges]
        if len(set(tops)) != len(tops) or len(set(bottoms)) != len(bottoms):
            raise ValueError("edges share a vertex")
        if any(not 1 <= a <= self.n for a in tops) or any(not 1 <= b <= self.m for b in bottoms):
            raise ValueError(f"edge outside K_{{{self.n},{self.m}}}")

    def __len__(self):
        return len(self.edges)


def inv_rook(board_shape: Sequence[int], placement) -> int:
    """Cells left after every rook crosses out itself, the cells below it and the cells to its right.

    ``board_shape`` lists column heights; column j holds rows 1..board_shape[j-1].
    """
    cells = placement.cells if isinstance(placement, RookPlacement) else frozenset(placement)
    heights = list(board_shape)
    for r, c in cells:
        if not (1 <= c <= len(heights) and 1 <= r <= heights[c - 1]):
            raise CellOutsideBoard(f"rook {(r, c)} is outside the board")
    crossed = set()
    for r, c in cells:
        for i in range(r, heights[c - 1] + 1):
            crossed.add((i, c))
        for j in range(c + 1, len(heights) + 1):
            if r <= heights[j - 1]:
                crossed.add((r, j))
    return sum(heights) - len(crossed)


def stats_rook(r: ColoredRookConfig) -> Tuple[int, int, int, int]:
    """(cw, cd, inv, ind)."""
    board = r.board
    row = r.placement.row_of()
    ind = 0
    for block in board.list_blocks():
        top = max(block, key=lambda c: row[c])
        ind += sum(1 for c in block if c > top)
    inv_c = inv_rook([board.n] * board.n, r.placement)
    return board.cw, board.cd, inv_c, ind


def rook_weight(r: ColoredRookConfig) -> MPoly:
    cw, cd, inv_c, ind = stats_rook(r)
    return MPoly.monomial(1, y=cw + ind, q=inv_c + cd - ind)


def phi_config_to_rook(c: LaguerreConfig) -> ColoredRookConfig:
    hats = [c.sigma.hat(i) for i in range(c.alpha + 1)]
    board = ColoredBoard(c.n, tuple(len(h) for h in hats), tuple(len(w) for w in c.lists))
    w = [v for h in hats for v in h] + [v for lst in c.lists for v in lst]
    return ColoredRookConfig(board, RookPlacement(frozenset((wj, j) for j, wj in enumerate(w, 1))))


def rook_to_config(r: ColoredRookConfig) -> LaguerreConfig:
    board = r.board
    w = r.word()
    parts = _split(w, board.m + board.nn)
    hats, lists = parts[:len(board.m)], parts[len(board.m):]
    sigma = ColoredPermutation.from_words(board.alpha, hats)
    return LaguerreConfig(board.n, sigma, tuple(lists))


def _boards(n: int, k: int, alpha: int) -> Iterator[ColoredBoard]:
    for cw in range(n - k + 1):
        if alpha < 0 and cw:
            break
        if k == 0 and cw != n:
            continue
        for m in _compositions(cw, alpha + 1, 0):
            for nn in _compositions(n - cw, k, 1):
                yield ColoredBoard(n, m, nn)


def enumerate_rook_configs(n: int, k: int, alpha: int) -> Iterator[ColoredRookConfig]:
    """Every element of BC^(alpha)_{n,k}: all boards, then every admissible placement."""
    if n < 0 or not 0 <= k <= n or alpha < -1:
        raise InvalidRange("need n >= 0, 0 <= k <= n, alpha >= -1")
    perms = list(itertools.permutations(range(1, n + 1)))
    for board in _boards(n, k, alpha):
        blocks = [(b.start - 1, b.stop - 1) for b in board.list_blocks()]
        for w in perms:
            mins = [min(w[s:e]) for s, e in blocks]
            if all(a < b for a, b in zip(mins, mins[1:])):
                cells = frozenset((wj, j) for j, wj in enumerate(w, 1))
                yield ColoredRookConfig(board, RookPlacement(cells))


def rook_weight_sum(n: int, k: int, alpha: int) -> MPoly:
    counts: Counter = Counter()
    for r in enumerate_rook_configs(n, k, alpha):
        cw, cd, inv_c, ind = stats_rook(r)
        counts[(cw + ind, inv_c + cd - ind)] += 1
    return MPoly({(0, ye, qe, 0, 0, 0, 0): c for (ye, qe), c in counts.items()})


def theorem_rook_check(n: int, k: int, alpha: int) -> bool:
    return rook_weight_sum(n, k, alpha) == coeff_l(n, k, alpha)


def rook_transport_check(c: LaguerreConfig) -> bool:
    """phi carries the configuration statistics onto the rook statistics, and back."""
    r = phi_config_to_rook(c)
    cw, cd, inv_c, ind = stats_rook(r)
    sw, bw, lw = config_words(c)
    rls = sum(rl(w) for w in c.lists)
    return (cw + ind == len(sw) + rls
            and inv_c + cd - ind == inv(sw + lw) - rls + inv(bw)
            and inv_c == inv(sw + lw)
            and cd == sum(i * len(c.sigma.hat(i)) for i in range(c.alpha + 1))
            and rook_to_config(r) == c)


def _foata_cycles(u: Sequence[int]) -> List[Tuple[int, ...]]:
    # cut before each left-to-right maximum
    out: List[List[int]] = []
    best = 0
    for v in u:
        if v > best:
            best = v
            out.append([v])
        else:
            out[-1].append(v)
    return [tuple(c) for c in out]


def config_to_matching(c: LaguerreConfig) -> Matching:
    """Edges a - b' for every step a -> b in the configuration's paths and cycles.

    For alpha >= 0 the steps are sigma_0(a) = b, consecutive letters of
    hat(sigma_1)(n+1) ... hat(sigma_alpha)(n+alpha), and consecutive letters of
    each list.  For alpha = -1 the bottom side is [n-1], so the letter n must
    never be a target: the list u n v holding n contributes the path n v
    together with the cycles cut from u at its left-to-right maxima.
    """
    n, alpha = c.n, c.alpha
    edges = set()
    if alpha >= 0:
        for a, b in c.sigma.mapping(0).items():
            edges.add((a, b))
        word: List[int] = []
        for i in range(1, alpha + 1):
            word.extend(c.sigma.hat(i))
            word.append(n + i)
        for a, b in zip(word, word[1:]):
            if a <= n:
                edges.add((a, b))
        lists = c.lists
    else:
        lists = []
        for lst in c.lists:
            if n in lst:
                at = lst.index(n)
                lists.append(lst[at:])
                for cyc in _foata_cycles(lst[:at]):
                    for i, a in enumerate(cyc):
                        edges.add((a, cyc[(i + 1) % len(cyc)]))
            else:
                lists.append(lst)
    for lst in lists:
        edges.update(zip(lst, lst[1:]))
    return Matching(n, n + alpha, frozenset(edges))


def matching_to_config(gamma: Matching, alpha: int) -> LaguerreConfig:
    """Inverse of config_to_matching."""
    n = gamma.n
    if gamma.m != n + alpha:
        raise ValueError("matching does not live on K_{n,n+alpha}")
    succ = dict(gamma.edges)
    pred = {b: a for a, b in gamma.edges}
    used = set()

    def path_from(start: int) -> Word:
        out = [start]
        while out[-1] in succ and out[-1] <= n:
            out.append(succ[out[-1]])
        return tuple(out)

    hats: List[Word] = []
    for i in range(1, alpha + 1):
        back = []
        v = n + i
        while v in pred:
            v = pred[v]
            back.append(v)
        hats.append(tuple(reversed(back)))
        used.update(back)
    # whatever is left over in [n] is cycles plus paths
    starts = [v for v in range(1, n + 1) if v not in used and v not in pred]
    paths = [path_from(v) for v in starts]
    for p in paths:
        used.update(p)
    cycle_map = {a: succ[a] for a in range(1, n + 1) if a not in used}
    cycles = cycles_of(cycle_map)
    if alpha >= 0:
        words = [_one_line(cycle_map)] + hats
        sigma = ColoredPermutation.from_words(alpha, words)
        return LaguerreConfig(n, sigma, tuple(paths))
    u = [v for cyc in sorted(cycles, key=max) for v in _from_max(cyc)]
    lists = []
    for p in paths:
        lists.append(tuple(u) + p if p[0] == n else p)
    if u and not any(p[0] == n for p in paths):
        raise ValueError("cycles without the letter n")
    return LaguerreConfig(n, ColoredPermutation(-1, ()), tuple(lists))


def _one_line(mapping: Dict[int, int]) -> Word:
    return tuple(mapping[i] for i in sorted(mapping))


def _from_max(cyc: Sequence[int]) -> Word:
    at = cyc.index(max(cyc))
    return tuple(cyc[at:]) + tuple(cyc[:at])


def matching_count(n: int, m_vertices: int, k_edges: int) -> int:
    """Number of k-edge matchings of K_{n,m}."""
    k = k_edges
    if k < 0 or k > min(n, m_vertices):
        return 0
    return comb(n, k) * comb(m_vertices, k) * factorial(k)


def enumerate_matchings(n: int, m_vertices: int, k_edges: int) -> Iterator[Matching]:
    for tops in itertools.combinations(range(1, n + 1), k_edges):
        for bottoms in itertools.permutations(range(1, m_vertices + 1), k_edges):
            yield Matching(n, m_vertices, frozenset(zip(tops, bottoms)))


def matching_bijection_check(n: int, k: int, alpha: int) -> bool:
    """config_to_matching is injective onto all (n-k)-edge matchings of K_{n,n+alpha}, and inverts."""
    if n + alpha < 0:
        raise InvalidRange("K_{n,n+alpha} needs n + alpha >= 0")
    seen = set()
    for c in enumerate_configs(n, k, alpha):
        gamma = config_to_matching(c)
        if len(gamma) != n - k or gamma.edges in seen:
            return False
        if matching_to_config(gamma, alpha) != c:
            return False
        seen.add(gamma.edges)
    return len(seen) == matching_count(n, n + alpha, n - k)


def matching_identity_check(n: int, alpha: int) -> bool:
    """The matching polynomial of K_{n,n+alpha} against x^alpha L_n(x^2), both as exponent -> coefficient maps."""
    if n < 0 or alpha < -1:
        raise InvalidRange("need n >= 0 and alpha >= -1")
    if n + alpha < 0:
        raise InvalidRange("K_{n,n+alpha} needs n + alpha >= 0")
    lhs: Dict[int, int] = {}
    for k in range(n + 1):
        c = (-1) ** k * matching_count(n, n + alpha, k)
        if c:
            lhs[2 * n + alpha - 2 * k] = c
    rhs: Dict[int, int] = {}
    for k, c in enumerate(classical_coeffs(n, alpha)):
        if c:
            rhs[2 * k + alpha] = c
    return lhs == rhs


def _cycle_count(f: Dict[int, int]) -> int:
    count, seen = 0, set()
    for start in f:
        if start in seen:
            continue
        path = []
        v = start
        while v in f and v not in seen:
            seen.add(v)
            path.append(v)
            v = f[v]
        if v in path:
            count += 1
    return count


def foata_strehl_check(n: int, k: int, alpha: int) -> bool:
    """Injections f: A -> [n] with |A| = n-k, weighted (alpha+1)^cyc, against n!/k! C(n+alpha, n-k)."""
    if n < 0 or not 0 <= k <= n or alpha < -1:
        raise InvalidRange("need n >= 0, 0 <= k <= n, alpha >= -1")
    total = 0
    for dom in itertools.combinations(range(1, n + 1), n - k):
        for img in itertools.permutations(range(1, n + 1), n - k):
            total += (alpha + 1) ** _cycle_count(dict(zip(dom, img)))
    return total == factorial(n) // factorial(k) * _binom(n + alpha, n - k)
