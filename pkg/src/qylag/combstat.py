"""Labelled structures behind the (q,y)-Laguerre coefficients and moments.

An alpha-Laguerre configuration on [n] is a permutation of a subset A whose
cycles carry colors 0..alpha, together with k disjoint non-empty strict
lists covering the rest, ordered by their minima.  Its weight is

    y^(|sigma| + rl(lambda)) * q^(inv(sigma . lambda) - rl(lambda) + inv(binary word))

where each color class is read as its one-line word sigma(i_1)...sigma(i_m)
over its sorted support.  Laguerre histories and the Biane-style bijection
with permutations live here as well.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import ceil
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import EmptyWord, InvalidHistory, InvalidRange
from .laguerre import coeff_l
from .mpoly import MPoly
from .qnum import q_binomial, q_factorial

Word = Tuple[int, ...]
Cycle = Tuple[int, ...]


def inv(w: Sequence[int]) -> int:
    """Number of pairs i < j with w[i] > w[j]."""
    count = 0
    for i, a in enumerate(w):
        for b in w[i + 1:]:
            if a > b:
                count += 1
    return count


def rl(w: Sequence[int]) -> int:
    """Number of letters after the maximum."""
    if not w:
        raise EmptyWord("rl of an empty word")
    return len(w) - 1 - max(range(len(w)), key=w.__getitem__)


def _canonical_cycle(cycle: Sequence[int]) -> Cycle:
    i = max(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def cycles_of(mapping: Dict[int, int]) -> List[Cycle]:
    """Cycles of a permutation given as a dict, each starting at its maximum."""
    seen = set()
    out = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        out.append(_canonical_cycle(cyc))
    return sorted(out, key=lambda c: c[0])


def one_line(mapping: Dict[int, int]) -> Word:
    """sigma(i_1) ... sigma(i_m) over the sorted support."""
    return tuple(mapping[i] for i in sorted(mapping))


def from_one_line(word: Sequence[int]) -> Dict[int, int]:
    return dict(zip(sorted(word), word))


@dataclass(frozen=True)
class ColoredPermutation:
    """A permutation of a finite set with a color in 0..alpha on each cycle."""

    alpha: int
    cycles: Tuple[Tuple[Cycle, int], ...] = ()

    def __post_init__(self):
        canon = []
        seen = set()
        for cyc, color in self.cycles:
            if not cyc:
                raise ValueError("empty cycle")
            if not 0 <= color <= self.alpha:
                raise ValueError(f"color {color} outside 0..{self.alpha}")
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError("cycles must be disjoint")
            seen.update(cyc)
            canon.append((_canonical_cycle(cyc), color))
        object.__setattr__(self, "cycles", tuple(sorted(canon, key=lambda cc: (cc[1], cc[0][0]))))

    @classmethod
    def from_words(cls, alpha: int, words: Sequence[Sequence[int]]) -> "ColoredPermutation":
        """Build from one one-line word per color."""
        if len(words) != max(alpha + 1, 0):
            raise ValueError("need one word per color")
        cycles = []
        for color, w in enumerate(words):
            for cyc in cycles_of(from_one_line(w)):
                cycles.append((cyc, color))
        return cls(alpha, tuple(cycles))

    def support(self) -> frozenset:
        return frozenset(v for cyc, _ in self.cycles for v in cyc)

    def mapping(self, color: int = None) -> Dict[int, int]:
        out = {}
        for cyc, c in self.cycles:
            if color is not None and c != color:
                continue
            for i, v in enumerate(cyc):
                out[v] = cyc[(i + 1) % len(cyc)]
        return out

    def hat(self, color: int) -> Word:
        return one_line(self.mapping(color))


@dataclass(frozen=True)
class LaguerreConfig:
    n: int
    sigma: ColoredPermutation
    lists: Tuple[Word, ...] = ()

    def __post_init__(self):
        lists = tuple(tuple(w) for w in self.lists)
        if any(not w for w in lists):
            raise ValueError("lists must be non-empty")
        mins = [min(w) for w in lists]
        if mins != sorted(mins) or len(set(mins)) != len(mins):
            lists = tuple(sorted(lists, key=min))
        object.__setattr__(self, "lists", lists)
        letters = [v for w in lists for v in w] + list(self.sigma.support())
        if sorted(letters) != list(range(1, self.n + 1)):
            raise ValueError("cycles and lists must partition [n]")

    @property
    def alpha(self) -> int:
        return self.sigma.alpha

    @property
    def k(self) -> int:
        return len(self.lists)


def config_words(c: LaguerreConfig) -> Tuple[Word, Tuple[int, ...], Word]:
    """(sigma word, binary color word, concatenated lists)."""
    hats = [c.sigma.hat(i) for i in range(c.alpha + 1)]
    sigma_word = tuple(v for h in hats for v in h)
    binary: List[int] = []
    for i, h in enumerate(hats):
        if i:
            binary.append(1)
        binary.extend([0] * len(h))
    lambda_word = tuple(v for w in c.lists for v in w)
    return sigma_word, tuple(binary), lambda_word


def _weight_exponents(sigma_word: Word, binary: Sequence[int], lists: Sequence[Word]) -> Tuple[int, int]:
    rls = sum(rl(w) for w in lists)
    lam = tuple(v for w in lists for v in w)
    return len(sigma_word) + rls, inv(sigma_word + lam) - rls + inv(binary)


def config_weight(c: LaguerreConfig) -> MPoly:
    sw, bw, _ = config_words(c)
    ye, qe = _weight_exponents(sw, bw, c.lists)
    return MPoly.monomial(1, y=ye, q=qe)


def _compositions(total: int, parts: int, min_part: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= min_part:
            yield (total,)
        return
    for first in range(min_part, total - min_part * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, min_part):
            yield (first,) + rest


def _split(word: Sequence[int], sizes: Sequence[int]) -> List[Word]:
    out, pos = [], 0
    for s in sizes:
        out.append(tuple(word[pos:pos + s]))
        pos += s
    return out


def enumerate_colored(support: Sequence[int], alpha: int) -> Iterator[List[Word]]:
    """Every colored permutation of ``support`` as one one-line word per color.

    Ordered by the concatenated word, then by the color composition.
    """
    if alpha < 0:
        if not support:
            yield []
        return
    m = len(support)
    sizes_list = list(_compositions(m, alpha + 1, 0))
    for word in itertools.permutations(sorted(support)):
        for sizes in sizes_list:
            yield _split(word, sizes)


def enumerate_lists(support: Sequence[int], k: int) -> Iterator[List[Word]]:
    """Every family of k non-empty disjoint strict lists covering ``support``."""
    m = len(support)
    if k == 0:
        if m == 0:
            yield []
        return
    cuts = list(_compositions(m, k, 1))
    for word in itertools.permutations(sorted(support)):
        for sizes in cuts:
            lists = _split(word, sizes)
            mins = [min(w) for w in lists]
            if all(a < b for a, b in zip(mins, mins[1:])):
                yield lists


def _config_parts(n: int, k: int, alpha: int):
    if n < 0 or not 0 <= k <= n or alpha < -1:
        raise InvalidRange("need n >= 0, 0 <= k <= n, alpha >= -1")
    universe = range(1, n + 1)
    for size in range(n - k + 1):
        if alpha < 0 and size:
            break
        if k == 0 and size != n:
            continue
        for cyc_support in itertools.combinations(universe, size):
            rest = [v for v in universe if v not in cyc_support]
            lists_all = list(enumerate_lists(rest, k))
            for words in enumerate_colored(cyc_support, alpha):
                for lists in lists_all:
                    yield words, lists


def enumerate_configs(n: int, k: int, alpha: int) -> Iterator[LaguerreConfig]:
    """Every configuration in LC^(alpha)_{n,k}, lazily and in a fixed order."""
    for words, lists in _config_parts(n, k, alpha):
        yield LaguerreConfig(n, ColoredPermutation.from_words(alpha, words), tuple(lists))


def config_weight_sum(n: int, k: int, alpha: int) -> MPoly:
    """Sum of weights over LC^(alpha)_{n,k}, working on words directly."""
    counts: Counter = Counter()
    for words, lists in _config_parts(n, k, alpha):
        sigma_word = tuple(v for w in words for v in w)
        binary = []
        for i, w in enumerate(words):
            if i:
                binary.append(1)
            binary.extend([0] * len(w))
        counts[_weight_exponents(sigma_word, binary, lists)] += 1
    return MPoly({(0, ye, qe, 0, 0, 0, 0): c for (ye, qe), c in counts.items()})


def theorem_key_check(n: int, k: int, alpha: int) -> bool:
    return config_weight_sum(n, k, alpha) == coeff_l(n, k, alpha)


def lemma1_check(n: int, alpha: int) -> bool:
    """Colored permutations of [n]: sum of q^(inv(word) + inv(binary)) = n!_q [n+alpha, alpha]_q."""
    if alpha < 0:
        raise InvalidRange("lemma1_check needs alpha >= 0")
    counts: Counter = Counter()
    for words in enumerate_colored(range(1, n + 1), alpha):
        sigma_word = tuple(v for w in words for v in w)
        binary = []
        for i, w in enumerate(words):
            if i:
                binary.append(1)
            binary.extend([0] * len(w))
        counts[inv(sigma_word) + inv(binary)] += 1
    lhs = MPoly({(0, 0, e, 0, 0, 0, 0): c for e, c in counts.items()})
    return lhs == q_factorial(n) * q_binomial(n + alpha, alpha)


def lemma2_check(n: int, k: int) -> bool:
    """List families on [n] with k lists, weighted y^rl q^(inv - rl), give the alpha = -1 coefficient."""
    if not 1 <= k <= n:
        raise InvalidRange("need 1 <= k <= n")
    counts: Counter = Counter()
    for lists in enumerate_lists(range(1, n + 1), k):
        rls = sum(rl(w) for w in lists)
        counts[(rls, inv(tuple(v for w in lists for v in w)) - rls)] += 1
    lhs = MPoly({(0, ye, qe, 0, 0, 0, 0): c for (ye, qe), c in counts.items()})
    return lhs == coeff_l(n, k, -1)


# -- permutations ----------------------------------------------------------

@dataclass(frozen=True)
class PermStats:
    wex: int
    rec: int
    cros: int


def _check_perm(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError("not a permutation of [n] in one-line notation")


def perm_stats(sigma: Sequence[int]) -> PermStats:
    """Weak excedances, records and crossings of a one-line permutation."""
    _check_perm(sigma)
    n = len(sigma)
    s = (0,) + tuple(sigma)
    wex = sum(1 for i in range(1, n + 1) if s[i] >= i)
    rec, best = 0, 0
    for v in sigma:
        if v > best:
            rec += 1
            best = v
    cros = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j <= s[i] < s[j] or s[j] < s[i] < j < i:
                cros += 1
    return PermStats(wex, rec, cros)


def moments_bruteforce(n: int) -> MPoly:
    """Sum over S_n of beta^rec y^wex q^cros."""
    counts: Counter = Counter()
    for sigma in itertools.permutations(range(1, n + 1)):
        st = perm_stats(sigma)
        counts[(st.wex, st.cros, st.rec)] += 1
    return MPoly({(0, w, c, r, 0, 0, 0): m for (w, c, r), m in counts.items()})


# -- Laguerre histories ------------------------------------------------------

@dataclass(frozen=True)
class LaguerreHistory:
    s: str
    xi: Tuple[int, ...]

    def heights(self) -> List[int]:
        """Height before each step."""
        h, out = 0, []
        for step in self.s:
            out.append(h)
            h += 1 if step == "u" else -1
        return out

    def validate(self) -> None:
        if len(self.s) != len(self.xi) or len(self.s) % 2:
            raise InvalidHistory("s and xi must have the same even length")
        h = 0
        for step, x, hi in zip(self.s, self.xi, self.heights()):
            if step == "u":
                if x != 1:
                    raise InvalidHistory("xi must be 1 on up steps")
                h += 1
            elif step == "d":
                if not 1 <= x <= ceil(hi / 2):
                    raise InvalidHistory(f"xi={x} out of range at height {hi}")
                h -= 1
                if h < 0:
                    raise InvalidHistory("path goes below zero")
            else:
                raise InvalidHistory(f"unknown step {step!r}")
        if h:
            raise InvalidHistory("path does not return to zero")

    def stats(self) -> PermStats:
        """(wex, rec, cros) read off the history."""
        hs = self.heights()
        wex = rec = cros = 0
        for pos, (step, x, h) in enumerate(zip(self.s, self.xi, hs), start=1):
            if step != "d":
                continue
            cros += x - 1
            if pos % 2 == 0:
                wex += 1
                if x == ceil(h / 2):
                    rec += 1
        return PermStats(wex, rec, cros)


def biane_phi(sigma: Sequence[int]) -> LaguerreHistory:
    """Map a one-line permutation to its Laguerre history.

    Vertices 1, 1', 2, 2', ... are added in turn; a vertex whose partner is
    already present closes an edge (down step) and xi is the rank of that
    partner among the isolated vertices of its row, counted from the right.
    """
    _check_perm(sigma)
    n = len(sigma)
    s = (0,) + tuple(sigma)
    inverse = [0] * (n + 1)
    for i in range(1, n + 1):
        inverse[s[i]] = i
    top: List[int] = []
    bottom: List[int] = []
    steps, xi = [], []
    for i in range(1, n + 1):
        if s[i] < i:
            steps.append("d")
            xi.append(len(bottom) - bottom.index(s[i]))
            bottom.remove(s[i])
        else:
            steps.append("u")
            xi.append(1)
            top.append(i)
        j = inverse[i]
        if j <= i:
            steps.append("d")
            xi.append(len(top) - top.index(j))
            top.remove(j)
        else:
            steps.append("u")
            xi.append(1)
            bottom.append(i)
    return LaguerreHistory("".join(steps), tuple(xi))


def biane_inverse(h: LaguerreHistory) -> Word:
    h.validate()
    n = len(h.s) // 2
    sigma = [0] * (n + 1)
    top: List[int] = []
    bottom: List[int] = []
    for i in range(1, n + 1):
        a, b = 2 * i - 2, 2 * i - 1
        if h.s[a] == "d":
            sigma[i] = bottom.pop(len(bottom) - h.xi[a])
        else:
            top.append(i)
        if h.s[b] == "d":
            sigma[top.pop(len(top) - h.xi[b])] = i
        else:
            bottom.append(i)
    return tuple(sigma[1:])


def dyck_words(n: int) -> Iterator[str]:
    def rec(prefix: str, ups: int, downs: int):
        if ups == downs == n:
            yield prefix
            return
        if ups < n:
            yield from rec(prefix + "u", ups + 1, downs)
        if downs < ups:
            yield from rec(prefix + "d", ups, downs + 1)
    yield from rec("", 0, 0)


def enumerate_histories(n: int) -> Iterator[LaguerreHistory]:
    for s in dyck_words(n):
        hs = LaguerreHistory(s, (1,) * len(s)).heights()
        ranges = [range(1, 2) if st == "u" else range(1, ceil(h / 2) + 1) for st, h in zip(s, hs)]
        for xi in itertools.product(*ranges):
            yield LaguerreHistory(s, tuple(xi))
