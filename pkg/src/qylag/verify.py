"""Named identity checks, each split into small parameter tuples.

Every checker returns None on success or a short witness string describing
the first disagreement.  Tuples are independent so they can run in any
order; callers sort reports by tuple before printing.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from . import combstat, laguerre, moments, rookmatch
from .mpoly import TruncationPolicy, is_nonnegative, substitute_many, truncate

Params = Dict[str, int]


@dataclass
class VerificationReport:
    identity: str
    parameters: Params
    status: str
    witness: Optional[str] = None
    elapsed: float = 0.0  # milliseconds

    def __post_init__(self):
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    def to_dict(self, timings: bool = False) -> dict:
        out = {"identity": self.identity, "parameters": self.parameters, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if timings:
            out["elapsed_ms"] = round(self.elapsed, 3)
        return out


def _eq(lhs, rhs, what: str = "lhs != rhs") -> Optional[str]:
    if lhs == rhs:
        return None
    def show(v):
        return v.to_plain() if hasattr(v, "to_plain") else str(v)
    return f"{what}: {show(lhs)} vs {show(rhs)}"


def _flag(ok: bool, what: str) -> Optional[str]:
    return None if ok else what


# -- parameter grids -----------------------------------------------------------

def _nk_alpha(n_max: int, alphas) -> Iterator[Params]:
    for n in range(n_max + 1):
        for k in range(n + 1):
            for a in alphas:
                yield {"n": n, "k": k, "alpha": a}


def _grid_theorem_key(n_max, seed):
    return _nk_alpha(n_max, (-1, 0, 1, 2))


def _grid_lemma_1(n_max, seed):
    for n in range(n_max + 1):
        for a in (0, 1, 2):
            yield {"n": n, "alpha": a}


def _grid_lemma_2(n_max, seed):
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}


def _grid_moments(n_max, seed):
    for n in range(n_max + 1):
        yield {"n": n}


def _grid_contraction(n_max, seed):
    for a in (0, 1, 2):
        yield {"N": n_max, "alpha": a}


def _grid_orthogonality(n_max, seed):
    for a in (0, 1, 2):
        for n in range(n_max + 1):
            for m in range(n_max + 1):
                yield {"n": n, "m": m, "alpha": a}


def _triples(top: int):
    return itertools.combinations_with_replacement(range(top + 1), 3)


def _grid_linearization(n_max, seed):
    # dual-route equality up to n_max, positivity and the q = y = 1 sum one step further
    for a in (0, 1, 2):
        for n1, n2, n3 in _triples(n_max):
            yield {"n1": n1, "n2": n2, "n3": n3, "alpha": a, "route": 1}
    for a in (0, 1, 2, 3):
        for n1, n2, n3 in _triples(n_max + 1):
            yield {"n1": n1, "n2": n2, "n3": n3, "alpha": a, "route": 0}


def _grid_rook(n_max, seed):
    return _nk_alpha(n_max, (-1, 0, 1))


def _grid_matching(n_max, seed):
    for p in _nk_alpha(n_max, (-1, 0, 1)):
        if p["n"] + p["alpha"] >= 0:
            yield dict(p, kind=0)
    for n in range(max(8, n_max) + 1):
        for a in (-1, 0, 1, 2, 3):
            if n + a >= 0:
                yield {"n": n, "alpha": a, "kind": 1}


def _grid_foata_strehl(n_max, seed):
    return _nk_alpha(n_max, (-1, 0, 1, 2))


def _grid_connection(n_max, seed):
    for n in range(n_max + 1):
        for a in (0, 1, 2):
            for b in range(-1, a + 1):
                yield {"n": n, "alpha": a, "beta": b}


def _grid_prop_g(n_max, seed):
    for n in range(n_max + 1):
        yield {"n": n}


def _grid_gf(n_max, seed):
    for a in (-1, 0, 1, 2):
        yield {"alpha": a, "t_max": n_max + 1, "q_max": 8}


def _grid_rescaling(n_max, seed):
    for n in range(n_max + 1):
        for a in (0, 1, 2):
            yield {"n": n, "alpha": a, "seed": seed, "kind": 0}
    for n in range(n_max + 1):
        yield {"n": n, "seed": seed, "kind": 1}


def _grid_biane(n_max, seed):
    for n in range(n_max + 1):
        yield {"n": n}


# -- checkers ---------------------------------------------------------------------

def _check_theorem_key(p):
    n, k, a = p["n"], p["k"], p["alpha"]
    return _eq(combstat.config_weight_sum(n, k, a), laguerre.coeff_l(n, k, a))


def _check_lemma_1(p):
    return _flag(combstat.lemma1_check(p["n"], p["alpha"]), "colored permutation sum differs")


def _check_lemma_2(p):
    return _flag(combstat.lemma2_check(p["n"], p["k"]), "list family sum differs")


def _check_moments(p):
    n = p["n"]
    return _eq(combstat.moments_bruteforce(n),
               moments.moments_sfrac(n, moments.laguerre_scoeffs(n)).mu[n],
               "permutation sum != S-fraction moment")


def _check_contraction(p):
    N, a = p["N"], p["alpha"]
    j = moments.laguerre_moments(N, a)
    s = moments.specialize_beta(moments.moments_sfrac(N, moments.laguerre_scoeffs(N)), a)
    for i in range(N + 1):
        bad = _eq(j[i], s[i], f"mu_{i}: J-fraction != S-fraction")
        if bad:
            return bad
    return None


def _check_orthogonality(p):
    return _flag(moments.orthogonality_check(p["n"], p["m"], p["alpha"]), "L(L_n L_m) is wrong")


def _check_linearization(p):
    n1, n2, n3, a = p["n1"], p["n2"], p["n3"], p["alpha"]
    formula = moments.linearization_formula(n1, n2, n3, a)
    if p["route"]:
        return _eq(formula, moments.linearization_via_moments(n1, n2, n3, a),
                   "closed form != moment functional")
    if not formula.is_zero() and not is_nonnegative(formula):
        return f"negative coefficient in {formula.to_plain()}"
    at_one = substitute_many(formula, {"y": 1, "q": 1})
    return _eq(at_one.constant_term(), moments.classical_linearization(n1, n2, n3, a),
               "q = y = 1 value != classical sum")


def _check_rook(p):
    n, k, a = p["n"], p["k"], p["alpha"]
    bad = _eq(rookmatch.rook_weight_sum(n, k, a), laguerre.coeff_l(n, k, a))
    if bad:
        return bad
    for c in combstat.enumerate_configs(n, k, a):
        if not rookmatch.rook_transport_check(c):
            return f"statistic transport fails at {c}"
    return None


def _check_matching(p):
    if p["kind"]:
        return _flag(rookmatch.matching_identity_check(p["n"], p["alpha"]),
                     "matching polynomial != x^alpha L_n(x^2)")
    return _flag(rookmatch.matching_bijection_check(p["n"], p["k"], p["alpha"]),
                 "configuration to matching map is not a bijection")


def _check_foata_strehl(p):
    return _flag(rookmatch.foata_strehl_check(p["n"], p["k"], p["alpha"]),
                 "weighted injection count differs")


def _check_connection(p):
    return _flag(laguerre.connection_check(p["n"], p["alpha"], p["beta"]), "connection expansion differs")


def _check_prop_g(p):
    return _flag(laguerre.prop_G_check(p["n"]), "alpha = -1 convolution differs")


def _check_gf(p):
    a, t_max, q_max = p["alpha"], p["t_max"], p["q_max"]
    gf = laguerre.gf_truncated(a, t_max, q_max)
    policy = TruncationPolicy(max_q_degree=q_max)
    for n in range(t_max):
        bad = _eq(laguerre.gf_coefficient(gf, n, q_max),
                  truncate(laguerre.laguerre_signless(n, a).poly, policy),
                  f"t^{n} slot != L_{n} mod q^{q_max}")
        if bad:
            return bad
    return _flag(laguerre.gf_factorization_check(a, t_max, q_max), "x = 0 factorization fails")


def _check_rescaling(p):
    n, seed = p["n"], p["seed"]
    if p["kind"] == 0:
        samples = laguerre.rescaling_samples(seed, 10)
        return _flag(laguerre.rescaling_check(n, p["alpha"], samples), "rescaled value differs")
    for u, a, b, q in laguerre.asc_sample_points(seed, 20, max(n, 1)):
        x = (u + 1 / u) / 2
        lhs = laguerre.asc_explicit_eval(n, u, a, b, q)
        rhs = laguerre.asc_rec_eval(n, x, a, b, q)
        if lhs != rhs:
            return f"explicit {lhs} != recurrence {rhs} at u={u}, a={a}, b={b}, q={q}"
    return None


def _check_biane(p):
    n = p["n"]
    count = 0
    for h in combstat.enumerate_histories(n):
        count += 1
        sigma = combstat.biane_inverse(h)
        if combstat.biane_phi(sigma) != h:
            return f"round trip fails at {h}"
        if combstat.perm_stats(sigma) != h.stats():
            return f"statistics differ at {sigma}"
    if count != factorial(n):
        return f"{count} histories, expected {factorial(n)}"
    for sigma in itertools.permutations(range(1, n + 1)):
        if combstat.biane_inverse(combstat.biane_phi(sigma)) != sigma:
            return f"inverse fails at {sigma}"
    return None


@dataclass(frozen=True)
class Identity:
    grid: Callable[[int, int], Iterator[Params]]
    check: Callable[[Params], Optional[str]]
    n_max: int


IDENTITIES: Dict[str, Identity] = {
    "theorem-key": Identity(_grid_theorem_key, _check_theorem_key, 6),
    "lemma-1": Identity(_grid_lemma_1, _check_lemma_1, 5),
    "lemma-2": Identity(_grid_lemma_2, _check_lemma_2, 6),
    "moments": Identity(_grid_moments, _check_moments, 7),
    "contraction": Identity(_grid_contraction, _check_contraction, 8),
    "orthogonality": Identity(_grid_orthogonality, _check_orthogonality, 5),
    "linearization": Identity(_grid_linearization, _check_linearization, 3),
    "rook": Identity(_grid_rook, _check_rook, 5),
    "matching": Identity(_grid_matching, _check_matching, 5),
    "foata-strehl": Identity(_grid_foata_strehl, _check_foata_strehl, 6),
    "connection": Identity(_grid_connection, _check_connection, 6),
    "prop-g": Identity(_grid_prop_g, _check_prop_g, 6),
    "gf": Identity(_grid_gf, _check_gf, 5),
    "rescaling": Identity(_grid_rescaling, _check_rescaling, 6),
    "biane": Identity(_grid_biane, _check_biane, 6),
}


def run_one(name: str, params: Params) -> VerificationReport:
    start = time.perf_counter()
    try:
        witness = IDENTITIES[name].check(params)
    except Exception as exc:  # a crash is a failure with the exception as witness
        witness = f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(name, params, "pass" if witness is None else "fail", witness, elapsed)


def _run_packed(args: Tuple[str, Params]) -> VerificationReport:
    return run_one(*args)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("QYLAG_THREADS", "1")))
    except ValueError:
        return 1


def run_identity(name: str, n_max: Optional[int] = None, seed: int = 0,
                 workers: Optional[int] = None) -> List[VerificationReport]:
    """Run every tuple of one identity; reports come back in grid order."""
    ident = IDENTITIES[name]
    tasks = [(name, p) for p in ident.grid(ident.n_max if n_max is None else n_max, seed)]
    workers = thread_cap() if workers is None else workers
    if workers <= 1 or len(tasks) <= 1:
        return [_run_packed(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_packed, tasks))
