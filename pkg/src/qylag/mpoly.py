"""Sparse multivariate polynomials over the integers.

Every polynomial lives in Z[x, y, q, beta, t, a, b].  Exponent vectors are
packed into a single Python int (16 bits per variable, ``x`` in the lowest
field) so that multiplying monomials is one integer addition; the public
:meth:`MPoly.terms` view unpacks them into dense length-7 tuples.

Truncated power-series arithmetic in ``q`` and ``t`` is available through
:class:`TruncationPolicy` and the module-level :func:`add`, :func:`mul` and
:func:`series_inverse`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .errors import MissingVariable, NoTruncation, NotAUnit, SubstitutionCycle

VARS: Tuple[str, ...] = ("x", "y", "q", "beta", "t", "a", "b")
NVARS = len(VARS)
_ALIASES = {"β": "beta"}
_WIDTH = 16
_MASK = (1 << _WIDTH) - 1
_MAX_EXP = _MASK

Exps = Tuple[int, ...]
Coercible = Union["MPoly", int]

Rat = Fraction


def var_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return VARS.index(name)
    except ValueError:
        raise KeyError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_WIDTH * i)
    return key


def _unpack(key: int) -> Exps:
    return tuple((key >> (_WIDTH * i)) & _MASK for i in range(NVARS))


def _field(key: int, idx: int) -> int:
    return (key >> (_WIDTH * idx)) & _MASK


def _order_key(exps: Exps):
    # graded lex, highest first
    return (-sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class TruncationPolicy:
    """Drop every monomial whose q- (t-) exponent reaches the bound."""

    max_q_degree: Optional[int] = None
    max_t_degree: Optional[int] = None

    def __post_init__(self):
        for bound in (self.max_q_degree, self.max_t_degree):
            if bound is not None and bound < 0:
                raise ValueError("truncation bounds must be non-negative")

    @property
    def bounded(self) -> bool:
        return self.max_q_degree is not None or self.max_t_degree is not None

    def keeps(self, key: int) -> bool:
        if self.max_q_degree is not None and _field(key, 2) >= self.max_q_degree:
            return False
        if self.max_t_degree is not None and _field(key, 4) >= self.max_t_degree:
            return False
        return True


NO_TRUNCATION = TruncationPolicy()


class MPoly:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Optional[Mapping[Exps, int]] = None):
        packed: Dict[int, int] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != NVARS:
                    raise ValueError(f"exponent vector must have length {NVARS}")
                if c:
                    k = _pack(exps)
                    packed[k] = packed.get(k, 0) + int(c)
            packed = {k: c for k, c in packed.items() if c}
        self._t = packed
        self._hash = None

    @classmethod
    def _raw(cls, packed: Dict[int, int]) -> "MPoly":
        p = cls.__new__(cls)
        p._t = packed
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        return cls._raw({power << (_WIDTH * var_index(name)): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "MPoly":
        vec = [0] * NVARS
        for name, e in exps.items():
            vec[var_index(name)] = e
        return cls({tuple(vec): coeff})

    @staticmethod
    def coerce(v: Coercible) -> "MPoly":
        if isinstance(v, MPoly):
            return v
        if isinstance(v, int):
            return MPoly.const(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to MPoly")

    # -- inspection -------------------------------------------------------

    def terms(self) -> Dict[Exps, int]:
        return {_unpack(k): c for k, c in self._t.items()}

    def sorted_terms(self):
        return sorted(self.terms().items(), key=lambda kv: _order_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        idx = var_index(name)
        return max((_field(k, idx) for k in self._t), default=-1)

    def total_degree(self) -> int:
        return max((sum(_unpack(k)) for k in self._t), default=-1)

    def variables(self) -> Tuple[str, ...]:
        used = 0
        for k in self._t:
            used |= k
        return tuple(v for i, v in enumerate(VARS) if _field(used, i))

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._t)

    def coeff(self, **exps: int) -> int:
        vec = [0] * NVARS
        for name, e in exps.items():
            vec[var_index(name)] = e
        return self._t.get(_pack(vec), 0)

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other: Coercible) -> "MPoly":
        return add(self, MPoly.coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "MPoly":
        return add(self, -MPoly.coerce(other))

    def __rsub__(self, other: Coercible) -> "MPoly":
        return add(MPoly.coerce(other), -self)

    def __mul__(self, other: Coercible) -> "MPoly":
        return mul(self, MPoly.coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, name: str, power: int) -> "MPoly":
        """Multiply by ``name**power`` (power may be negative if every term allows it)."""
        idx = var_index(name)
        out = {}
        for k, c in self._t.items():
            e = _field(k, idx) + power
            if e < 0:
                raise ValueError(f"negative exponent for {name}")
            out[k + (power << (_WIDTH * idx))] = c
        return MPoly._raw(out)

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"MPoly({self.to_plain()!r})"

    def __str__(self) -> str:
        return self.to_plain()

    def to_json_terms(self):
        return [{"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms(), separators=(",", ":"))

    @classmethod
    def from_json_terms(cls, records) -> "MPoly":
        return cls({tuple(r["exps"]): int(r["coeff"]) for r in records})

    def to_plain(self) -> str:
        """Text form with each monomial's q-part collected, e.g. ``(2+q)*y + 1``."""
        if not self._t:
            return "0"
        groups: Dict[Exps, Dict[int, int]] = {}
        for e, c in self.terms().items():
            rest = e[:2] + (0,) + e[3:]
            groups.setdefault(rest, {})[e[2]] = c
        if len(groups) == 1 and not any(next(iter(groups))):
            return _plain_qpoly(groups[(0,) * NVARS], sep=" ")
        pieces = []
        for rest in sorted(groups, key=_order_key):
            qpart = groups[rest]
            mono = _plain_monomial(rest)
            if len(qpart) == 1:
                (qe, c), = qpart.items()
                body = _plain_monomial(rest[:2] + (qe,) + rest[3:])
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                if not body:
                    text = str(mag)
                elif mag == 1:
                    text = body
                else:
                    text = f"{mag}*{body}"
            else:
                inner = _plain_qpoly(qpart)
                sign = "+"
                text = f"({inner})" + (f"*{mono}" if mono else "")
            pieces.append((sign, text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def to_latex(self) -> str:
        if not self._t:
            return "0"
        out = ""
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = " ".join(
                (_LATEX_NAMES[j] if p == 1 else f"{_LATEX_NAMES[j]}^{{{p}}}")
                for j, p in enumerate(e) if p
            )
            mag = abs(c)
            body = mono if (mono and mag == 1) else (f"{mag} {mono}".strip())
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


_LATEX_NAMES = ("x", "y", "q", r"\beta", "t", "a", "b")


def _plain_monomial(exps: Exps) -> str:
    parts = []
    for name, p in zip(VARS, exps):
        if p == 1:
            parts.append(name)
        elif p > 1:
            parts.append(f"{name}^{p}")
    return "*".join(parts)


def _plain_qpoly(qpart: Dict[int, int], sep: str = "") -> str:
    out = ""
    for i, qe in enumerate(sorted(qpart)):
        c = qpart[qe]
        body = "" if qe == 0 else ("q" if qe == 1 else f"q^{qe}")
        mag = abs(c)
        text = str(mag) if not body else (body if mag == 1 else f"{mag}*{body}")
        if i == 0:
            out = ("-" if c < 0 else "") + text
        else:
            out += sep + ("-" if c < 0 else "+") + sep + text
    return out


ZERO = MPoly._raw({})
ONE = MPoly._raw({0: 1})
X, Y, Q, BETA, T, A, B = (MPoly.var(v) for v in VARS)


def truncate(p: MPoly, policy: TruncationPolicy) -> MPoly:
    if not policy.bounded:
        return p
    return MPoly._raw({k: c for k, c in p._t.items() if policy.keeps(k)})


def add(p: MPoly, r: MPoly, policy: TruncationPolicy = NO_TRUNCATION) -> MPoly:
    if len(p._t) < len(r._t):
        p, r = r, p
    out = dict(p._t)
    for k, c in r._t.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return truncate(MPoly._raw(out), policy)


def mul(p: MPoly, r: MPoly, policy: TruncationPolicy = NO_TRUNCATION) -> MPoly:
    if not p._t or not r._t:
        return ZERO
    if _max_field(p) + _max_field(r) > _MAX_EXP:
        raise OverflowError("exponent overflow in product")
    out: Dict[int, int] = {}
    get = out.get
    qmax, tmax = policy.max_q_degree, policy.max_t_degree
    if qmax is None and tmax is None:
        for k1, c1 in p._t.items():
            for k2, c2 in r._t.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
    else:
        qshift, tshift = 2 * _WIDTH, 4 * _WIDTH
        qcap = qmax if qmax is not None else _MAX_EXP + 1
        tcap = tmax if tmax is not None else _MAX_EXP + 1
        right = [(k, c, (k >> qshift) & _MASK, (k >> tshift) & _MASK) for k, c in r._t.items()]
        for k1, c1 in p._t.items():
            q1 = (k1 >> qshift) & _MASK
            t1 = (k1 >> tshift) & _MASK
            if q1 >= qcap or t1 >= tcap:
                continue
            for k2, c2, q2, t2 in right:
                if q1 + q2 >= qcap or t1 + t2 >= tcap:
                    continue
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
    return MPoly._raw({k: c for k, c in out.items() if c})


def _max_field(p: MPoly) -> int:
    m = 0
    for k in p._t:
        for i in range(NVARS):
            f = _field(k, i)
            if f > m:
                m = f
    return m


def substitute(p: MPoly, var: str, value: Coercible) -> MPoly:
    """Replace every occurrence of ``var`` in ``p`` by ``value`` and expand."""
    value = MPoly.coerce(value)
    idx = var_index(var)
    if idx in {var_index(v) for v in value.variables()}:
        raise SubstitutionCycle(f"value mentions {VARS[idx]}")
    shift = _WIDTH * idx
    powers = {0: ONE}
    result: Dict[int, int] = {}
    for k, c in p._t.items():
        e = (k >> shift) & _MASK
        if e not in powers:
            powers[e] = value ** e
        rest = k - (e << shift)
        for k2, c2 in powers[e]._t.items():
            kk = rest + k2
            result[kk] = result.get(kk, 0) + c * c2
    return MPoly._raw({k: c for k, c in result.items() if c})


def substitute_many(p: MPoly, values: Mapping[str, Coercible]) -> MPoly:
    for name, v in values.items():
        p = substitute(p, name, v)
    return p


def eval_rat(p: MPoly, assignment: Mapping[str, Union[Fraction, int]]) -> Fraction:
    """Exact value of ``p`` at a rational point."""
    values = {var_index(k): Fraction(v) for k, v in assignment.items()}
    for name in p.variables():
        if var_index(name) not in values:
            raise MissingVariable(name)
    cache: Dict[Tuple[int, int], Fraction] = {}
    total = Fraction(0)
    for k, c in p._t.items():
        term = Fraction(c)
        for i in range(NVARS):
            e = _field(k, i)
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = values[i] ** e
                term *= cache[key]
        total += term
    return total


def coeff_in_var(p: MPoly, var: str, k: int) -> MPoly:
    """The polynomial multiplying ``var**k`` in ``p``."""
    idx = var_index(var)
    shift = _WIDTH * idx
    return MPoly._raw({
        key - (k << shift): c for key, c in p._t.items() if (key >> shift) & _MASK == k
    })


def is_nonnegative(p: MPoly) -> bool:
    return all(c > 0 for c in p._t.values())


def series_inverse(p: MPoly, policy: TruncationPolicy) -> MPoly:
    """Inverse of ``p`` in the power-series ring cut off by ``policy``.

    ``p`` must have constant term 1 and every other monomial must involve a
    truncated variable, otherwise the geometric expansion does not terminate.
    """
    if not policy.bounded:
        raise NoTruncation("series_inverse needs a q or t bound")
    if p.constant_term() != 1:
        raise NotAUnit("constant term must be 1")
    u = ONE - p  # p = 1 - u
    for k in u._t:
        in_q = policy.max_q_degree is not None and _field(k, 2) > 0
        in_t = policy.max_t_degree is not None and _field(k, 4) > 0
        if not (in_q or in_t):
            raise NotAUnit("non-constant term outside the truncated variables")
    u = truncate(u, policy)
    result = ONE
    power = ONE
    # each factor of u raises the q- or t-degree by at least one
    steps = (policy.max_q_degree or 0) + (policy.max_t_degree or 0)
    for _ in range(steps):
        power = mul(power, u, policy)
        if not power:
            break
        result = add(result, power)
    return truncate(result, policy)
