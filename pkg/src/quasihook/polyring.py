"""Sparse multivariate polynomials over the rationals.

Monomials are stored as packed integers.  Every polynomial owns a sorted
tuple of variable indices; each variable gets a 16-bit field (15 value bits
plus a guard bit) and the total degree sits in one more field above them.
With ``x_{vars[0]}`` in the most significant variable field, plain integer
comparison of two keys is exactly graded-lex comparison, and multiplying
monomials is integer addition.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

FIELD = 16
VALUE_MASK = (1 << (FIELD - 1)) - 1
GUARD = 1 << (FIELD - 1)

Rational = mpq


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide` when the remainder is nonzero."""

    def __init__(self, leading_term):
        self.leading_term = leading_term
        coeff, exps = leading_term
        super().__init__(f"nonzero remainder, leading term {coeff} * {exps}")


class TermLimitExceeded(MemoryError):
    pass


_max_terms = int(os.environ.get("QUASI_MAX_TERMS", 2_000_000))


def set_max_terms(limit: int) -> None:
    global _max_terms
    _max_terms = int(limit)


def get_max_terms() -> int:
    return _max_terms


def _check_size(count: int) -> None:
    if count > _max_terms:
        raise TermLimitExceeded(f"{count} terms exceeds the cap of {_max_terms}")


class _Layout:
    """Packing geometry for one variable tuple (cached)."""

    __slots__ = ("vars", "nv", "shifts", "deg_shift", "deg_unit", "guards", "index")

    def __init__(self, vars_: tuple[int, ...]):
        self.vars = vars_
        self.nv = len(vars_)
        self.shifts = tuple(FIELD * (self.nv - 1 - i) for i in range(self.nv))
        self.deg_shift = FIELD * self.nv
        self.deg_unit = 1 << self.deg_shift
        g = 0
        for s in self.shifts:
            g |= GUARD << s
        self.guards = g | (GUARD << self.deg_shift)
        self.index = {v: i for i, v in enumerate(vars_)}

    def pack(self, exps: Sequence[int]) -> int:
        key = sum(exps) << self.deg_shift
        for e, s in zip(exps, self.shifts):
            if e < 0 or e > VALUE_MASK:
                raise ValueError(f"exponent {e} out of range")
            key |= e << s
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> s) & VALUE_MASK for s in self.shifts)

    def degree(self, key: int) -> int:
        return key >> self.deg_shift

    def divides(self, small: int, big: int) -> bool:
        return ((big | self.guards) - small) & self.guards == self.guards


_layouts: dict[tuple[int, ...], _Layout] = {}


def _layout(vars_: tuple[int, ...]) -> _Layout:
    lay = _layouts.get(vars_)
    if lay is None:
        lay = _layouts[vars_] = _Layout(vars_)
    return lay


def _to_q(c) -> mpq:
    if isinstance(c, str):
        return mpq(c)
    return mpq(c)


class _NegInf:
    """Degree of the zero polynomial."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


NEG_INF = _NegInf()


class MultiPoly:
    """Immutable sparse polynomial in ``x_v`` for ``v`` in ``vars``."""

    __slots__ = ("vars", "_lay", "_t", "_hash")

    def __init__(self, vars_: Iterable[int] = (), terms: Mapping[tuple[int, ...], object] | None = None):
        vars_t = tuple(sorted(set(int(v) for v in vars_)))
        if any(v < 1 for v in vars_t):
            raise ValueError("variable indices must be positive")
        self.vars = vars_t
        self._lay = _layout(vars_t)
        t: dict[int, mpq] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != len(vars_t):
                    raise ValueError("exponent vector length does not match vars")
                q = _to_q(c)
                if q:
                    key = self._lay.pack(exps)
                    nq = t.get(key, 0) + q
                    if nq:
                        t[key] = nq
                    else:
                        t.pop(key, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, vars_: tuple[int, ...], t: dict[int, mpq]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.vars = vars_
        obj._lay = _layout(vars_)
        obj._t = t
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, vars_: Iterable[int] = ()) -> "MultiPoly":
        return cls._raw(tuple(sorted(set(vars_))), {})

    @classmethod
    def const(cls, c, vars_: Iterable[int] = ()) -> "MultiPoly":
        vt = tuple(sorted(set(vars_)))
        q = _to_q(c)
        return cls._raw(vt, {0: q} if q else {})

    @classmethod
    def var(cls, i: int, vars_: Iterable[int] = ()) -> "MultiPoly":
        vt = tuple(sorted(set(vars_) | {i}))
        lay = _layout(vt)
        key = lay.deg_unit | (1 << lay.shifts[lay.index[i]])
        return cls._raw(vt, {key: mpq(1)})

    @classmethod
    def monomial(cls, vars_: Iterable[int], exps: Sequence[int], c=1) -> "MultiPoly":
        vt = tuple(sorted(set(vars_)))
        return cls(vt, {tuple(exps): c})

    # basic protocol

    @property
    def terms(self) -> dict[tuple[int, ...], mpq]:
        up = self._lay.unpack
        return {up(k): c for k, c in self._t.items()}

    def packed(self) -> Mapping[int, mpq]:
        """Terms keyed by packed monomial integers (comparable only for equal ``vars``)."""
        return self._t

    def items(self) -> Iterator[tuple[tuple[int, ...], mpq]]:
        """Terms in descending graded-lex order."""
        up = self._lay.unpack
        for k in sorted(self._t, reverse=True):
            yield up(k), self._t[k]

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def support_vars(self) -> tuple[int, ...]:
        """Variables that actually occur."""
        lay = self._lay
        used = 0
        for k in self._t:
            used |= k
        return tuple(v for v, s in zip(lay.vars, lay.shifts) if (used >> s) & VALUE_MASK)

    def _canon(self) -> tuple:
        sv = self.support_vars()
        p = self.lift(self.vars).restrict(sv) if sv != self.vars else self
        return sv, frozenset(p._t.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        if self.vars == other.vars:
            return self._t == other._t
        return self._canon() == other._canon()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._canon())
        return self._hash

    # variable-set management

    def lift(self, vars_: Iterable[int]) -> "MultiPoly":
        """Re-express over a superset of variables."""
        vt = tuple(sorted(set(vars_) | set(self.vars)))
        if vt == self.vars:
            return self
        src, dst = self._lay, _layout(vt)
        if not self._t:
            return MultiPoly._raw(vt, {})
        shifts = [dst.shifts[dst.index[v]] for v in src.vars]
        t = {}
        for k, c in self._t.items():
            nk = (k >> src.deg_shift) << dst.deg_shift
            for s_old, s_new in zip(src.shifts, shifts):
                nk |= ((k >> s_old) & VALUE_MASK) << s_new
            t[nk] = c
        return MultiPoly._raw(vt, t)

    def restrict(self, vars_: Iterable[int]) -> "MultiPoly":
        """Drop variables that do not occur; raises if one does."""
        vt = tuple(sorted(set(vars_)))
        if vt == self.vars:
            return self
        missing = set(self.support_vars()) - set(vt)
        if missing:
            raise ValueError(f"variables {sorted(missing)} occur in the polynomial")
        extra = set(vt) - set(self.vars)
        base = self.lift(extra) if extra else self
        src, dst = base._lay, _layout(vt)
        t = {}
        for k, c in base._t.items():
            nk = (k >> src.deg_shift) << dst.deg_shift
            for v in vt:
                nk |= ((k >> src.shifts[src.index[v]]) & VALUE_MASK) << dst.shifts[dst.index[v]]
            t[nk] = c
        return MultiPoly._raw(vt, t)

    def _coerce(self, other) -> tuple["MultiPoly", "MultiPoly"]:
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        u = tuple(sorted(set(self.vars) | set(other.vars)))
        return self.lift(u), other.lift(u)

    # ring operations

    def __add__(self, other) -> "MultiPoly":
        a, b = self._coerce(other)
        t = dict(a._t)
        for k, c in b._t.items():
            nc = t.get(k, 0) + c
            if nc:
                t[k] = nc
            else:
                t.pop(k, None)
        return MultiPoly._raw(a.vars, t)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> "MultiPoly":
        a, b = self._coerce(other)
        t = dict(a._t)
        for k, c in b._t.items():
            nc = t.get(k, 0) - c
            if nc:
                t[k] = nc
            else:
                t.pop(k, None)
        return MultiPoly._raw(a.vars, t)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        q = _to_q(c)
        if not q:
            return MultiPoly._raw(self.vars, {})
        return MultiPoly._raw(self.vars, {k: v * q for k, v in self._t.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        a, b = self._coerce(other)
        if len(a._t) < len(b._t):
            a, b = b, a
        t: dict[int, mpq] = {}
        get = t.get
        bt = list(b._t.items())
        for ka, ca in a._t.items():
            for kb, cb in bt:
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
            _check_size(len(t))
        t = {k: c for k, c in t.items() if c}
        return MultiPoly._raw(a.vars, t)

    def __rmul__(self, other) -> "MultiPoly":
        return self.scale(other)

    def __truediv__(self, c) -> "MultiPoly":
        if isinstance(c, MultiPoly):
            return exact_divide(self, c)
        return self.scale(1 / _to_q(c))

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # inspection

    def total_degree(self):
        if not self._t:
            return NEG_INF
        return max(self._t) >> self._lay.deg_shift

    def is_homogeneous(self) -> bool:
        ds = {k >> self._lay.deg_shift for k in self._t}
        return len(ds) <= 1

    def leading_term(self) -> tuple[mpq, tuple[int, ...]]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._t)
        return self._t[k], self._lay.unpack(k)

    def constant_value(self) -> mpq:
        """The coefficient of the empty monomial."""
        return self._t.get(0, mpq(0))

    def coefficient(self, exps: Sequence[int]) -> mpq:
        return self._t.get(self._lay.pack(exps), mpq(0))

    def degree_in(self, v: int):
        if not self._t:
            return NEG_INF
        if v not in self._lay.index:
            return 0
        s = self._lay.shifts[self._lay.index[v]]
        return max((k >> s) & VALUE_MASK for k in self._t)

    def leading_coeff_in(self, v: int) -> "MultiPoly":
        """Coefficient of ``x_v ** degree_in(v)``; the result does not involve ``x_v``."""
        if v not in self._lay.index or not self._t:
            return self
        return self.coeff_in(v, self.degree_in(v))

    def coeff_in(self, v: int, e: int) -> "MultiPoly":
        lay = self._lay
        if v not in lay.index:
            return self if e == 0 else MultiPoly.zero(self.vars)
        s = lay.shifts[lay.index[v]]
        drop = (e << s) + e * lay.deg_unit
        t = {k - drop: c for k, c in self._t.items() if (k >> s) & VALUE_MASK == e}
        return MultiPoly._raw(self.vars, t)

    def diff(self, v: int) -> "MultiPoly":
        lay = self._lay
        if v not in lay.index:
            return MultiPoly.zero(self.vars)
        s = lay.shifts[lay.index[v]]
        drop = (1 << s) + lay.deg_unit
        t = {}
        for k, c in self._t.items():
            e = (k >> s) & VALUE_MASK
            if e:
                t[k - drop] = c * e
        return MultiPoly._raw(self.vars, t)

    def evaluate(self, point: Mapping[int, object]) -> mpq:
        total = mpq(0)
        vals = [mpq(point[v]) for v in self.vars]
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def substitute(self, v: int, value: "MultiPoly") -> "MultiPoly":
        """Replace ``x_v`` by a polynomial."""
        if v not in self._lay.index:
            return self
        lay = self._lay
        s = lay.shifts[lay.index[v]]
        by_power: dict[int, dict[int, mpq]] = {}
        for k, c in self._t.items():
            e = (k >> s) & VALUE_MASK
            by_power.setdefault(e, {})[k - (e << s) - e * lay.deg_unit] = c
        out = MultiPoly.zero(self.vars)
        for e, t in by_power.items():
            out = out + MultiPoly._raw(self.vars, t) * value**e
        return out

    # serialization

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"coeff": _qstr(c), "exps": list(e)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls(data["vars"], {tuple(t["exps"]): mpq(t["coeff"]) for t in data["terms"]})

    def to_text(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "·".join(
                f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_qstr(mag)}·{mono}"
            else:
                body = _qstr(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r}, vars={self.vars})"


def _qstr(q: mpq) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def linear_combination(pairs: Iterable[tuple[object, MultiPoly]]) -> MultiPoly:
    """``Σ c_i p_i`` accumulated in one pass."""
    acc: dict[int, mpq] = {}
    lifted = [(mpq(c), p) for c, p in pairs]
    allv = set()
    for _, p in lifted:
        allv |= set(p.vars)
    vt = tuple(sorted(allv))
    get = acc.get
    for c, p in lifted:
        if not c:
            continue
        for k, v in p.lift(vt)._t.items():
            acc[k] = get(k, 0) + c * v
        _check_size(len(acc))
    return MultiPoly._raw(vt, {k: v for k, v in acc.items() if v})


def x(i: int, vars_: Iterable[int] = ()) -> MultiPoly:
    return MultiPoly.var(i, vars_)


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``p == q * d`` exactly.

    Graded-lex division with remainder, driven by a max-heap of pending
    monomials; stops at the first term whose monomial is not a multiple of
    the divisor's leading monomial.
    """
    import heapq

    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p, d = p._coerce(d)
    lay = p._lay
    if not p._t:
        return MultiPoly._raw(p.vars, {})
    dkeys = sorted(d._t, reverse=True)
    lk = dkeys[0]
    lc = d._t[lk]
    tail = [(k - lk, d._t[k]) for k in dkeys[1:]]
    rem = dict(p._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q: dict[int, mpq] = {}
    while heap:
        k = -heapq.heappop(heap)
        while heap and -heap[0] == k:
            heapq.heappop(heap)
        c = rem.pop(k, None)
        if not c:
            continue
        if not lay.divides(lk, k):
            raise NotDivisible((c, lay.unpack(k)))
        qk = k - lk
        qc = c / lc
        q[qk] = q.get(qk, 0) + qc
        for off, dc in tail:
            nk = qk + lk + off
            old = rem.get(nk)
            nv = (old or 0) - qc * dc
            if nv:
                if old is None:
                    heapq.heappush(heap, -nk)
                rem[nk] = nv
            elif old is not None:
                del rem[nk]
    return MultiPoly._raw(p.vars, {k: c for k, c in q.items() if c})


def divides(d: MultiPoly, p: MultiPoly) -> bool:
    try:
        exact_divide(p, d)
    except NotDivisible:
        return False
    return True


def apply_permutation(sigma: Mapping[int, int], p: MultiPoly) -> MultiPoly:
    """Substitute ``x_i -> x_{sigma(i)}``; variables outside ``sigma`` are fixed."""
    dom = set(sigma)
    if set(sigma.values()) != dom:
        raise ValueError("sigma is not a bijection of its domain")
    vt = tuple(sorted(set(p.vars) | dom))
    p = p.lift(vt)
    lay = p._lay
    moves = [(lay.shifts[lay.index[i]], lay.shifts[lay.index[j]]) for i, j in sigma.items() if i != j]
    if not moves:
        return p
    clear = 0
    for s, _ in moves:
        clear |= VALUE_MASK << s
    t = {}
    for k, c in p._t.items():
        nk = k & ~clear
        for s_from, s_to in moves:
            nk |= ((k >> s_from) & VALUE_MASK) << s_to
        t[nk] = c
    return MultiPoly._raw(vt, t)


def transposition_difference(p: MultiPoly, i: int, j: int) -> MultiPoly:
    """``(1 - (i,j)) p``."""
    return p - apply_permutation({i: j, j: i}, p)


def elementary_symmetric(vars_: Sequence[int], i: int) -> MultiPoly:
    vt = tuple(sorted(set(vars_)))
    if i < 0 or i > len(vt):
        return MultiPoly.zero(vt)
    terms = {}
    for combo in combinations(range(len(vt)), i):
        e = [0] * len(vt)
        for c in combo:
            e[c] = 1
        terms[tuple(e)] = 1
    return MultiPoly(vt, terms)


def elementary_symmetric_omitting(vars_: Sequence[int], i: int, omit: int) -> MultiPoly:
    rest = [v for v in vars_ if v != omit]
    return elementary_symmetric(rest, i).lift(vars_)


def e_of_partition(vars_: Sequence[int], nu: Sequence[int]) -> MultiPoly:
    out = MultiPoly.const(1, vars_)
    for part in nu:
        if part:
            out = out * elementary_symmetric(vars_, part)
    return out


def _adjacent_swaps(vars_: Sequence[int]) -> Iterator[dict[int, int]]:
    vs = sorted(vars_)
    for a, b in zip(vs, vs[1:]):
        yield {a: b, b: a}


def is_symmetric_in(p: MultiPoly, vars_: Sequence[int]) -> bool:
    return all(apply_permutation(s, p) == p for s in _adjacent_swaps(vars_))


def is_antisymmetric_in(p: MultiPoly, vars_: Sequence[int]) -> bool:
    return all(apply_permutation(s, p) == -p for s in _adjacent_swaps(vars_))


def integrate_between(coeffs: Sequence[MultiPoly], lower: int, upper: int) -> MultiPoly:
    """``∫_{x_lower}^{x_upper} Σ_j coeffs[j] t^j dt`` as a polynomial."""
    if lower == upper:
        raise ValueError("integration bounds must be distinct variables")
    vt = set([lower, upper])
    for c in coeffs:
        vt |= set(c.vars)
    vt = tuple(sorted(vt))
    lay = _layout(vt)
    su, sl = lay.shifts[lay.index[upper]], lay.shifts[lay.index[lower]]
    out: dict[int, mpq] = {}
    for j, c in enumerate(coeffs):
        if c.is_zero():
            continue
        c = c.lift(vt)
        e = j + 1
        inv = mpq(1, e)
        up_k = (e << su) + e * lay.deg_unit
        lo_k = (e << sl) + e * lay.deg_unit
        for k, cc in c._t.items():
            v = cc * inv
            for mk, val in ((k + up_k, v), (k + lo_k, -v)):
                nv = out.get(mk, 0) + val
                if nv:
                    out[mk] = nv
                else:
                    out.pop(mk, None)
    return MultiPoly._raw(vt, out)


class TPoly:
    """Polynomial in an auxiliary variable ``t`` with :class:`MultiPoly` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[MultiPoly]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    def __mul__(self, other: "TPoly") -> "TPoly":
        if not self.coeffs or not other.coeffs:
            return TPoly([])
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                term = a * b
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        vt = self.coeffs[0].vars
        return TPoly([c if c is not None else MultiPoly.zero(vt) for c in out])

    def shift(self, p: int) -> "TPoly":
        """Multiply by ``t**p``."""
        if not self.coeffs:
            return self
        z = MultiPoly.zero(self.coeffs[0].vars)
        return TPoly([z] * p + self.coeffs)

    def derivative(self) -> "TPoly":
        return TPoly([c.scale(j) for j, c in enumerate(self.coeffs)][1:])

    def at(self, v: int) -> MultiPoly:
        """Evaluate at ``t = x_v``."""
        out = None
        for j, c in enumerate(self.coeffs):
            term = c * MultiPoly.var(v, c.vars) ** j
            out = term if out is None else out + term
        return out if out is not None else MultiPoly.zero((v,))


def vandermonde(entries: Sequence[int]) -> MultiPoly:
    """``∏_{a<b} (x_a - x_b)`` over the listed entries, pairs ordered by value."""
    vs = sorted(entries)
    out = MultiPoly.const(1, vs)
    for a, b in combinations(vs, 2):
        out = out * (MultiPoly.var(a, vs) - MultiPoly.var(b, vs))
    return out


def vandermonde_factor(d) -> MultiPoly:
    """``V_D``: product over same-column pairs of a hook tableau."""
    return vandermonde(d.column).lift(d.members())


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
