"""The rational group ring of a symmetric group on a finite set of labels.

A permutation is stored as the tuple of images of the sorted support set.
Products compose right to left: ``(g * h)(i) = g(h(i))``, which makes
:func:`act` a left action.
"""

from __future__ import annotations

from itertools import permutations
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .combinatorics import HookTableau
from .polyring import MultiPoly, apply_permutation, linear_combination


def sign(images: Sequence[int], support: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(support)}
    perm = [pos[v] for v in images]
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


class GroupRingElement:
    __slots__ = ("support", "terms")

    def __init__(self, support: Iterable[int], terms: Mapping[tuple[int, ...], object] | None = None):
        self.support = tuple(sorted(set(support)))
        t = {}
        for perm, c in (terms or {}).items():
            perm = tuple(perm)
            if sorted(perm) != list(self.support):
                raise ValueError(f"{perm} does not permute {self.support}")
            q = mpq(c)
            if q:
                t[perm] = t.get(perm, 0) + q
        self.terms = {p: c for p, c in t.items() if c}

    @classmethod
    def identity(cls, support: Iterable[int], coeff=1) -> "GroupRingElement":
        sup = tuple(sorted(set(support)))
        return cls(sup, {sup: coeff})

    @classmethod
    def from_mapping(cls, support: Iterable[int], sigma: Mapping[int, int], coeff=1) -> "GroupRingElement":
        sup = tuple(sorted(set(support)))
        return cls(sup, {tuple(sigma.get(v, v) for v in sup): coeff})

    @classmethod
    def transposition(cls, support: Iterable[int], i: int, j: int, coeff=1) -> "GroupRingElement":
        return cls.from_mapping(support, {i: j, j: i}, coeff)

    def lift(self, support: Iterable[int]) -> "GroupRingElement":
        sup = tuple(sorted(set(support) | set(self.support)))
        if sup == self.support:
            return self
        out = {}
        for perm, c in self.terms.items():
            m = dict(zip(self.support, perm))
            out[tuple(m.get(v, v) for v in sup)] = c
        return GroupRingElement(sup, out)

    def _pair(self, other: "GroupRingElement"):
        sup = set(self.support) | set(other.support)
        return self.lift(sup), other.lift(sup)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        a, b = self._pair(other)
        t = dict(a.terms)
        for p, c in b.terms.items():
            t[p] = t.get(p, 0) + c
        return GroupRingElement(a.support, t)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.support, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def scale(self, c) -> "GroupRingElement":
        q = mpq(c)
        return GroupRingElement(self.support, {p: v * q for p, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupRingElement):
            return self.scale(other)
        a, b = self._pair(other)
        pos = {v: i for i, v in enumerate(a.support)}
        t: dict[tuple[int, ...], mpq] = {}
        for g, cg in a.terms.items():
            for h, ch in b.terms.items():
                gh = tuple(g[pos[hv]] for hv in h)
                t[gh] = t.get(gh, 0) + cg * ch
        return GroupRingElement(a.support, t)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        a, b = self._pair(other)
        return a.terms == b.terms

    def __len__(self) -> int:
        return len(self.terms)

    def permutations(self) -> list[dict[int, int]]:
        return [dict(zip(self.support, p)) for p in self.terms]

    def to_json(self) -> list[dict]:
        out = []
        for perm in sorted(self.terms):
            c = self.terms[perm]
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append({"perm": {str(k): v for k, v in zip(self.support, perm)}, "coeff": cs})
        return out

    def __repr__(self) -> str:
        return f"GroupRingElement(support={self.support}, terms={len(self.terms)})"


def subgroup_sum(X: Iterable[int], Y: Iterable[int] | None = None, signed: bool = False) -> GroupRingElement:
    """``[S_Y]`` (or ``[S_Y]'`` when signed) inside the group ring on ``X``.

    ``Y`` defaults to all of ``X``; an empty or singleton ``Y`` gives the
    trivial group.
    """
    sup = tuple(sorted(set(X)))
    ys = tuple(sorted(set(Y))) if Y is not None else sup
    if not set(ys) <= set(sup):
        raise ValueError("Y must be a subset of X")
    t = {}
    for img in permutations(ys):
        m = dict(zip(ys, img))
        perm = tuple(m.get(v, v) for v in sup)
        t[perm] = sign(img, ys) if signed else 1
    return GroupRingElement(sup, t)


def column_symmetrizer(d: HookTableau) -> GroupRingElement:
    return subgroup_sum(d.members(), d.column, signed=True)


def row_symmetrizer(d: HookTableau) -> GroupRingElement:
    return subgroup_sum(d.members(), d.row, signed=False)


def hook_dimension(n: int, k: int) -> int:
    return comb(n - 1, k - 1)


def gamma(d: HookTableau, f_lambda: int | None = None) -> GroupRingElement:
    """Young idempotent ``f C(D) R(D) / n!``."""
    if f_lambda is None:
        f_lambda = hook_dimension(d.n, d.k)
    return (column_symmetrizer(d) * row_symmetrizer(d)).scale(mpq(f_lambda, factorial(d.n)))


def act(g: GroupRingElement, p: MultiPoly) -> MultiPoly:
    """``Σ c_σ · σp``; labels outside ``g.support`` are fixed."""
    return linear_combination(
        (c, apply_permutation(dict(zip(g.support, perm)), p)) for perm, c in g.terms.items()
    ).lift(p.vars)


def telescoping_factorization(X: Sequence[int], signed: bool = False) -> list[GroupRingElement]:
    """Factors ``1 ± (i_1,i_r) ± ... ± (i_{r-1},i_r)`` for ``r = n..2``.

    Their product, left to right, is ``[S_X]`` (or ``[S_X]'``).
    """
    xs = list(X)
    if not xs:
        raise ValueError("X must be nonempty")
    sup = tuple(sorted(xs))
    eps = -1 if signed else 1
    factors = []
    for r in range(len(xs) - 1, 0, -1):
        f = GroupRingElement.identity(sup)
        for a in xs[:r]:
            f = f + GroupRingElement.transposition(sup, a, xs[r], eps)
        factors.append(f)
    return factors


def product(elements: Sequence[GroupRingElement], support: Iterable[int]) -> GroupRingElement:
    out = GroupRingElement.identity(support)
    for e in elements:
        out = out * e
    return out


def gamma_hook_factored(d: HookTableau) -> GroupRingElement:
    """``γ_D`` assembled from the telescoped column and row sums.

    ``(1/(n (n-k)! (k-1)!)) {1 - Σ(s_1,c)} [S_col']' {1 + Σ(s_1,r)} [S_row']``
    with ``col'`` and ``row'`` the column and row minus the corner.
    """
    sup = tuple(sorted(d.members()))
    n, k = d.n, d.k
    s1 = d.corner
    left = GroupRingElement.identity(sup)
    for c in d.column[1:]:
        left = left - GroupRingElement.transposition(sup, s1, c)
    right = GroupRingElement.identity(sup)
    for r in d.row[1:]:
        right = right + GroupRingElement.transposition(sup, s1, r)
    body = left * subgroup_sum(sup, d.column[1:], signed=True) * right * subgroup_sum(sup, d.row[1:])
    return body.scale(mpq(1, n * factorial(n - k) * factorial(k - 1)))
