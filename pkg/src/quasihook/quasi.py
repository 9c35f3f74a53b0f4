"""Integral and determinantal quasiinvariants attached to hook tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from typing import Sequence

from gmpy2 import mpq

from .combinatorics import (
    HookTableau,
    StrictPartition,
    strict_partitions_bounded,
    triangular,
)
from .groupring import act, column_symmetrizer, gamma, hook_dimension, row_symmetrizer, sign
from .hilbert import hilbert_gamma
from .linalg import DEFAULT_PRIME, Echelon, rank_mod_p
from .polyring import (
    MultiPoly,
    NotDivisible,
    TPoly,
    e_of_partition,
    elementary_symmetric,
    exact_divide,
    integrate_between,
    transposition_difference,
    vandermonde,
)


@lru_cache(maxsize=256)
def power_product(members: tuple[int, ...], m: int) -> TPoly:
    """``∏_{s in members} (t - x_s)^m`` as a polynomial in ``t``."""
    one = MultiPoly.const(1, members)
    out = TPoly([one])
    for s in members:
        lin = TPoly([-MultiPoly.var(s, members), one])
        for _ in range(m):
            out = out * lin
    return out


def _members(d: HookTableau) -> tuple[int, ...]:
    return tuple(sorted(d.members()))


@lru_cache(maxsize=4096)
def _r_cached(members: tuple[int, ...], lower: int, upper: int, p: int, m: int) -> MultiPoly:
    integrand = power_product(members, m).shift(p)
    return integrate_between(integrand.coeffs, lower, upper).lift(members)


def r_poly(d: HookTableau, lower: int, upper: int, p: int, m: int) -> MultiPoly:
    """``R_{D; lower, upper}^{p;m} = ∫_{x_lower}^{x_upper} t^p ∏_l (t - x_l)^m dt``.

    ``lower`` and ``upper`` are entry labels of ``d``, not positions.
    """
    mem = d.members()
    if lower == upper:
        raise ValueError("integration bounds must be distinct entries")
    if lower not in mem or upper not in mem:
        raise ValueError(f"bounds {lower}, {upper} must be entries of {d}")
    if p < 0 or m < 0:
        raise ValueError("p and m must be nonnegative")
    return _r_cached(_members(d), lower, upper, p, m)


def r_poly_closed_m0(members: Sequence[int], lower: int, upper: int, p: int) -> MultiPoly:
    """``(x_upper^{p+1} - x_lower^{p+1}) / (p+1)``."""
    xs = tuple(sorted(members))
    e = p + 1
    return (MultiPoly.var(upper, xs) ** e - MultiPoly.var(lower, xs) ** e).scale(mpq(1, e))


def r_poly_via_recurrence(d: HookTableau, l: int, m: int) -> MultiPoly:
    """``Q_D^{l;m}`` for a two-row-column hook from ``Σ_i (-1)^i e_i Q^{n+l-i; m-1}``."""
    if d.k != 2:
        raise ValueError("the recurrence is stated for column length 2")
    lower, upper = d.column
    xs = _members(d)
    n = len(xs)
    es = [elementary_symmetric(xs, i) for i in range(n + 1)]

    @lru_cache(maxsize=None)
    def q(level: int, mm: int) -> MultiPoly:
        if mm == 0:
            return r_poly_closed_m0(xs, lower, upper, level)
        out = MultiPoly.zero(xs)
        for i in range(n + 1):
            term = es[i] * q(n + level - i, mm - 1)
            out = out + term if i % 2 == 0 else out - term
        return out

    return q(l, m)


# determinants


def det_cofactor(mat: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    size = len(mat)
    if size == 0:
        return MultiPoly.const(1)
    if size == 1:
        return mat[0][0]
    if size == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    out = None
    for c in range(size):
        if mat[0][c].is_zero():
            continue
        minor = [row[:c] + row[c + 1 :] for row in mat[1:]]
        term = mat[0][c] * det_cofactor(minor)
        if out is None:
            out = term if c % 2 == 0 else -term
        else:
            out = out + term if c % 2 == 0 else out - term
    if out is None:
        return MultiPoly.zero(mat[0][0].vars)
    return out


def det_bareiss(mat: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free elimination; every division is exact."""
    a = [list(row) for row in mat]
    size = len(a)
    if size == 0:
        return MultiPoly.const(1)
    vars_ = a[0][0].vars
    sgn = 1
    prev = MultiPoly.const(1, vars_)
    for k in range(size - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, size) if not a[r][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(vars_)
            a[k], a[swap] = a[swap], a[k]
            sgn = -sgn
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_divide(num, prev)
        prev = a[k][k]
    return a[-1][-1] if sgn == 1 else -a[-1][-1]


def determinant(mat: Sequence[Sequence[MultiPoly]], method: str = "auto") -> MultiPoly:
    if method == "auto":
        method = "cofactor" if len(mat) <= 3 else "bareiss"
    if method == "cofactor":
        return det_cofactor(mat)
    if method == "bareiss":
        return det_bareiss(mat)
    raise ValueError(f"unknown determinant method {method!r}")


def r_matrix(d: HookTableau, alpha: Sequence[int], m: int, pairs: str = "consecutive") -> list[list[MultiPoly]]:
    """Rows indexed by column-entry pairs, columns by the exponents ``alpha``.

    ``pairs="consecutive"`` uses ``(s_r, s_{r+1})``; ``"anchored"`` uses
    ``(s_1, s_{r+1})``.
    """
    col = d.column
    if pairs == "consecutive":
        rows = list(zip(col, col[1:]))
    elif pairs == "anchored":
        rows = [(col[0], c) for c in col[1:]]
    else:
        raise ValueError(pairs)
    return [[r_poly(d, a, b, p, m) for p in alpha] for a, b in rows]


def q_poly_det(d: HookTableau, alpha: Sequence[int], m: int, method: str = "auto", pairs: str = "consecutive") -> MultiPoly:
    """``Q_D^{alpha;m}``: the ``(k-1) x (k-1)`` determinant of ``R`` integrals.

    Any negative entry of ``alpha`` gives 0; ``k = 1`` gives 1.
    """
    alpha = tuple(alpha)
    if len(alpha) != d.k - 1:
        raise ValueError(f"alpha has length {len(alpha)}, tableau needs {d.k - 1}")
    xs = _members(d)
    if any(a < 0 for a in alpha):
        return MultiPoly.zero(xs)
    if d.k == 1:
        return MultiPoly.const(1, xs)
    return _q_cached(d, alpha, m, method, pairs)


@lru_cache(maxsize=2048)
def _q_cached(d, alpha, m, method, pairs):
    return determinant(r_matrix(d, alpha, m, pairs), method).lift(_members(d))


def clear_caches() -> None:
    """Drop memoized ``R`` and ``Q`` polynomials (e.g. after lowering the term cap)."""
    power_product.cache_clear()
    _r_cached.cache_clear()
    _q_cached.cache_clear()


def q_degree(n: int, k: int, mu: Sequence[int], m: int) -> int:
    return (k - 1) * n * m + sum(mu) + k - 1


@dataclass(frozen=True)
class QuasiBasisElement:
    tableau: HookTableau
    mu: StrictPartition
    m: int
    poly: MultiPoly

    @property
    def degree(self) -> int:
        return q_degree(self.tableau.n, self.tableau.k, self.mu.parts, self.m)

    def to_json(self) -> dict:
        return {
            "shape": [self.tableau.n, self.tableau.k],
            "tableau": self.tableau.to_json(),
            "mu": list(self.mu.parts),
            "m": self.m,
            "degree": self.degree,
            "poly": self.poly.to_json(),
        }


def component_partitions(n: int, k: int) -> list[StrictPartition]:
    """``P(n-2; k-1)`` ordered by size then reverse-lex."""
    return strict_partitions_bounded(n - 2, k - 1)


def basis_for_component(t: HookTableau, m: int) -> list[QuasiBasisElement]:
    return [
        QuasiBasisElement(t, mu, m, q_poly_det(t, mu.parts, m))
        for mu in component_partitions(t.n, t.k)
    ]


def is_quasiinvariant(p: MultiPoly, n: int, m: int) -> bool:
    xs = tuple(range(1, n + 1))
    if not set(p.support_vars()) <= set(xs):
        raise ValueError("polynomial uses variables outside 1..n")
    p = p.lift(xs)
    for i in xs:
        for j in xs:
            if j <= i:
                continue
            diff = transposition_difference(p, i, j)
            if diff.is_zero():
                continue
            lin = MultiPoly.var(i, xs) - MultiPoly.var(j, xs)
            try:
                exact_divide(diff, lin ** (2 * m + 1))
            except NotDivisible:
                return False
    return True


def in_isotypic_component(p: MultiPoly, t: HookTableau, m: int) -> bool:
    """Fixed by ``γ_T`` and divisible by ``V_T^{2m+1}``."""
    if p.is_zero():
        return True
    xs = _members(t)
    p = p.lift(xs)
    if act(gamma(t), p) != p:
        return False
    try:
        exact_divide(p, vandermonde(t.column).lift(xs) ** (2 * m + 1))
    except NotDivisible:
        return False
    return True


def permutation_sign_of(alpha: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sort that puts ``alpha`` into strictly decreasing order (0 if repeated)."""
    alpha = tuple(alpha)
    if len(set(alpha)) < len(alpha):
        return 0, tuple(sorted(alpha, reverse=True))
    target = tuple(sorted(alpha, reverse=True))
    return sign(alpha, target), target


def minimal_degree(n: int, k: int, m: int) -> int:
    return (k - 1) * n * m + triangular(k)


# independence modulo symmetric functions


def monomials_of_degree(xs: Sequence[int], d: int) -> list[MultiPoly]:
    xs = tuple(xs)
    out = []
    for combo in combinations_with_replacement(range(len(xs)), d):
        e = [0] * len(xs)
        for i in combo:
            e[i] += 1
        out.append(MultiPoly.monomial(xs, e))
    return out


def _bounded_partitions(total: int, max_part: int, cap: int | None = None):
    cap = max_part if cap is None else cap
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _bounded_partitions(total - first, max_part, first):
            yield (first,) + rest


def ideal_slice_rank_check(t: HookTableau, m: int, degree_cap: int | None = None, mode: str = "module",
                           prime: int = DEFAULT_PRIME) -> dict:
    """Check that the basis is free over ``Λ_n`` and independent modulo ``Λ_n^+``.

    ``mode="module"`` (default) works inside ``M = γ_T(QI_m)``.  For each
    degree ``d`` from ``deg V_T^{2m+1}`` to ``degree_cap`` it

    * ranks the products ``e_ν Q^μ`` of degree ``d`` exactly over ``Q``
      (``ν`` a partition with parts ``<= n``), with the ``|ν| > 0`` products
      entered first, so the increase in rank is the number of basis
      elements independent modulo ``(Λ^+ M)_d``;
    * bounds ``dim M_d`` from above by ``dim W_d - rank_p((n!/f) γ_T - 1)|W_d``
      where ``W_d = V_T^{2m+1} K_{d - deg V}`` and ``M_d`` is the fixed space
      of ``γ_T`` on ``W_d``.  A rank over ``F_p`` never exceeds the rank over
      ``Q``, so this bound is sound.

    A degree passes when the products are independent, their count reaches
    the upper bound (so they span ``M_d``), and the number of basis elements
    of degree ``d`` equals the coefficient of :func:`hilbert_gamma`.

    ``mode="ring_ideal"`` is the literal reading: independence modulo the
    degree-``d`` slice of the ideal ``<e_1, ..., e_n>`` of the whole ring,
    for degrees that carry basis elements.  The quotient of the ring by that
    ideal vanishes above degree ``n(n-1)/2``, so this reading can only pass
    when every basis degree is at most ``n(n-1)/2`` (in practice ``m = 0``).
    """
    if not t.is_standard():
        raise ValueError("ideal_slice_rank_check needs a standard tableau")
    n, k = t.n, t.k
    basis = basis_for_component(t, m)
    top = max(b.degree for b in basis)
    cap = top if degree_cap is None else degree_cap
    hil = hilbert_gamma(n, k, m)
    if mode == "module":
        rows = _module_degrees(t, m, basis, cap, hil, prime)
    elif mode == "ring_ideal":
        rows = _ring_ideal_degrees(t, basis, cap, hil)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return {
        "tableau": t.to_json(),
        "n": n,
        "k": k,
        "m": m,
        "mode": mode,
        "degree_cap": cap,
        "degrees": rows,
        "pass": all(r["pass"] for r in rows),
    }


def _module_degrees(t, m, basis, cap, hil, prime):
    n, k = t.n, t.k
    xs = tuple(range(1, n + 1))
    vpow = vandermonde(t.column).lift(xs) ** (2 * m + 1)
    dv = (2 * m + 1) * triangular(k)
    sym = column_symmetrizer(t) * row_symmetrizer(t)
    c = factorial(n) // hook_dimension(n, k)
    es = {}
    out = []
    for d in range(dv, cap + 1):
        products, own = [], []
        for b in basis:
            if b.degree == d:
                own.append(b.poly.lift(xs))
            elif b.degree < d:
                for nu in _bounded_partitions(d - b.degree, n):
                    if nu not in es:
                        es[nu] = e_of_partition(xs, nu)
                    products.append(es[nu] * b.poly.lift(xs))
        ech = Echelon()
        for p in products:
            ech.add(p.packed())
        r_plus = ech.rank
        for p in own:
            ech.add(p.packed())
        total = len(products) + len(own)
        images = []
        ambient = monomials_of_degree(xs, d - dv)
        for mono in ambient:
            w = vpow * mono
            images.append((act(sym, w) - w.scale(c)).lift(xs).packed())
        upper = len(ambient) - rank_mod_p(images, prime)
        expected = hil.coefficient(d)
        independent = ech.rank - r_plus
        out.append({
            "degree": d,
            "basis_elements": len(own),
            "expected": expected,
            "products": total,
            "product_rank": ech.rank,
            "upper_bound": upper,
            "independent_mod_ideal": independent,
            "pass": ech.rank == total == upper and independent == len(own) == expected,
        })
    return out


def _ring_ideal_degrees(t, basis, cap, hil):
    n = t.n
    xs = tuple(range(1, n + 1))
    es = [elementary_symmetric(xs, i) for i in range(n + 1)]
    out = []
    for d in sorted({b.degree for b in basis if b.degree <= cap}):
        ech = Echelon()
        for i in range(1, min(n, d) + 1):
            for mono in monomials_of_degree(xs, d - i):
                ech.add((es[i] * mono).packed())
        r_slice = ech.rank
        own = [b.poly.lift(xs) for b in basis if b.degree == d]
        for p in own:
            ech.add(p.packed())
        independent = ech.rank - r_slice
        expected = hil.coefficient(d)
        out.append({
            "degree": d,
            "basis_elements": len(own),
            "expected": expected,
            "slice_rank": r_slice,
            "independent_mod_ideal": independent,
            "pass": independent == len(own) == expected,
        })
    return out


__all__ = [
    "QuasiBasisElement",
    "basis_for_component",
    "clear_caches",
    "component_partitions",
    "det_bareiss",
    "det_cofactor",
    "determinant",
    "ideal_slice_rank_check",
    "in_isotypic_component",
    "is_quasiinvariant",
    "minimal_degree",
    "monomials_of_degree",
    "permutation_sign_of",
    "power_product",
    "q_degree",
    "q_poly_det",
    "r_matrix",
    "r_poly",
    "r_poly_closed_m0",
    "r_poly_via_recurrence",
]
