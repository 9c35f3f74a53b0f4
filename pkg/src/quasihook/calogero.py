"""The Calogero-Moser operator ``L_m`` and its action on the determinantal family."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .combinatorics import HookShape, HookTableau, standard_hook_tableaux
from .polyring import (
    MultiPoly,
    NotDivisible,
    TPoly,
    e_of_partition,
    exact_divide,
    integrate_between,
    linear_combination,
)
from .quasi import basis_for_component, determinant, power_product, q_poly_det, r_poly


class NotInDomain(ArithmeticError):
    """``L_m p`` is not a polynomial: some ``(∂_i - ∂_j) p`` is not divisible by ``x_i - x_j``."""

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"(d/dx{pair[0]} - d/dx{pair[1]}) p is not divisible by x{pair[0]} - x{pair[1]}")


@dataclass(frozen=True)
class LmOperator:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return apply_lm(self, p)


def laplacian(p: MultiPoly, xs: Sequence[int]) -> MultiPoly:
    return linear_combination((1, p.diff(i).diff(i)) for i in xs).lift(p.vars)


def apply_lm(op: LmOperator, p: MultiPoly) -> MultiPoly:
    """``Σ ∂_i² p - 2m Σ_{i<j} (∂_i p - ∂_j p) / (x_i - x_j)``, exactly."""
    xs = tuple(range(1, op.n + 1))
    if not set(p.support_vars()) <= set(xs):
        raise ValueError("polynomial uses variables outside 1..n")
    p = p.lift(xs)
    grads = {i: p.diff(i) for i in xs}
    parts = [(1, grads[i].diff(i)) for i in xs]
    if op.m:
        for a in xs:
            for b in xs:
                if b <= a:
                    continue
                num = grads[a] - grads[b]
                if num.is_zero():
                    continue
                try:
                    quo = exact_divide(num, MultiPoly.var(a, xs) - MultiPoly.var(b, xs))
                except NotDivisible:
                    raise NotInDomain((a, b)) from None
                parts.append((-2 * op.m, quo))
    return linear_combination(parts).lift(xs)


def grad_pairing(f: MultiPoly, g: MultiPoly, xs: Sequence[int]) -> MultiPoly:
    """``Σ_i (∂_i f)(∂_i g)``."""
    return linear_combination((1, f.diff(i) * g.diff(i)) for i in xs)


def _q(t: HookTableau, alpha: Sequence[int], m: int) -> MultiPoly:
    return q_poly_det(t, tuple(alpha), m)


def _replace(alpha: Sequence[int], **slots) -> tuple[int, ...]:
    a = list(alpha)
    for i, v in slots.items():
        a[int(i[1:])] = v
    return tuple(a)


def pair_contribution(a: int, b: int):
    """Terms of ``Σ_x ∇R_1^a · ∇R_2^b - ∇R_1^b · ∇R_2^a`` divided by ``m``.

    Returns ``(coeff, (u, v))`` meaning ``coeff * R3^{u,v}`` where ``R3`` is the
    2x2 determinant with exponents ``u, v`` in the two slots.
    """
    if a == b or a < 0 or b < 0:
        return []
    if a < b:
        return [(c, (v, u)) for c, (u, v) in pair_contribution(b, a)]
    out = []
    if b >= 1:
        out.append((-b, (a - 1, b - 1)))
    total = a + b - 2
    for s in range(a - 2, -1, -1):
        tt = total - s
        if tt < 0 or tt >= s:
            continue
        out.append((s - tt, (s, tt)))
    return out


def lm_on_basis_formula(t: HookTableau, alpha: Sequence[int], m: int, reading: str = "derived") -> MultiPoly:
    """Right-hand side of the closed-form ``L_m`` action on ``Q_T^{alpha;m}``.

    Sums run over the ``k-1`` entries of ``alpha``.  ``reading="derived"``
    (the default) builds each pair ``(i, j)`` from the gradient-pairing
    identity of the supporting lemma, part (3): with ``a > b`` the larger
    and smaller exponents, the cross term is ``-b Q^{..a-1..b-1..}`` plus
    ``Σ_{a-2 >= s > t >= 0, s+t = a+b-2} (s-t) Q^{..s..t..}``, placed in the
    slots of ``a`` and ``b``.  ``reading="printed"`` follows the published
    theorem verbatim (coefficient ``-alpha_i``, inner bound ``alpha_i - 2``),
    which disagrees with direct computation whenever ``alpha_i != alpha_j``
    and ``m > 0``; it is kept for comparison.  Pairs with a negative entry
    contribute nothing, matching ``Q^alpha = 0``.
    """
    alpha = tuple(alpha)
    k1 = len(alpha)
    if k1 != t.k - 1:
        raise ValueError("alpha must have length k-1")
    xs = tuple(sorted(t.members()))
    parts = []
    for i, ai in enumerate(alpha):
        c = ai * (ai - 1)
        if c:
            parts.append((c, _q(t, _replace(alpha, **{f"i{i}": ai - 2}), m)))
    if m:
        for i in range(k1):
            for j in range(i + 1, k1):
                ai, aj = alpha[i], alpha[j]
                if reading == "printed":
                    terms = [(-ai, (ai - 1, aj - 1))]
                    total = ai + aj - 2
                    for s in range(ai - 2, -1, -1):
                        tt = total - s
                        if 0 <= tt < s:
                            terms.append((s - tt, (s, tt)))
                elif reading == "derived":
                    terms = pair_contribution(ai, aj)
                else:
                    raise ValueError(reading)
                for c, (u, v) in terms:
                    if c:
                        parts.append((2 * m * c, _q(t, _replace(alpha, **{f"i{i}": u, f"i{j}": v}), m)))
    if not parts:
        return MultiPoly.zero(xs)
    return linear_combination(parts).lift(xs)


def r3_poly(t: HookTableau, s: int, u: int, m: int, entries: Sequence[int] | None = None) -> MultiPoly:
    """``| R_{a,b}^s  R_{a,b}^u ; R_{b,c}^s  R_{b,c}^u |`` for column entries ``a, b, c``."""
    a, b, c = entries if entries is not None else t.column[:3]
    if s < 0 or u < 0:
        return MultiPoly.zero(sorted(t.members()))
    mat = [[r_poly(t, a, b, s, m), r_poly(t, a, b, u, m)], [r_poly(t, b, c, s, m), r_poly(t, b, c, u, m)]]
    return determinant(mat)


# supporting identities


def lemma_product_rule(op: LmOperator, f: MultiPoly, g: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of ``L(fg) = L(f) g + f L(g) + 2 Σ ∂_i f ∂_i g``."""
    xs = tuple(range(1, op.n + 1))
    lhs = apply_lm(op, f * g)
    rhs = apply_lm(op, f) * g + f * apply_lm(op, g) + grad_pairing(f, g, xs).scale(2)
    return lhs, rhs


def lemma_integration(members: Sequence[int], lower: int, upper: int, k: int, m: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of ``k ∫ t^{k-1} ∏(t-x_s)^m = -m Σ_r ∫ t^k (t-x_r)^{m-1} ∏_{s≠r} (t-x_s)^m``."""
    xs = tuple(sorted(members))
    if k == 0:
        lhs = MultiPoly.zero(xs)
    else:
        lhs = integrate_between(power_product(xs, m).shift(k - 1).coeffs, lower, upper).lift(xs).scale(k)
    if m == 0:
        return lhs, MultiPoly.zero(xs)
    rhs_parts = []
    for r in xs:
        integrand = _reduced_product(xs, r, m).shift(k)
        rhs_parts.append((-m, integrate_between(integrand.coeffs, lower, upper)))
    return lhs, linear_combination(rhs_parts).lift(xs)


def _reduced_product(xs: Sequence[int], r: int, m: int) -> TPoly:
    """``(t - x_r)^{m-1} ∏_{s≠r} (t - x_s)^m``."""
    one = MultiPoly.const(1, xs)
    out = TPoly([one])
    for s in xs:
        lin = TPoly([-MultiPoly.var(s, xs), one])
        for _ in range(m - 1 if s == r else m):
            out = out * lin
    return out


def lemma_r3(t: HookTableau, k: int, l: int, m: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the gradient-pairing identity for ``R_{1,2}`` and ``R_{1,3}``."""
    if not k > l >= 0:
        raise ValueError("need k > l >= 0")
    a, b, c = t.column[:3]
    xs = tuple(sorted(t.members()))
    r12k, r12l = r_poly(t, a, b, k, m), r_poly(t, a, b, l, m)
    r13k, r13l = r_poly(t, a, c, k, m), r_poly(t, a, c, l, m)
    lhs = grad_pairing(r12k, r13l, xs) - grad_pairing(r13k, r12l, xs)
    parts = []
    if l >= 1:
        parts.append((-l * m, r3_poly(t, k - 1, l - 1, m)))
    for s in range(k - 2, -1, -1):
        tt = k + l - 2 - s
        if 0 <= tt < s:
            parts.append(((s - tt) * m, r3_poly(t, s, tt, m)))
    rhs = linear_combination(parts).lift(xs) if parts else MultiPoly.zero(xs)
    return lhs.lift(xs), rhs


# reports


def first_diff(lhs: MultiPoly, rhs: MultiPoly) -> dict | None:
    """The graded-lex largest monomial where the two sides differ, or ``None``."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    _, exps = diff.leading_term()
    vars_ = diff.vars
    mono = MultiPoly.monomial(vars_, exps).to_text()
    lift_l, lift_r = lhs.lift(vars_), rhs.lift(vars_)
    return {
        "monomial": mono,
        "lhs": _qtext(lift_l.coefficient(exps)),
        "rhs": _qtext(lift_r.coefficient(exps)),
    }


def _qtext(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def identity_report(identity: str, params: dict, lhs: MultiPoly, rhs: MultiPoly) -> dict:
    fd = first_diff(lhs, rhs)
    return {"identity": identity, "params": params, "pass": fd is None, "first_diff": fd}


def random_domain_poly(rng: random.Random, n: int, m: int, max_degree: int = 4) -> MultiPoly:
    """A random polynomial on which ``L_m`` is polynomial.

    For ``m = 0`` any polynomial will do.  For ``m >= 1`` the result is a
    random symmetric polynomial plus a symmetric multiple of a random
    quasiinvariant basis element; quasiinvariants with ``m >= 1`` lie in the
    polynomial domain of ``L_m``.
    """
    xs = tuple(range(1, n + 1))

    def coeff():
        return rng.choice([c for c in range(-3, 4) if c])

    if m == 0:
        terms = {}
        for _ in range(rng.randint(1, 6)):
            e = [0] * n
            for _ in range(rng.randint(0, max_degree)):
                e[rng.randrange(n)] += 1
            terms[tuple(e)] = coeff()
        return MultiPoly(xs, terms)

    def sym():
        parts = []
        for _ in range(rng.randint(1, 3)):
            nu = [rng.randint(1, n) for _ in range(rng.randint(0, 2))]
            parts.append((coeff(), e_of_partition(xs, nu)))
        return linear_combination(parts).lift(xs)

    k = rng.randint(2, n)
    t = rng.choice(standard_hook_tableaux(HookShape(n, k)))
    b = rng.choice(basis_for_component(t, m))
    return (sym() + sym() * b.poly.lift(xs)).lift(xs)


def product_rule_reports(n: int, m: int, pairs: int = 50, seed: int = 0) -> list[dict]:
    """Part (1) on ``pairs`` seeded random ``(f, g)`` in ``n`` variables."""
    op = LmOperator(n, m)
    rng = random.Random(seed)
    out = []
    for trial in range(pairs):
        f = random_domain_poly(rng, n, m)
        g = random_domain_poly(rng, n, m)
        lhs, rhs = lemma_product_rule(op, f, g)
        out.append(identity_report("lemma4.1_product_rule", {"n": n, "m": m, "seed": seed, "trial": trial}, lhs, rhs))
    return out


def integration_reports(n: int, m: int, k: int) -> list[dict]:
    """Part (2) for every pair of bounds ``x_i, x_j`` with ``i < j <= n``."""
    xs = tuple(range(1, n + 1))
    out = []
    for i in xs:
        for j in xs:
            if i < j:
                lhs, rhs = lemma_integration(xs, i, j, k, m)
                out.append(identity_report("lemma4.2_integration", {"n": n, "m": m, "k": k, "i": i, "j": j}, lhs, rhs))
    return out


def r3_report(n: int, m: int, k: int, l: int) -> dict:
    """Part (3) on ``T(1,2,3)`` of shape ``η(n,3)``."""
    t = HookTableau.standard(n, (1, 2, 3))
    lhs, rhs = lemma_r3(t, k, l, m)
    return identity_report("lemma4.3_r3", {"n": n, "m": m, "k": k, "l": l}, lhs, rhs)


def r3_special_case_report(n: int, m: int, k: int) -> dict:
    """The printed case ``k - l = 1``: the right side is ``-m(k-1) R3^{k-1,k-2}``."""
    t = HookTableau.standard(n, (1, 2, 3))
    lhs, _ = lemma_r3(t, k, k - 1, m)
    rhs = r3_poly(t, k - 1, k - 2, m).scale(-m * (k - 1))
    return identity_report("lemma4.3_r3_adjacent", {"n": n, "m": m, "k": k, "l": k - 1}, lhs, rhs.lift(lhs.vars))


def verify_lemma_parts(n: int, m: int, k_deg: int, l_deg: int, pairs: int = 50, seed: int = 0) -> list[dict]:
    """Check parts (1)-(3) of the supporting lemma; one report per identity instance.

    (1) uses ``pairs`` seeded random ``(f, g)`` in ``n`` variables;
    (2) uses ``k = k_deg`` on every pair of bounds;
    (3) uses ``(k, l) = (k_deg, l_deg)`` on ``T(1,2,3)`` and needs ``n >= 3``.
    Part (2) fails at ``m = 0`` for ``k >= 1``: the right side is an empty sum.
    """
    if not k_deg > l_deg >= 0:
        raise ValueError("need k_deg > l_deg >= 0")
    reports = product_rule_reports(n, m, pairs, seed) + integration_reports(n, m, k_deg)
    if n >= 3:
        reports.append(r3_report(n, m, k_deg, l_deg))
    return reports
