from fractions import Fraction
from itertools import product as cartesian
from math import comb

import pytest
from gmpy2 import mpq

from quasihook.combinatorics import HookShape, HookTableau, standard_hook_tableaux
from quasihook.hilbert import HilbertPoly, hilbert_gamma
from quasihook.polyring import MultiPoly, elementary_symmetric, vandermonde
from quasihook.quasi import (
    basis_for_component,
    det_bareiss,
    det_cofactor,
    ideal_slice_rank_check,
    in_isotypic_component,
    is_quasiinvariant,
    minimal_degree,
    q_degree,
    q_poly_det,
    r_poly,
    r_poly_closed_m0,
    r_poly_via_recurrence,
)


def x(i, xs):
    return MultiPoly.var(i, xs)


def oracle_r(members, lower, upper, p, m, point):
    """Evaluate ``R`` at a rational point via multinomial expansion of ``∏(t - x_s)^m``.

    The integrand is expanded with :class:`fractions.Fraction` by choosing, for
    every factor, either ``t`` or ``-x_s``; the resulting univariate polynomial
    is integrated by hand.
    """
    factors = [Fraction(-point[s]) for s in members for _ in range(m)]
    coeffs = {}
    for choice in cartesian((0, 1), repeat=len(factors)):
        power, value = p, Fraction(1)
        for pick, c in zip(choice, factors):
            if pick:
                power += 1
            else:
                value *= c
        coeffs[power] = coeffs.get(power, 0) + value
    a, b = Fraction(point[lower]), Fraction(point[upper])
    return sum(c * (b ** (e + 1) - a ** (e + 1)) / (e + 1) for e, c in coeffs.items())


POINTS = [{1: 2, 2: -1, 3: 3, 4: Fraction(1, 2)}, {1: Fraction(-3, 4), 2: 5, 3: 1, 4: -2}]


@pytest.mark.parametrize("n, m, p", [(3, 1, 0), (3, 2, 1), (4, 1, 2), (2, 2, 0)])
def test_r_poly_matches_multinomial_oracle(n, m, p):
    t = HookTableau.standard(n, (1, 2))
    members = tuple(range(1, n + 1))
    r = r_poly(t, 1, 2, p, m)
    assert r.is_homogeneous() and r.total_degree() == n * m + p + 1
    for pt in POINTS:
        exact = {i: mpq(Fraction(pt[i]).numerator, Fraction(pt[i]).denominator) for i in members}
        assert r.evaluate(exact) == oracle_r(members, 1, 2, p, m, pt)


def test_r_poly_orientation_and_domain():
    t = HookTableau.standard(3, (1, 2))
    assert r_poly(t, 2, 1, 1, 1) == -r_poly(t, 1, 2, 1, 1)
    with pytest.raises(ValueError):
        r_poly(t, 1, 1, 0, 1)
    with pytest.raises(ValueError):
        r_poly(t, 1, 7, 0, 1)


def test_closed_form_at_m0():
    for n in range(2, 7):
        t = HookTableau.standard(n, (1, 2))
        xs = tuple(range(1, n + 1))
        for l in range(n - 1):
            expected = (x(2, xs) ** (l + 1) - x(1, xs) ** (l + 1)).scale(mpq(1, l + 1))
            assert r_poly(t, 1, 2, l, 0) == expected == r_poly_closed_m0(xs, 1, 2, l)


def test_recurrence_matches_direct_integration():
    for n in range(2, 5):
        t = HookTableau.standard(n, (1, 2))
        for l in range(n - 1):
            for m in range(3):
                assert r_poly_via_recurrence(t, l, m) == r_poly(t, 1, 2, l, m)
    two = r_poly(HookTableau.standard(2, (1, 2)), 1, 2, 0, 1)
    assert two.total_degree() == 3
    with pytest.raises(ValueError):
        r_poly_via_recurrence(HookTableau.standard(3, (1, 2, 3)), 0, 1)


def test_worked_determinant_is_half_vandermonde():
    t = HookTableau.standard(3, (1, 2, 3))
    assert q_poly_det(t, (1, 0), 0) == vandermonde((1, 2, 3)).scale(mpq(1, 2))


def test_determinant_conventions():
    t = HookTableau.standard(4, (1, 2, 3))
    mu = q_poly_det(t, (2, 0), 1)
    assert q_poly_det(t, (0, 2), 1) == -mu
    assert q_poly_det(t, (1, 1), 1).is_zero()
    assert q_poly_det(t, (-1, 2), 1).is_zero()
    assert q_poly_det(HookTableau.standard(3, (1,)), (), 2) == 1
    assert q_poly_det(HookTableau.standard(4, (1, 2)), (1,), 1) == r_poly(HookTableau.standard(4, (1, 2)), 1, 2, 1, 1)
    with pytest.raises(ValueError):
        q_poly_det(t, (1,), 1)
    xs = (1, 2, 3)
    mat = [[x(1, xs), x(2, xs), 1], [x(3, xs), 2, x(1, xs)], [1, x(2, xs), x(3, xs)]]
    mat = [[MultiPoly.const(e, xs) if not isinstance(e, MultiPoly) else e for e in row] for row in mat]
    assert det_bareiss(mat) == det_cofactor(mat)


def test_basis_sizes_and_degrees():
    for n in range(2, 6):
        for k in range(1, n + 1):
            t = standard_hook_tableaux(HookShape(n, k))[0]
            for m in range(2):
                basis = basis_for_component(t, m)
                assert len(basis) == comb(n - 1, k - 1)
                assert HilbertPoly.from_degrees(b.degree for b in basis) == hilbert_gamma(n, k, m)
                assert min(b.degree for b in basis) == minimal_degree(n, k, m)
    assert [b.mu.parts for b in basis_for_component(HookTableau.standard(3, (1, 2, 3)), 2)] == [(1, 0)]
    assert q_degree(4, 3, (2, 0), 1) == 2 * 4 + 2 + 2


def test_quasiinvariance_predicate():
    xs = (1, 2)
    assert not is_quasiinvariant(x(1, xs), 2, 1)
    assert is_quasiinvariant(x(1, xs), 2, 0)
    assert is_quasiinvariant(elementary_symmetric((1, 2, 3), 2) ** 2, 3, 2)
    assert is_quasiinvariant(vandermonde(xs) ** 3, 2, 1)


@pytest.mark.parametrize("n, k, m", [(3, 2, 1), (4, 3, 1), (4, 2, 2), (5, 3, 0)])
def test_basis_elements_are_quasiinvariant_and_isotypic(n, k, m):
    for t in standard_hook_tableaux(HookShape(n, k)):
        for b in basis_for_component(t, m):
            assert is_quasiinvariant(b.poly, n, m)
            assert in_isotypic_component(b.poly, t, m)


def test_isotypic_membership_examples():
    t = HookTableau.standard(3, (1, 2))
    assert in_isotypic_component(MultiPoly.zero((1, 2, 3)), t, 1)
    assert not in_isotypic_component(elementary_symmetric((1, 2, 3), 1), t, 0)


def test_rank_check_module_mode_examples():
    for n, k, m in [(4, 3, 0), (3, 2, 1), (3, 3, 0), (4, 2, 1)]:
        report = ideal_slice_rank_check(HookTableau.standard(n, tuple(range(1, k + 1))), m)
        assert report["pass"], report
        assert sum(r["basis_elements"] for r in report["degrees"]) == comb(n - 1, k - 1)


def test_rank_check_literal_reading_only_holds_at_m0():
    """The literal ``mod <e_1..e_n>`` slice of the whole ring swallows everything above n(n-1)/2."""
    t43 = HookTableau.standard(4, (1, 2, 3))
    report = ideal_slice_rank_check(t43, 0, mode="ring_ideal")
    assert report["pass"]
    assert [r["degree"] for r in report["degrees"]] == [3, 4, 5]
    bad = ideal_slice_rank_check(HookTableau.standard(3, (1, 2)), 1, mode="ring_ideal")
    assert not bad["pass"]
    assert all(r["independent_mod_ideal"] == 0 for r in bad["degrees"])


def test_rank_check_rejects_nonstandard_and_bad_mode():
    with pytest.raises(ValueError):
        ideal_slice_rank_check(HookTableau((2, 1), (2, 3)), 0)
    with pytest.raises(ValueError):
        ideal_slice_rank_check(HookTableau.standard(3, (1, 2)), 0, mode="nope")

