import random

import pytest
from gmpy2 import mpq

from quasihook.calogero import (
    LmOperator,
    NotInDomain,
    apply_lm,
    first_diff,
    integration_reports,
    lemma_integration,
    lm_on_basis_formula,
    product_rule_reports,
    r3_poly,
    r3_report,
    r3_special_case_report,
    random_domain_poly,
    verify_lemma_parts,
)
from quasihook.combinatorics import HookTableau
from quasihook.groupring import GroupRingElement, act
from quasihook.polyring import MultiPoly, elementary_symmetric, vandermonde
from quasihook.quasi import basis_for_component, is_quasiinvariant, q_poly_det, r_poly


def xs_(n):
    return tuple(range(1, n + 1))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_lm_on_symmetric_examples(n, m):
    xs = xs_(n)
    op = LmOperator(n, m)
    e1 = elementary_symmetric(xs, 1)
    p2 = sum((MultiPoly.var(i, xs) ** 2 for i in xs), MultiPoly.zero(xs))
    # The spec's "L_m(e_1^2) = 2n - 2m n(n-1)" is the value of L_m(p_2);
    # (∂_i - ∂_j) e_1^2 = 0, so L_m(e_1^2) = 2n for every m.
    assert apply_lm(op, e1 ** 2) == 2 * n
    assert apply_lm(op, p2) == 2 * n - 2 * m * n * (n - 1)
    assert apply_lm(op, elementary_symmetric(xs, 2)) == m * n * (n - 1)


def test_lm_m0_is_laplacian():
    xs = xs_(3)
    for k in range(1, 5):
        p = (MultiPoly.var(2, xs) ** (k + 1) - MultiPoly.var(1, xs) ** (k + 1)).scale(mpq(1, k + 1))
        expected = (MultiPoly.var(2, xs) ** (k - 1) - MultiPoly.var(1, xs) ** (k - 1)).scale(k)
        assert apply_lm(LmOperator(3, 0), p) == expected


def test_not_in_domain():
    with pytest.raises(NotInDomain) as info:
        apply_lm(LmOperator(2, 1), MultiPoly.var(1, (1, 2)))
    assert info.value.pair == (1, 2)
    with pytest.raises(ValueError):
        LmOperator(0, 1)


@pytest.mark.parametrize("n, m", [(3, 1), (4, 2), (5, 1)])
def test_theorem_4_1(n, m):
    t = HookTableau.standard(n, (1, 2))
    op = LmOperator(n, m)
    for l in range(n - 1):
        lhs = apply_lm(op, r_poly(t, 1, 2, l, m))
        if l < 2:
            assert lhs.is_zero()
        else:
            assert lhs == r_poly(t, 1, 2, l - 2, m).scale(l * (l - 1))


@pytest.mark.parametrize("alpha", [(2, 0), (0, 2), (3, 1), (2, 2), (1, 3), (3, -1)])
def test_theorem_lm_derived_reading(alpha):
    t = HookTableau.standard(4, (1, 2, 3))
    for m in (0, 1):
        direct = apply_lm(LmOperator(4, m), q_poly_det(t, alpha, m))
        assert first_diff(direct, lm_on_basis_formula(t, alpha, m)) is None


def test_theorem_lm_k2_reduces_to_theorem_4_1():
    t = HookTableau.standard(4, (1, 2))
    assert lm_on_basis_formula(t, (3,), 2) == q_poly_det(t, (1,), 2).scale(6)
    assert lm_on_basis_formula(t, (0,), 2).is_zero()


def test_printed_reading_disagrees_for_unequal_entries():
    t = HookTableau.standard(4, (1, 2, 3))
    direct = apply_lm(LmOperator(4, 1), q_poly_det(t, (2, 1), 1))
    fd = first_diff(direct, lm_on_basis_formula(t, (2, 1), 1, reading="printed"))
    assert fd == {"monomial": "x1^7·x2^4", "lhs": "1/90", "rhs": "1/60"}
    # at m = 0 the disputed term has coefficient 2m = 0, so both readings agree
    assert first_diff(apply_lm(LmOperator(4, 0), q_poly_det(t, (2, 1), 0)),
                      lm_on_basis_formula(t, (2, 1), 0, reading="printed")) is None


def test_preservation_and_degree_drop():
    t = HookTableau.standard(4, (1, 2, 3))
    for b in basis_for_component(t, 1):
        image = apply_lm(LmOperator(4, 1), b.poly)
        assert is_quasiinvariant(image, 4, 1)
        assert image.is_zero() or (image.is_homogeneous() and image.total_degree() == b.degree - 2)


def test_lm_commutes_with_permutations():
    rng = random.Random(3)
    xs = xs_(3)
    op = LmOperator(3, 1)
    sigma = GroupRingElement.transposition(xs, 1, 3)
    for _ in range(5):
        p = random_domain_poly(rng, 3, 1)
        assert apply_lm(op, act(sigma, p)) == act(sigma, apply_lm(op, p))


def test_r3_poly_examples():
    t = HookTableau.standard(3, (1, 2, 3))
    assert r3_poly(t, 1, 0, 0) == vandermonde(xs_(3)).scale(mpq(1, 2))
    assert r3_poly(t, 2, 2, 1).is_zero()
    assert r3_poly(t, 2, 0, 1) == -r3_poly(t, 0, 2, 1)


def test_lemma_parts_pass_for_m_at_least_one():
    for m in (1, 2):
        assert all(r["pass"] for r in product_rule_reports(3, m, pairs=10, seed=1))
        for k in range(5):
            assert all(r["pass"] for r in integration_reports(4, m, k))
        for gap in (1, 2, 3):
            assert r3_report(4, m, 3, 3 - gap)["pass"]
        assert r3_special_case_report(4, m, 3)["pass"]
    assert all(r["pass"] for r in verify_lemma_parts(3, 1, 2, 0, pairs=5))


def test_lemma_integration_fails_at_m0():
    lhs, rhs = lemma_integration(xs_(3), 1, 2, 2, 0)
    assert rhs.is_zero() and not lhs.is_zero()
    assert not all(r["pass"] for r in integration_reports(3, 0, 2))
