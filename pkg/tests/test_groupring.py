from math import factorial

from gmpy2 import mpq

from quasihook.combinatorics import HookShape, HookTableau, standard_hook_tableaux
from quasihook.groupring import (
    GroupRingElement,
    act,
    column_symmetrizer,
    gamma,
    gamma_hook_factored,
    product,
    row_symmetrizer,
    sign,
    subgroup_sum,
    telescoping_factorization,
)
from quasihook.polyring import MultiPoly, vandermonde


def test_sign():
    assert sign((1, 2, 3), (1, 2, 3)) == 1
    assert sign((2, 1, 3), (1, 2, 3)) == -1
    assert sign((2, 3, 1), (1, 2, 3)) == 1


def test_composition_order():
    s = GroupRingElement.transposition((1, 2, 3), 1, 2)
    t = GroupRingElement.transposition((1, 2, 3), 2, 3)
    st = s * t  # first t then s: 1->1->2, 2->3->3, 3->2->1
    assert st.permutations() == [{1: 2, 2: 3, 3: 1}]


def test_action_is_left_action():
    xs = (1, 2, 3)
    p = MultiPoly.var(1, xs) ** 2 * MultiPoly.var(2, xs)
    s = GroupRingElement.transposition(xs, 1, 2)
    t = GroupRingElement.transposition(xs, 2, 3)
    assert act(s * t, p) == act(s, act(t, p))


def test_subgroup_sums():
    xs = (1, 2, 3)
    assert len(subgroup_sum(xs)) == 6
    signed = subgroup_sum(xs, signed=True)
    assert act(signed, MultiPoly.var(1, xs) ** 2 * MultiPoly.var(2, xs)) == vandermonde(xs)
    assert len(subgroup_sum(xs, (2,))) == 1


def test_telescoping_factorization_examples():
    for size in range(1, 5):
        xs = tuple(range(1, size + 1))
        for signed in (False, True):
            assert product(telescoping_factorization(xs, signed), xs) == subgroup_sum(xs, signed=signed)


def test_gamma_is_idempotent_and_factors():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for t in standard_hook_tableaux(HookShape(n, k)):
                g = gamma(t)
                assert g * g == g
                assert gamma_hook_factored(t) == g


def test_gamma_scaling_and_json():
    t = HookTableau.standard(3, (1, 2))
    g = gamma(t)
    assert len(g) == len(column_symmetrizer(t)) * len(row_symmetrizer(t)) == 4
    data = g.to_json()
    assert {d["coeff"] for d in data} <= {"1/3", "-1/3"}
    assert data[0] == {"perm": {"1": 1, "2": 2, "3": 3}, "coeff": "1/3"}
    assert sum(mpq(d["coeff"]) for d in data) == 0


def test_gamma_of_sign_and_trivial_components():
    n = 4
    triv = gamma(HookTableau.standard(n, (1,)))
    assert triv == subgroup_sum(range(1, n + 1)).scale(mpq(1, factorial(n)))
    alt = gamma(HookTableau.standard(n, tuple(range(1, n + 1))))
    assert alt == subgroup_sum(range(1, n + 1), signed=True).scale(mpq(1, factorial(n)))
