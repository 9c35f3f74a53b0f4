from math import comb, factorial

import pytest

from quasihook.combinatorics import HookShape, count_standard_tableaux
from quasihook.hilbert import (
    HilbertPoly,
    InexactDivision,
    coinvariant_poly,
    cyclotomic_quotient,
    hilbert_component,
    hilbert_from_counting,
    hilbert_full,
    hilbert_gamma,
    hook_summand_matches,
    q_integer,
    verify_p_recurrences,
)


def test_hilbert_poly_normalization_and_json():
    h = HilbertPoly(2, [0, 1, 2, 0])
    assert h.offset == 3 and h.coeffs == (1, 2)
    assert HilbertPoly(5, [0, 0]).to_json() == {"offset": 0, "coeffs": []}
    assert HilbertPoly.from_json(h.to_json()) == h
    assert h.to_text() == "t^3 + 2·t^4"
    assert HilbertPoly.from_degrees([4, 3, 4]) == h
    assert (h + h).coeffs == (2, 4)
    assert (q_integer(2) * q_integer(2)).coeffs == (1, 2, 1)


def test_cyclotomic_quotient():
    assert cyclotomic_quotient([3, 2], [1, 2]) == [1, 1, 1]
    assert cyclotomic_quotient([4], [4]) == [1]
    with pytest.raises(InexactDivision):
        cyclotomic_quotient([2], [3])


def test_hilbert_gamma_examples():
    assert hilbert_gamma(4, 3, 1).to_json() == {"offset": 11, "coeffs": [1, 1, 1]}
    assert hilbert_gamma(4, 3, 0).to_json() == {"offset": 3, "coeffs": [1, 1, 1]}
    for n in range(2, 8):
        for m in range(3):
            assert hilbert_gamma(n, 2, m) == HilbertPoly(n * m + 1, [1] * (n - 1))
    assert hilbert_gamma(5, 1, 2).to_json() == {"offset": 0, "coeffs": [1]}
    with pytest.raises(ValueError):
        hilbert_gamma(3, 4, 0)


def test_hilbert_gamma_matches_counting_and_is_palindromic():
    for n in range(1, 9):
        for k in range(1, min(n, 4) + 1):
            for m in range(4):
                h = hilbert_gamma(n, k, m)
                assert h == hilbert_from_counting(n, k, m)
                assert h.at_one() == comb(n - 1, k - 1)
                assert h.offset == (k - 1) * n * m + k * (k - 1) // 2
                assert h.is_palindromic()


def test_hilbert_full():
    for n in range(1, 8):
        assert hilbert_full(n, 0) == coinvariant_poly(n)
        for m in range(3):
            assert hilbert_full(n, m).at_one() == factorial(n)
    assert coinvariant_poly(3).coeffs == (1, 2, 2, 1)


def test_hook_summands_agree_with_hilbert_gamma():
    for n in range(1, 8):
        for k in range(1, n + 1):
            for m in range(3):
                assert hook_summand_matches(n, k, m)
                assert hilbert_component(HookShape(n, k).partition(), m) == hilbert_gamma(n, k, m)
    assert count_standard_tableaux(HookShape(5, 3).partition()) == 6


def test_prop_3_4_recurrences():
    report = verify_p_recurrences(8, 4)
    assert report["pass"]
    cell = next(c for c in report["cells"] if (c["n"], c["k"], c["identity"]) == (5, 3, "1"))
    assert cell["checked"] > 0 and cell["failures"] == []
