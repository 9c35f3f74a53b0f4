"""Hilbert polynomials of the hook isotypic components and of the full quotient.

A :class:`HilbertPoly` is a finite polynomial in ``t`` with integer
coefficients, stored as an offset (lowest degree) and a dense coefficient
list.  All series in this module are finite, so every identity is checked
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import (
    Partition,
    cell_stats,
    count_p,
    count_standard_tableaux,
    partitions_of,
    triangular,
)


class InexactDivision(ArithmeticError):
    """A division in ``Z[t]`` left a remainder (an internal bug, not an input error)."""


# dense integer polynomials in t: list of coefficients, index = degree


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_t_pow(e: int) -> list[int]:
    """``1 - t^e``."""
    if e <= 0:
        raise ValueError("exponent must be positive")
    out = [0] * (e + 1)
    out[0], out[e] = 1, -1
    return out


def _divide_one_minus(a: Sequence[int], e: int) -> list[int]:
    """``a / (1 - t^e)``, which must be exact."""
    a = _trim(list(a))
    if not a:
        return []
    if len(a) <= e:
        raise InexactDivision(f"degree too small to divide by 1 - t^{e}")
    q = [0] * (len(a) - e)
    for i in range(len(q)):
        q[i] = a[i] + (q[i - e] if i >= e else 0)
    # remainder check: a - q (1 - t^e) must vanish
    if _trim(_sub(a, _mul(q, _one_minus_t_pow(e)))):
        raise InexactDivision(f"1 - t^{e} does not divide the numerator")
    return q


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def cyclotomic_quotient(numer: Iterable[int], denom: Iterable[int]) -> list[int]:
    """``∏(1 - t^a) / ∏(1 - t^b)`` as an integer polynomial.

    Equal exponents are cancelled first; the remaining numerator product
    is then divided factor by factor, each step exact whenever the overall
    quotient is a polynomial.
    """
    num = sorted(numer)
    den = sorted(denom)
    rest = []
    for b in den:
        if b in num:
            num.remove(b)
        else:
            rest.append(b)
    poly = [1]
    for a in num:
        poly = _mul(poly, _one_minus_t_pow(a))
    for b in rest:
        poly = _divide_one_minus(poly, b)
    return poly


@dataclass(frozen=True)
class HilbertPoly:
    """``t^offset · Σ coeffs[i] t^i``; normalized so ``coeffs`` has no zero ends."""

    offset: int
    coeffs: tuple[int, ...]

    def __init__(self, offset: int, coeffs: Sequence[int]):
        c = list(coeffs)
        lead = 0
        while lead < len(c) and c[lead] == 0:
            lead += 1
        c = _trim(c[lead:])
        object.__setattr__(self, "offset", offset + lead if c else 0)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "HilbertPoly":
        """The generating polynomial of a multiset of degrees."""
        ds = list(degrees)
        if not ds:
            return cls(0, ())
        lo = min(ds)
        c = [0] * (max(ds) - lo + 1)
        for d in ds:
            c[d - lo] += 1
        return cls(lo, c)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def top_degree(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        i = d - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def items(self) -> list[tuple[int, int]]:
        return [(self.offset + i, c) for i, c in enumerate(self.coeffs) if c]

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __add__(self, other: "HilbertPoly") -> "HilbertPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.top_degree, other.top_degree)
        return HilbertPoly(lo, [self.coefficient(d) + other.coefficient(d) for d in range(lo, hi + 1)])

    def __mul__(self, other: "HilbertPoly") -> "HilbertPoly":
        return HilbertPoly(self.offset + other.offset, _mul(self.coeffs, other.coeffs))

    def scale(self, c: int) -> "HilbertPoly":
        return HilbertPoly(self.offset, [c * x for x in self.coeffs])

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "HilbertPoly":
        return cls(data["offset"], data["coeffs"])

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d, c in self.items():
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if d == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}·{mono}")
        return " + ".join(parts)


def q_integer(l: int) -> HilbertPoly:
    """``[l]_t = 1 + t + ... + t^{l-1}``."""
    return HilbertPoly(0, [1] * l)


def hilbert_gamma(n: int, k: int, m: int) -> HilbertPoly:
    """``t^{(k-1)nm + k(k-1)/2} ∏_{s=1}^{k-1} (1 - t^{n-s}) / (1 - t^s)``."""
    _check(n, k, m)
    offset = (k - 1) * n * m + triangular(k)
    body = cyclotomic_quotient([n - s for s in range(1, k)], range(1, k))
    return HilbertPoly(offset, body)


def hilbert_from_counting(n: int, k: int, m: int) -> HilbertPoly:
    """``t^{(k-1)nm + k(k-1)/2} Σ_s p(s + (k-1)(k-2)/2; n-2; k-1) t^s``."""
    _check(n, k, m)
    offset = (k - 1) * n * m + triangular(k)
    shift = triangular(k - 1)
    top = (k - 1) * (n - k)
    return HilbertPoly(offset, [count_p(s + shift, n - 2, k - 1) for s in range(top + 1)])


def hilbert_component(lam: Partition, m: int) -> HilbertPoly:
    """Hilbert polynomial of ``γ_T(QI_m*)`` for any ``T`` of shape ``lam``.

    The exponent is ``mn(n-1)/2 + Σ_cells w(i,j;m)`` with one
    ``w = m(leg - arm) + leg`` per cell.  The published display places the
    ``t^w`` product inside the product over ``k = 1..n``, which would count
    each ``w`` ``n`` times; that reading does not reproduce the closed form
    of the hook lemma, so it is not used.
    """
    n = lam.size()
    stats = [cell_stats(lam, c) for c in lam.cells()]
    offset = m * triangular(n) + sum(m * (leg - arm) + leg for arm, leg, _ in stats)
    body = cyclotomic_quotient(range(1, n + 1), [h for _, _, h in stats])
    return HilbertPoly(offset, body)


def hilbert_full(n: int, m: int) -> HilbertPoly:
    """``Σ_{λ ⊢ n} f_λ · H(γ_T(QI_m*))`` — the Hilbert polynomial of ``QI_m*``."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    out = HilbertPoly(0, ())
    for lam in partitions_of(n):
        out = out + hilbert_component(lam, m).scale(count_standard_tableaux(lam))
    return out


def coinvariant_poly(n: int) -> HilbertPoly:
    """``∏_{l=1}^n [l]_t``, computed by direct multiplication."""
    out = HilbertPoly(0, [1])
    for l in range(1, n + 1):
        out = out * q_integer(l)
    return out


def _check(n: int, k: int, m: int) -> None:
    if n < 1 or not 1 <= k <= n or m < 0:
        raise ValueError(f"need 1 <= k <= n and m >= 0, got n={n}, k={k}, m={m}")


# Prop. 3.4


def p_shifted(s: int, a: int, u: int) -> int:
    """``p_{s,a,u} = p(s + u(u-1)/2; a; u)``."""
    return count_p(s + triangular(u), a, u)


def _identity_1(n: int, k: int) -> list[dict]:
    out = []
    for l in range(0, n - k):
        lhs, rhs = p_shifted(l, n - 3, k - 1), p_shifted(l, n - 2, k - 1)
        out.append({"l": l, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs})
    return out


def _identity_2(n: int, k: int) -> list[dict]:
    out = []
    for l in range(n - k, (k - 1) * (n - k) + 2):
        lhs = p_shifted(l, n - 2, k - 1)
        rhs = p_shifted(l, n - 3, k - 1) + p_shifted(l + k - n, n - 3, k - 2)
        out.append({"l": l, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs})
    return out


def _identity_3(n: int, k: int) -> list[dict]:
    out = []
    for l in range(0, k - 1):
        lhs = p_shifted((k - 1) * (n - k) - l, n - 2, k - 1)
        rhs = p_shifted((k - 2) * (n - k) - l, n - 3, k - 2)
        out.append({"l": l, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs})
    return out


def verify_p_recurrences(n_max: int, k_max: int) -> dict:
    """Check the three identities of Prop. 3.4 for ``3 <= k <= k_max``, ``k <= n <= n_max``.

    Returns ``{"pass": bool, "cells": [{"n", "k", "identity", "pass", "failures"}]}``.
    """
    if n_max < 3 or k_max < 3:
        raise ValueError("bounds must be at least 3")
    cells = []
    for n in range(3, n_max + 1):
        for k in range(3, min(k_max, n) + 1):
            for name, fn in (("1", _identity_1), ("2", _identity_2), ("3", _identity_3)):
                rows = fn(n, k)
                bad = [r for r in rows if not r["pass"]]
                cells.append({"n": n, "k": k, "identity": name, "checked": len(rows), "pass": not bad, "failures": bad})
    return {"pass": all(c["pass"] for c in cells), "cells": cells}


def hook_summand_matches(n: int, k: int, m: int) -> bool:
    """The ``η(n,k)`` summand of :func:`hilbert_full`, divided by ``f_λ``, equals :func:`hilbert_gamma`."""
    lam = Partition([n - k + 1] + [1] * (k - 1))
    return hilbert_component(lam, m) == hilbert_gamma(n, k, m)


__all__ = [
    "HilbertPoly",
    "InexactDivision",
    "coinvariant_poly",
    "cyclotomic_quotient",
    "hilbert_component",
    "hilbert_from_counting",
    "hilbert_full",
    "hilbert_gamma",
    "hook_summand_matches",
    "p_shifted",
    "q_integer",
    "verify_p_recurrences",
]
