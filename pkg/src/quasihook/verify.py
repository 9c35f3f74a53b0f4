"""Verification suites, one per proposition or theorem of the paper.

Every suite returns a list of reports of the form
``{"identity": str, "params": dict, "pass": bool, "first_diff": ... | None}``.
For polynomial identities ``first_diff`` names the largest monomial where
the two sides differ; for scalar checks it holds ``{"expected", "got"}``.
Reports come out in a fixed order, so output is deterministic.
"""

from __future__ import annotations

from math import comb, factorial, prod
from typing import Callable

from gmpy2 import mpq

from .calogero import (
    LmOperator,
    NotInDomain,
    apply_lm,
    identity_report,
    integration_reports,
    lm_on_basis_formula,
    product_rule_reports,
    r3_report,
    r3_special_case_report,
)
from .combinatorics import HookShape, HookTableau, remove_entry, standard_hook_tableaux
from .groupring import (
    act,
    gamma,
    gamma_hook_factored,
    product as group_product,
    subgroup_sum,
    telescoping_factorization,
)
from .hilbert import (
    HilbertPoly,
    coinvariant_poly,
    hilbert_from_counting,
    hilbert_full,
    hilbert_gamma,
    hook_summand_matches,
    verify_p_recurrences,
)
from .polyring import MultiPoly, divides, is_antisymmetric_in, is_symmetric_in, vandermonde
from .quasi import (
    basis_for_component,
    component_partitions,
    ideal_slice_rank_check,
    in_isotypic_component,
    is_quasiinvariant,
    permutation_sign_of,
    q_degree,
    q_poly_det,
    r_poly,
    r_poly_closed_m0,
    r_poly_via_recurrence,
)


def scalar_report(identity: str, params: dict, expected, got) -> dict:
    ok = expected == got
    return {
        "identity": identity,
        "params": params,
        "pass": ok,
        "first_diff": None if ok else {"expected": _plain(expected), "got": _plain(got)},
    }


def _plain(v):
    if isinstance(v, HilbertPoly):
        return v.to_json()
    if isinstance(v, MultiPoly):
        return v.to_text()
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, type(mpq())):
        return str(v)
    return v


def _tp(t: HookTableau, **extra) -> dict:
    return {"tableau": str(t), **extra}


def _x_s1_coefficient(n: int, m: int, top: int) -> mpq:
    """``m! / ∏_{s=0}^{m} (mn + top + 1 - s)``; callers attach the sign."""
    return mpq(factorial(m), prod(m * n + top + 1 - s for s in range(m + 1)))


# Prop. 2.7: k = 2


def suite_prop2_7(n_max: int = 5, m_max: int = 2, closed_n_max: int = 6) -> list[dict]:
    """Criteria 1 and 2, plus the degree and leading-coefficient facts for ``k = 2``."""
    out = []
    for n in range(2, closed_n_max + 1):
        t = HookTableau.standard(n, (1, 2))
        for l in range(n - 1):
            out.append(identity_report(
                "prop2_7.closed_form_m0", {"n": n, "l": l},
                r_poly(t, 1, 2, l, 0), r_poly_closed_m0(sorted(t.members()), 1, 2, l)))
    for n in range(2, n_max + 1):
        for t in standard_hook_tableaux(HookShape(n, 2)):
            a, b = t.column
            for m in range(m_max + 1):
                for l in range(n - 1):
                    params = _tp(t, n=n, l=l, m=m)
                    q = r_poly(t, a, b, l, m)
                    out.append(identity_report("prop2_7.recurrence", params, r_poly_via_recurrence(t, l, m), q))
                    out.append(scalar_report("prop2_7.degree", params, n * m + l + 1,
                                             q.total_degree() if q.is_homogeneous() else "inhomogeneous"))
                    out.append(scalar_report("prop2_7.degree_in_x_s1", params, n * m + l + 1, q.degree_in(a)))
                    lc = q.leading_coeff_in(a)
                    c = (-1) ** (m + 1) * _x_s1_coefficient(n, m, l)
                    out.append(identity_report("prop2_7.leading_coeff_x_s1", params, lc, MultiPoly.const(c, lc.vars)))
                    for r in t.arm_entries():
                        rhs = q_poly_det(remove_entry(t, r), (l,), m).scale((-1) ** m)
                        out.append(identity_report("prop2_7.leading_coeff_row", {**params, "row_entry": r},
                                                   q.leading_coeff_in(r), rhs))
    return out


# Prop. 3.2 and membership (criteria 3 and 4)


def prop3_2_grid(n_max: int = 5, k_max: int = 4, m_max: int = 1, m2_n_max: int = 4) -> list[tuple[int, int, int]]:
    """``n <= n_max, k <= k_max, m <= m_max``, plus ``m = 2`` for ``n <= m2_n_max``."""
    return [
        (n, k, m)
        for n in range(2, n_max + 1)
        for k in range(2, min(n, k_max) + 1)
        for m in range((max(m_max, 2) if n <= m2_n_max else m_max) + 1)
    ]


def check_basis_element(t: HookTableau, mu: tuple[int, ...], m: int) -> list[dict]:
    """Every Prop. 3.2 property of one ``Q_T^{μ;m}``."""
    n, k = t.n, t.k
    params = _tp(t, mu=list(mu), m=m)
    q = q_poly_det(t, mu, m)
    out = [
        scalar_report("prop3_2.nonzero", params, True, not q.is_zero()),
        scalar_report("prop3_2.degree", params, q_degree(n, k, mu, m),
                      q.total_degree() if q.is_homogeneous() else "inhomogeneous"),
        scalar_report("prop3_2.symmetric_in_row", params, True, is_symmetric_in(q, t.row[1:])),
        scalar_report("prop3_2.antisymmetric_in_column", params, True, is_antisymmetric_in(q, t.column)),
        scalar_report("prop3_2.divisible_by_V^(2m+1)", params, True,
                      divides(vandermonde(t.column).lift(q.vars) ** (2 * m + 1), q)),
        identity_report("prop3_2.gamma_invariant", params, act(gamma(t), q), q),
        scalar_report("eq_gammaT.quasiinvariant", params, True, is_quasiinvariant(q, n, m)),
        scalar_report("eq_gammaT.in_isotypic_component", params, True, in_isotypic_component(q, t, m)),
        identity_report("prop3_2.anchored_rows", params, q_poly_det(t, mu, m, pairs="anchored"), q),
    ]
    s1 = t.corner
    lc = q.leading_coeff_in(s1)
    c = (-1) ** ((k - 1) * m + 1) * _x_s1_coefficient(n, m, mu[0])
    out.append(scalar_report("prop3_2.degree_in_x_s1", params, (n + k - 2) * m + mu[0] + 1, q.degree_in(s1)))
    out.append(identity_report("prop3_2.leading_coeff_x_s1", params, lc,
                               q_poly_det(remove_entry(t, s1), mu[1:], m).scale(c)))
    # stated for x_{s_{k+1}}; checked for every row entry
    for r in t.arm_entries():
        rp = {**params, "row_entry": r}
        out.append(scalar_report("prop3_2.degree_in_row_var", rp, (k - 1) * m, q.degree_in(r)))
        out.append(identity_report("prop3_2.leading_coeff_row", rp, q.leading_coeff_in(r),
                                   q_poly_det(remove_entry(t, r), mu, m).scale((-1) ** ((k - 1) * m))))
    return out


def suite_prop3_2(n_max: int = 5, k_max: int = 4, m_max: int = 1, m2_n_max: int = 4) -> list[dict]:
    out = []
    for n, k, m in prop3_2_grid(n_max, k_max, m_max, m2_n_max):
        for t in standard_hook_tableaux(HookShape(n, k)):
            for mu in component_partitions(n, k):
                out.extend(check_basis_element(t, mu.parts, m))
            out.extend(_determinant_conventions(t, m))
    return out


def _determinant_conventions(t: HookTableau, m: int) -> list[dict]:
    """Bareiss vs cofactor, repeated columns, and the sign rule for permuted ``α``."""
    n, k = t.n, t.k
    if k < 3:
        return []
    out = []
    mus = component_partitions(n, k)
    mu = mus[-1].parts
    params = _tp(t, mu=list(mu), m=m)
    q = q_poly_det(t, mu, m)
    out.append(identity_report("q_det.bareiss_equals_cofactor", params, q_poly_det(t, mu, m, method="bareiss"), q))
    rev = tuple(reversed(mu))
    sgn, _ = permutation_sign_of(rev)
    out.append(identity_report("q_det.permuted_alpha_sign", {**params, "alpha": list(rev)},
                               q_poly_det(t, rev, m), q.scale(sgn)))
    rep = (mu[0],) * (k - 1)
    out.append(scalar_report("q_det.repeated_alpha_vanishes", {**params, "alpha": list(rep)},
                             True, q_poly_det(t, rep, m).is_zero()))
    return out


# Prop. 3.4 and the Hilbert lemma (criterion 5)


def suite_prop3_4(n_max: int = 8, k_max: int = 4) -> list[dict]:
    rep = verify_p_recurrences(n_max, k_max)
    out = []
    for cell in rep["cells"]:
        out.append({
            "identity": f"prop3_4.identity_{cell['identity']}",
            "params": {"n": cell["n"], "k": cell["k"], "l_values": cell["checked"]},
            "pass": cell["pass"],
            "first_diff": cell["failures"][0] if cell["failures"] else None,
        })
    return out


def suite_lemma_hilbert(n_max: int = 8, k_max: int = 4, m_max: int = 3, full_n_max: int = 7) -> list[dict]:
    out = []
    for n in range(2, n_max + 1):
        for k in range(2, min(n, k_max) + 1):
            for m in range(m_max + 1):
                p = {"n": n, "k": k, "m": m}
                g = hilbert_gamma(n, k, m)
                out.append(scalar_report("lemma_hilbert.closed_equals_counting", p, g, hilbert_from_counting(n, k, m)))
                out.append(scalar_report("lemma_hilbert.palindromic", p, True, g.is_palindromic()))
                out.append(scalar_report("lemma_hilbert.total_dimension", p, comb(n - 1, k - 1), g.at_one()))
                out.append(scalar_report("lemma_hilbert.offset", p, (k - 1) * n * m + k * (k - 1) // 2, g.offset))
                out.append(scalar_report("thm2_4.hook_summand", p, True, hook_summand_matches(n, k, m)))
    for n in range(1, full_n_max + 1):
        out.append(scalar_report("thm2_4.coinvariant_m0", {"n": n}, coinvariant_poly(n), hilbert_full(n, 0)))
        for m in range(m_max + 1):
            out.append(scalar_report("thm2_4.total_dimension", {"n": n, "m": m}, factorial(n), hilbert_full(n, m).at_one()))
    return out


# Theorem 3.6 / Corollary 3.8 (criterion 6)

THEOREM3_6_CELLS = ((4, 2, 2), (5, 2, 1), (4, 3, 1), (5, 3, 1), (4, 4, 1), (5, 4, 0))


def theorem3_6_cells(cells=THEOREM3_6_CELLS) -> list[tuple[int, int, int]]:
    """Expand ``(n, k, m_max)`` into every ``(n, k, m)`` with ``m <= m_max``."""
    return [(n, k, m) for n, k, top in cells for m in range(top + 1)]


def suite_theorem3_6(cells=THEOREM3_6_CELLS, all_tableaux: bool = True) -> list[dict]:
    out = []
    for n, k, m in theorem3_6_cells(cells):
        tabs = standard_hook_tableaux(HookShape(n, k))
        for t in tabs if all_tableaux else tabs[:1]:
            p = _tp(t, n=n, k=k, m=m)
            basis = basis_for_component(t, m)
            out.append(scalar_report("thm3_6.cardinality", p, comb(n - 1, k - 1), len(basis)))
            degs = HilbertPoly.from_degrees(b.degree for b in basis)
            out.append(scalar_report("thm3_6.degree_multiset", p, hilbert_gamma(n, k, m), degs))
            rep = ideal_slice_rank_check(t, m)
            bad = [d for d in rep["degrees"] if not d["pass"]]
            out.append({"identity": "cor3_8.free_and_independent", "params": p, "pass": rep["pass"],
                        "first_diff": bad[0] if bad else None})
    return out


# §4: Theorem 4.1 and Theorem thmLm (criteria 7 and 8)

THEOREM_LM_CELLS = ((4, 3, 0), (4, 3, 1), (5, 3, 1), (4, 2, 2))


def sample_alphas(n: int, k: int) -> list[tuple[int, ...]]:
    """Non-sorted and degenerate exponent vectors: at least five per hook.

    Reversed strict partitions, a repeated value, a negative entry, an entry
    above ``n - 2`` and (for ``k >= 3``) an increasing pair with a gap.
    """
    u = k - 1
    out: list[tuple[int, ...]] = []
    if u == 1:
        out += [(-1,), (0,), (1,), (n - 1,), (n,)]
    else:
        for mu in component_partitions(n, k)[:3]:
            out.append(tuple(reversed(mu.parts)))
        out.append((1,) * u)
        out.append((-1,) + tuple(range(u - 1, 0, -1)))
        out.append((n - 1,) + tuple(range(u - 2, -1, -1)))
        out.append(tuple(range(0, 2 * u, 2)))
    return list(dict.fromkeys(out))


def suite_theorem_lm(n_max: int = 5, m_max: int = 2, cells=THEOREM_LM_CELLS, reading: str = "derived") -> list[dict]:
    out = []
    for n in range(2, n_max + 1):
        t = HookTableau.standard(n, (1, 2))
        for m in range(m_max + 1):
            op = LmOperator(n, m)
            for l in range(n - 1):
                lhs = apply_lm(op, q_poly_det(t, (l,), m))
                rhs = q_poly_det(t, (l - 2,), m).scale(l * (l - 1))
                out.append(identity_report("thm4_1.lm_action", {"n": n, "l": l, "m": m}, lhs, rhs))
    for n, k, m in cells:
        op = LmOperator(n, m)
        tabs = standard_hook_tableaux(HookShape(n, k))
        for t in (tabs[0], tabs[-1]) if len(tabs) > 1 else tabs:
            strict = [mu.parts for mu in component_partitions(n, k)]
            for alpha in strict + sample_alphas(n, k):
                p = _tp(t, n=n, k=k, m=m, alpha=list(alpha), reading=reading)
                q = q_poly_det(t, alpha, m)
                try:
                    lhs = apply_lm(op, q)
                except NotInDomain as exc:
                    out.append({"identity": "thmLm.formula", "params": p, "pass": False,
                                "first_diff": {"not_in_domain": list(exc.pair)}})
                    continue
                out.append(identity_report("thmLm.formula", p, lhs, lm_on_basis_formula(t, alpha, m, reading)))
                if alpha in strict:
                    out.append(scalar_report("thmLm.preserves_quasiinvariants", p, True, is_quasiinvariant(lhs, n, m)))
                    want = q.total_degree() - 2
                    out.append(scalar_report("thmLm.degree_drop", p, True,
                                             lhs.is_zero() or (lhs.is_homogeneous() and lhs.total_degree() == want)))
    return out


# §4 Lemma (criterion 9)


def suite_lemma4(pairs: int = 50, seed: int = 0) -> list[dict]:
    out = []
    for m in (1, 2):
        out.extend(product_rule_reports(3, m, pairs, seed))
    for n in range(2, 5):
        for m in (1, 2):
            for k in range(5):
                out.extend(integration_reports(n, m, k))
    for n in (3, 4):
        for m in (1, 2):
            for gap in (1, 2, 3):
                for l in range(3):
                    out.append(r3_report(n, m, l + gap, l))
            for k in range(1, 4):
                out.append(r3_special_case_report(n, m, k))
    return out


# group ring (criterion 10)


def suite_prop2_2(n_max: int = 5, x_max: int = 4) -> list[dict]:
    out = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            for t in standard_hook_tableaux(HookShape(n, k)):
                g = gamma(t)
                p = _tp(t, n=n, k=k)
                out.append(scalar_report("gamma.idempotent", p, True, g * g == g))
                out.append(scalar_report("gamma.factored", p, True, gamma_hook_factored(t) == g))
    for size in range(1, x_max + 1):
        xs = tuple(range(1, size + 1))
        for signed in (False, True):
            p = {"X": list(xs), "signed": signed}
            prod_ = group_product(telescoping_factorization(xs, signed), xs)
            out.append(scalar_report("prop2_2.telescoping", p, True, prod_ == subgroup_sum(xs, signed=signed)))
    return out


SUITES: dict[str, Callable[..., list[dict]]] = {
    "prop2_2": suite_prop2_2,
    "prop2_7": suite_prop2_7,
    "prop3_2": suite_prop3_2,
    "prop3_4": suite_prop3_4,
    "lemma_hilbert": suite_lemma_hilbert,
    "theorem3_6": suite_theorem3_6,
    "theorem_lm": suite_theorem_lm,
    "lemma4": suite_lemma4,
}


def run_suite(name: str, **params) -> dict:
    """Run one suite (or ``"all"``) and summarize.

    Returns ``{"suite", "pass", "checks", "failures": [...]}``.
    """
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(name)
    reports = []
    for n in names:
        reports.extend(SUITES[n](**params.get(n, {})))
    failures = [r for r in reports if not r["pass"]]
    return {"suite": name, "pass": not failures, "checks": len(reports), "failures": failures}
