"""Command-line front end: ``quasihook <subcommand> ...``.

Exit codes: 0 success, 1 verification failure (a JSON failure report is
printed), 2 invalid parameters, 3 the ``--max-terms`` cap was exceeded.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from typing import Sequence

from . import polyring
from .calogero import LmOperator, NotInDomain, apply_lm, first_diff, lm_on_basis_formula
from .combinatorics import HookShape, HookTableau, StrictPartition, standard_hook_tableaux
from .hilbert import hilbert_from_counting, hilbert_full, hilbert_gamma
from .polyring import TermLimitExceeded
from .quasi import QuasiBasisElement, basis_for_component, q_poly_det
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_N_CAP, DEFAULT_M_CAP = 8, 3
DEFAULT_MAX_TERMS = 2_000_000


class UsageError(ValueError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_shape(p: argparse.ArgumentParser, need_k: bool = True, need_m: bool = True) -> None:
    p.add_argument("--n", type=int, required=True, help="number of boxes")
    if need_k:
        p.add_argument("--k", type=int, required=True, help="column length of the hook")
    if need_m:
        p.add_argument("--m", type=int, required=True, help="multiplicity")


def _add_tableau(p: argparse.ArgumentParser) -> None:
    p.add_argument("--column", type=_int_list,
                   help="column entries s_1,...,s_k of a standard tableau (default 1,2,...,k)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasihook", description=__doc__.splitlines()[0],
                                     allow_abbrev=False)
    parser.add_argument("--format", choices=("auto", "text", "json"), default="auto",
                        help="output format (auto: text on a terminal, JSON otherwise)")
    parser.add_argument("--max-terms", type=int, default=None,
                        help=f"abort with exit 3 once a polynomial exceeds this many terms "
                             f"(default: $QUASI_MAX_TERMS or {DEFAULT_MAX_TERMS})")
    parser.add_argument("--n-cap", type=int, default=DEFAULT_N_CAP, help="largest accepted n")
    parser.add_argument("--m-cap", type=int, default=DEFAULT_M_CAP, help="largest accepted m")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qpoly", allow_abbrev=False, help="print Q_T^{mu;m}")
    _add_shape(p)
    _add_tableau(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--mu", type=_int_list, help="strict partition mu_1 > ... > mu_{k-1} >= 0")
    g.add_argument("--alpha", type=_int_list, help="arbitrary integer exponent vector of length k-1")

    p = sub.add_parser("basis", allow_abbrev=False, help="print the basis of gamma_T(QI_m*) with degrees")
    _add_shape(p)
    _add_tableau(p)

    p = sub.add_parser("tableaux", allow_abbrev=False, help="list the standard tableaux of shape eta(n,k)")
    _add_shape(p, need_m=False)

    p = sub.add_parser("hilbert", allow_abbrev=False, help="closed-form, counting and full Hilbert polynomials")
    _add_shape(p)

    p = sub.add_parser("lm", allow_abbrev=False, help="apply L_m to Q_T^{alpha;m} directly and by the closed formula")
    _add_shape(p)
    _add_tableau(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--mu", type=_int_list)
    g.add_argument("--alpha", type=_int_list)
    p.add_argument("--reading", choices=("derived", "printed"), default="derived",
                   help="which form of the closed formula to compare against")

    p = sub.add_parser("verify", allow_abbrev=False, help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--pairs", type=int, help="random pairs for the product rule (lemma4)")
    p.add_argument("--seed", type=int, help="seed for the product rule (lemma4)")
    return parser


# validation


def _validate_shape(args, need_k: bool = True, need_m: bool = True) -> None:
    if not 1 <= args.n <= args.n_cap:
        raise UsageError(f"--n must be between 1 and {args.n_cap}")
    if need_k and not 1 <= args.k <= args.n:
        raise UsageError("--k must satisfy 1 <= k <= n")
    if need_m and not 0 <= args.m <= args.m_cap:
        raise UsageError(f"--m must be between 0 and {args.m_cap}")


def _tableau(args) -> HookTableau:
    if args.column is None:
        return HookTableau.standard(args.n, tuple(range(1, args.k + 1)))
    col = tuple(args.column)
    if len(col) != args.k:
        raise UsageError(f"--column needs {args.k} entries")
    try:
        t = HookTableau.standard(args.n, col)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not t.is_standard():
        raise UsageError(f"{t} is not a standard tableau")
    return t


def _exponents(args) -> tuple[tuple[int, ...], bool]:
    """``(alpha, strict)``: the exponent vector and whether it came from ``--mu``."""
    vec = args.mu if args.mu is not None else args.alpha
    if len(vec) != args.k - 1:
        raise UsageError(f"expected {args.k - 1} exponents, got {len(vec)}")
    if args.mu is not None:
        try:
            StrictPartition(vec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return vec, args.mu is not None


# commands


def cmd_qpoly(args, out) -> int:
    _validate_shape(args)
    t = _tableau(args)
    alpha, strict = _exponents(args)
    poly = q_poly_det(t, alpha, args.m)
    if strict:
        data = QuasiBasisElement(t, StrictPartition(alpha), args.m, poly).to_json()
    else:
        data = {"shape": [t.n, t.k], "tableau": t.to_json(), "alpha": list(alpha), "m": args.m,
                "poly": poly.to_json()}
    if args.format == "json":
        _dump(data, out)
    else:
        out.write(poly.to_text() + "\n")
    return EXIT_OK


def cmd_basis(args, out) -> int:
    _validate_shape(args)
    t = _tableau(args)
    basis = basis_for_component(t, args.m)
    if args.format == "json":
        _dump({"shape": [t.n, t.k], "tableau": t.to_json(), "m": args.m,
               "elements": [b.to_json() for b in basis]}, out)
        return EXIT_OK
    labels = ["(" + ",".join(map(str, b.mu.parts)) + ")" for b in basis]
    width = max(len(s) for s in labels)
    out.write(f"basis of gamma_T(QI_{args.m}*) for T = {t}: {len(basis)} elements\n")
    for label, b in zip(labels, basis):
        out.write(f"mu={label:<{width}}  degree={b.degree:<4} {b.poly.to_text()}\n")
    return EXIT_OK


def cmd_tableaux(args, out) -> int:
    _validate_shape(args, need_m=False)
    tabs = standard_hook_tableaux(HookShape(args.n, args.k))
    if args.format == "json":
        _dump([t.to_json() for t in tabs], out)
    else:
        for t in tabs:
            out.write(f"{t}\n")
    return EXIT_OK


def cmd_hilbert(args, out) -> int:
    _validate_shape(args)
    closed = hilbert_gamma(args.n, args.k, args.m)
    counting = hilbert_from_counting(args.n, args.k, args.m)
    full = hilbert_full(args.n, args.m)
    equal = closed == counting
    data = {**closed.to_json(), "counting": counting.to_json(), "full": full.to_json(), "equal": equal}
    if args.format == "json":
        _dump(data, out)
    else:
        rows = [("closed form", closed.to_text()), ("counting form", counting.to_text()),
                (f"full series (n={args.n})", full.to_text()), ("closed == counting", str(equal).lower())]
        width = max(len(a) for a, _ in rows)
        for a, b in rows:
            out.write(f"{a:<{width}}  {b}\n")
    if not equal:
        _dump({"identity": "lemma_hilbert.closed_equals_counting",
               "params": {"n": args.n, "k": args.k, "m": args.m}, "pass": False,
               "first_diff": {"expected": closed.to_json(), "got": counting.to_json()}}, out)
        return EXIT_FAIL
    return EXIT_OK


def cmd_lm(args, out) -> int:
    _validate_shape(args)
    t = _tableau(args)
    alpha, _ = _exponents(args)
    q = q_poly_det(t, alpha, args.m)
    try:
        direct = apply_lm(LmOperator(args.n, args.m), q)
    except NotInDomain as exc:
        _dump({"identity": "thmLm.formula", "params": _lm_params(args, t, alpha), "pass": False,
               "first_diff": {"not_in_domain": list(exc.pair)}}, out)
        return EXIT_FAIL
    formula = lm_on_basis_formula(t, alpha, args.m, reading=args.reading)
    diff = first_diff(direct, formula)
    report = {"identity": "thmLm.formula", "params": _lm_params(args, t, alpha), "pass": diff is None,
              "first_diff": diff}
    if args.format == "json":
        _dump({**report, "direct": direct.to_json(), "formula": formula.to_json()}, out)
    else:
        out.write(f"direct   {direct.to_text()}\n")
        out.write(f"formula  {formula.to_text()}\n")
        out.write(f"equal    {str(diff is None).lower()}\n")
        if diff is not None:
            _dump(report, out)
    return EXIT_OK if diff is None else EXIT_FAIL


def _lm_params(args, t, alpha) -> dict:
    return {"tableau": str(t), "n": args.n, "k": args.k, "m": args.m, "alpha": list(alpha),
            "reading": args.reading}


def cmd_verify(args, out) -> int:
    given = {"n_max": args.n_max, "k_max": args.k_max, "m_max": args.m_max, "pairs": args.pairs,
             "seed": args.seed}
    given = {k: v for k, v in given.items() if v is not None}
    if args.n_max is not None and args.n_max > args.n_cap:
        raise UsageError(f"--n-max exceeds the cap {args.n_cap}")
    if args.m_max is not None and args.m_max > args.m_cap:
        raise UsageError(f"--m-max exceeds the cap {args.m_cap}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    params = {}
    for name in names:
        accepted = inspect.signature(SUITES[name]).parameters
        params[name] = {k: v for k, v in given.items() if k in accepted}
    try:
        result = run_suite(args.suite, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json" or not result["pass"]:
        _dump(result, out)
    else:
        out.write(f"{args.suite}: {result['checks']} checks passed\n")
    return EXIT_OK if result["pass"] else EXIT_FAIL


COMMANDS = {
    "qpoly": cmd_qpoly,
    "basis": cmd_basis,
    "tableaux": cmd_tableaux,
    "hilbert": cmd_hilbert,
    "lm": cmd_lm,
    "verify": cmd_verify,
}


def _dump(data, out) -> None:
    out.write(json.dumps(data, ensure_ascii=False, sort_keys=False) + "\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.format == "auto":
        args.format = "text" if out.isatty() else "json"
    try:
        limit = args.max_terms if args.max_terms is not None else int(os.environ.get("QUASI_MAX_TERMS", DEFAULT_MAX_TERMS))
    except ValueError:
        err.write("quasihook: QUASI_MAX_TERMS must be an integer\n")
        return EXIT_USAGE
    if limit < 1:
        err.write("quasihook: --max-terms must be positive\n")
        return EXIT_USAGE
    previous = polyring.get_max_terms()
    polyring.set_max_terms(limit)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        parser.print_usage(err)
        err.write(f"quasihook {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except TermLimitExceeded as exc:
        err.write(f"quasihook {args.command}: {exc}\n")
        return EXIT_LIMIT
    finally:
        polyring.set_max_terms(previous)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
