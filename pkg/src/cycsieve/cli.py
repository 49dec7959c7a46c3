"""
Command-line front end.

Exit codes: 0 when every verdict is true, 1 when some mathematical verdict is false
(the failing rows are printed), 2 for usage errors, violated preconditions and budgets.
"""
from __future__ import annotations

import argparse
import functools
import itertools
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from .cherednik import rational_q_schroder
from .corpus import counterexample_pair
from .csp import check_bracelet_csp, check_csp, check_nc_secondary, check_technical_csp
from .errors import CycsieveError, FormulaMismatch, NonPolynomialQuotient
from .molien import coset_poly_X, molien_series, y_poly, y_zeta_prediction
from .orbits import CosetSpace, DoubleCosetSpace, WordSpace, bracelet_orbits, normalize_composition
from .qpoly import (
    c_alpha, eval_at_root_of_unity, is_palindromic, is_parity_unimodal, poly_to_json,
    q_multinomial,
)
from .symmgrp import Permutation, SubgroupSpec, rotation, young_subgroup

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# parsing helpers
# --------------------------------------------------------------------------

def parse_composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"composition must be comma-separated integers, got {text!r}") from None
    if not parts or any(p < 0 for p in parts):
        raise UsageError(f"composition must have nonnegative parts, got {text!r}")
    alpha = normalize_composition(parts)
    if alpha != parts:
        print(f"note: zero parts dropped, using {','.join(map(str, alpha))}", file=sys.stderr)
    if not alpha:
        raise UsageError("composition is empty")
    return alpha


def parse_permutation(text: str, n: int | None) -> Permutation:
    """Cycle notation; falls back to one-character points (0 = 10) when the spaced reading fails."""
    try:
        return Permutation.from_cycles(text, n=n)
    except ValueError as first:
        try:
            return Permutation.from_cycles(text, n=n, compact=True)
        except ValueError:
            raise UsageError(f"cannot parse permutation {text!r}: {first}") from None


def _degree_of(texts: Iterable[str]) -> int:
    best = 0
    for t in texts:
        try:
            best = max(best, Permutation.from_cycles(t).n)
        except ValueError:
            best = max(best, Permutation.from_cycles(t, compact=True).n)
    return best


def _subgroup_from_args(args, n: int | None) -> SubgroupSpec:
    if args.young:
        alpha = parse_composition(args.young)
        if n is not None and sum(alpha) != n:
            raise UsageError(f"Young composition sums to {sum(alpha)}, expected {n}")
        return young_subgroup(alpha)
    if n is None:
        raise UsageError("give --n, --young, or at least one generator")
    gens = [parse_permutation(g, n) for g in args.gen]
    return SubgroupSpec(n, gens, name="<" + ", ".join(args.gen) + ">" if gens else "1")


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_necklaces(args) -> int:
    alpha = parse_composition(args.alpha)
    n = sum(alpha)
    if n < 3:
        raise UsageError(f"n = {n}: necklace reflections need n >= 3")
    if math.gcd(*alpha) != 1:
        raise UsageError(f"gcd{alpha} = {math.gcd(*alpha)} > 1: rotation does not act freely on words, "
                         "so C(alpha; q) is not a polynomial")
    words = WordSpace(alpha, budget=args.budget)
    poly = c_alpha(alpha)
    rot = check_csp(lambda b: words.fix_count(rotation(n, b)), n, q_multinomial(alpha))
    refl = check_bracelet_csp(alpha)
    counts = bracelet_orbits(alpha)
    necklaces = DoubleCosetSpace(words).size
    ok = rot.verdict and refl.verdict and refl.conditions["bracelets"]["identities_hold"]
    payload = {
        "alpha": list(alpha), "polynomial": poly_to_json(poly), "polynomial_text": str(poly),
        "necklaces": necklaces, "bracelets": counts.total, "asymmetric": counts.asymmetric,
        "value_at_minus_one": poly(-1),
        "rotation_csp": rot.to_json(), "reflection_csp": refl.to_json(), "verdict": ok,
    }
    lines = [
        f"alpha = {','.join(map(str, alpha))}",
        f"C(alpha; q) = {poly}",
        f"necklaces {necklaces}, bracelets {counts.total}, asymmetric {counts.asymmetric}",
        f"C(alpha; -1) = {poly(-1)}, reflection-fixed necklaces = {counts.symmetric_necklaces}",
        f"rotation CSP (words, m={n}): {rot.verdict}",
        f"reflection CSP (necklaces, m=2): {refl.verdict}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FALSE


def _schroder_row(abk: tuple[int, int, int]) -> dict:
    a, b, k = abk
    try:
        p = rational_q_schroder(a, b, k)
        formula = True
    except FormulaMismatch as exc:
        p, formula = exc.left, False
    parity = is_parity_unimodal(p)
    return {"a": a, "b": b, "k": k, "polynomial": str(p), "formula_matches": formula,
            "palindromic": is_palindromic(p), "parity_unimodal": bool(parity),
            "witness": list(parity.witness) if parity.witness else None}


def _row_ok(row: dict) -> bool:
    return row["formula_matches"] and row["palindromic"] and row["parity_unimodal"]


def cmd_schroder(args) -> int:
    bound = args.bound if args.bound is not None else 10
    triples = [(a, b, k) for b in range(2, bound + 1) for a in range(1, b)
               if math.gcd(a, b) == 1 for k in range(a + 1)]
    rows = _pmap(_schroder_row, triples, args.jobs)
    bad = [r for r in rows if not _row_ok(r)]
    payload = {"bound": bound, "rows": rows, "failures": bad, "verdict": not bad}
    lines = [f"{len(rows)} triples (a,b,k) with coprime a < b <= {bound}"]
    if args.verbose:
        lines += [f"  ({r['a']},{r['b']},{r['k']}): {r['polynomial']}" for r in rows]
    lines += [f"FAIL ({r['a']},{r['b']},{r['k']}): {r}" for r in bad]
    lines.append("all pass" if not bad else f"{len(bad)} failures")
    _emit(args, payload, lines)
    return EXIT_OK if not bad else EXIT_FALSE


@functools.lru_cache(maxsize=None)
def _parity_of_partition(sorted_alpha: tuple[int, ...]) -> tuple[bool, tuple | None]:
    res = is_parity_unimodal(c_alpha(sorted_alpha))
    return bool(res), res.witness


def _compositions(n: int) -> Iterable[tuple[int, ...]]:
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def _parity_for_n(n: int) -> dict:
    checked, failures = 0, []
    for alpha in _compositions(n):
        if math.gcd(*alpha) != 1:
            continue
        checked += 1
        # [n; alpha]_q is symmetric in the parts, so one check per multiset suffices
        ok, witness = _parity_of_partition(tuple(sorted(alpha, reverse=True)))
        if not ok:
            failures.append({"alpha": list(alpha), "witness": list(witness)})
    return {"n": n, "compositions": checked, "failures": failures}


def cmd_parity_sweep(args) -> int:
    if args.schroder:
        args.bound = args.bound if args.bound is not None else 30
        return cmd_schroder(args)
    n_max = args.bound if args.bound is not None else 14
    rows = _pmap(_parity_for_n, list(range(1, n_max + 1)), args.jobs)
    bad = [f for r in rows for f in r["failures"]]
    payload = {"n_max": n_max, "per_n": rows, "verdict": not bad}
    lines = [f"n={r['n']}: {r['compositions']} gcd-1 compositions, {len(r['failures'])} failures"
             for r in rows]
    lines += [f"FAIL {f}" for f in bad[:20]]
    lines.append("all parity-unimodal" if not bad else f"{len(bad)} failures")
    _emit(args, payload, lines)
    return EXIT_OK if not bad else EXIT_FALSE


def _csp_inputs(args) -> tuple[Permutation, SubgroupSpec]:
    if args.counterexample:
        return counterexample_pair()
    if not args.tau:
        raise UsageError("--tau is required (or use --counterexample)")
    n = args.n
    if n is None:
        texts = [args.tau] + list(args.gen)
        try:
            n = _degree_of(texts)
        except ValueError:
            raise UsageError(f"cannot parse permutations {texts!r}") from None
        if args.young:
            n = max(n, sum(parse_composition(args.young)))
    tau = parse_permutation(args.tau, n)
    return tau, _subgroup_from_args(args, n)


def cmd_csp_check(args) -> int:
    tau, h = _csp_inputs(args)
    space = CosetSpace(h, budget=args.budget)
    report = check_technical_csp(tau, h, space=DoubleCosetSpace(space))
    payload = report.to_json()
    cond = report.conditions
    lines = [f"tau = {tau}, H = {h!r} (|H| = {h.order}), m = {report.m}",
             f"Y(q) = {report.polynomial}",
             f"conditions hold: {cond['holds']}"]
    lines += [f"  violated: avoid {v['condition']} -> cycle type {tuple(v['cycle_type'])}"
              for v in cond["violations"]]
    lines += [f"  b={r.b}: |Fix| = {r.fix}, Y(zeta^b) = {r.value}" for r in report.rows]
    lines.append(f"CSP verdict: {report.verdict}")
    _emit(args, payload, lines)
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_molien(args) -> int:
    n = args.n
    if not args.young and n is None and args.gen:
        n = _degree_of(args.gen)
    h = _subgroup_from_args(args, n)
    series = molien_series(h)
    x = coset_poly_X(h)
    payload = {"subgroup": repr(h), "order": h.order,
               "molien_numerator": str(series.numerator), "scale": series.scale,
               "invariant_dimensions": series.coefficients(args.terms), "X": str(x)}
    lines = [f"H = {h!r}, |H| = {h.order}",
             f"Hilb(C[x]^H) = ({series.numerator}) / ({series.scale} * prod_(i<={h.n}) (1-q^i))",
             f"invariant dimensions: {series.coefficients(args.terms)}",
             f"X(q) = {x}"]
    ok = True
    try:
        y = y_poly(h)
    except NonPolynomialQuotient:
        payload["Y"] = None
        lines.append("Y(q): C does not act freely on S_n/H, so X(q)/[n]_q is not a polynomial")
        if args.m:
            raise UsageError("--m needs a free rotation action")
    else:
        payload["Y"] = str(y)
        lines.append(f"Y(q) = {y}")
        if args.m:
            pred = y_zeta_prediction(h, args.m)
            direct = eval_at_root_of_unity(y, args.m, 1)
            ok = pred == direct
            payload["root_of_unity"] = {"m": args.m, "prediction": pred.to_json(),
                                        "direct": direct.to_json(), "equal": ok}
            lines.append(f"Y(zeta_{args.m}) from fixed points = {pred}; direct = {direct}; equal: {ok}")
    payload["verdict"] = ok
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_nc_check(args) -> int:
    bundle = check_nc_secondary(args.n, args.k)
    nar = bundle.narayana
    lines = [
        f"noncrossing partitions of [{args.n}] with {args.k} blocks: {nar['enumerated']}",
        f"X_k(q) = {bundle.primary.polynomial}; Y_k(q) = {bundle.y_polynomial}",
        f"(i)   rotation CSP: {bundle.primary.verdict}",
        f"(ii)  |Fix_X(tau_0)| = {bundle.ding[0]}, X_k(-1) = {bundle.ding[1]}",
        f"(iii) |Fix_Y(tau_0)| = {bundle.fixed_equal[0]}",
        f"(iv)  reflection CSP on orbits: {bundle.secondary.verdict}",
        f"Narayana: enumerated {nar['enumerated']}, q-formula {nar['q_formula_at_1']}, "
        f"C(n,k)C(n,k+1)/n = {nar['display_binom_k_k_plus_1']}",
    ]
    _emit(args, bundle.to_json(), lines)
    return EXIT_OK if bundle.verdict else EXIT_FALSE


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for sweeps")
    common.add_argument("--budget", type=int, default=2 * 10 ** 6, metavar="N",
                        help="largest S_n-set to enumerate")
    common.add_argument("--bound", type=int, default=None, metavar="N", help="sweep bound")

    parser = argparse.ArgumentParser(prog="cycsieve", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("necklaces", parents=[common], help="necklaces and bracelets of a content")
    p.add_argument("alpha", help="composition such as 3,4")
    p.set_defaults(func=cmd_necklaces)

    p = sub.add_parser("schroder", parents=[common], help="rational q-Schroder sweep (default bound 10)")
    p.add_argument("-v", "--verbose", action="store_true", help="print every polynomial")
    p.set_defaults(func=cmd_schroder)

    def group_args(p):
        p.add_argument("--n", type=int, default=None, help="degree (inferred when omitted)")
        p.add_argument("--gen", action="append", default=[], help="generator of H in cycle notation")
        p.add_argument("--young", default=None, help="use the Young subgroup of this composition")

    p = sub.add_parser("csp-check", parents=[common], help="sieving for tau acting on C\\S_n/H")
    p.add_argument("--tau", default=None, help="normaliser element in cycle notation")
    p.add_argument("--counterexample", action="store_true",
                   help="the degree-10 pair for which sieving fails")
    group_args(p)
    p.set_defaults(func=cmd_csp_check)

    p = sub.add_parser("parity-sweep", parents=[common],
                       help="parity-unimodality of C(alpha; q) for all compositions (default n <= 14)")
    p.add_argument("--schroder", action="store_true",
                   help="sweep the three-part family C(k, a-k, b-k) instead (default a,b <= 30)")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_parity_sweep)

    p = sub.add_parser("molien", parents=[common], help="Molien series, X(q), Y(q) of a subgroup")
    group_args(p)
    p.add_argument("--m", type=int, default=None, help="also compare Y at a primitive m-th root")
    p.add_argument("--terms", type=int, default=10, help="invariant dimensions to list")
    p.set_defaults(func=cmd_molien)

    p = sub.add_parser("nc-check", parents=[common], help="secondary sieving on noncrossing partitions")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_nc_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1 or args.budget < 1 or (args.bound is not None and args.bound < 0):
        print("error: --jobs and --budget must be positive, --bound nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except FormulaMismatch as exc:
        print(f"verdict false: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (UsageError, CycsieveError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
