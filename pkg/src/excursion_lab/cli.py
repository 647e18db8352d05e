"""``excursion-lab`` command line.

Exit status: 0 on success, 1 when a check ran and failed, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from . import bounded, oracle, platypus, schur
from .ring import PolyParseError, bivariate_to_json, parse_bivariate
from .stepset import StepSet, StepSetError, normalize_steps, parse_stepset, require_primitive

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _fmt(q) -> str:
    return str(Fraction(q))


def _steps(args) -> StepSet:
    S = parse_stepset(args.steps)
    if args.normalize:
        return normalize_steps(S)
    return require_primitive(S)


def _emit(args, text_lines: List[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _series_text(coeffs, order: int) -> str:
    from .ring import QQ, RingPoly

    body = RingPoly(QQ, coeffs).render("t")
    return f"{body} + O(t^{order + 1})"


# -- commands --------------------------------------------------------------


def cmd_annihilator(args) -> int:
    S = _steps(args)
    D = platypus.annihilator(S)
    _emit(args, [D.render()], {
        "steps": S.render(), "a": S.a, "b": S.b, "d": S.d, "D": bivariate_to_json(D),
    })
    return EXIT_OK


def cmd_series(args) -> int:
    S = _steps(args)
    if args.bounded is None:
        coeffs = list(oracle.count_excursions(S, args.order).coefficients)
        kind = "excursions"
    else:
        coeffs = list(bounded.bounded_series(S, args.bounded, args.order).coeffs)
        kind = f"excursions of height <= {args.bounded}"
    _emit(args, [_series_text(coeffs, args.order)], {
        "steps": S.render(), "kind": kind, "order": args.order,
        "coefficients": [_fmt(c) for c in coeffs],
    })
    return EXIT_OK


def cmd_bounded(args) -> int:
    S = _steps(args)
    k, order = args.height, args.order
    Fs = bounded.f_polynomials(S, k + 1)
    series = bounded.bounded_series(S, k, order)
    counted = oracle.count_bounded(S, k, order)
    match = tuple(series.coeffs) == counted.coefficients
    _emit(args, [
        f"F_{k} = {Fs[k].render()}",
        f"F_{k + 1} = {Fs[k + 1].render()}",
        f"E^({k}) = {series.render('t')}",
        f"oracle: {'match' if match else 'MISMATCH'}",
    ], {
        "steps": S.render(), "height": k, "order": order,
        "F_k": [[e, _fmt(c)] for e, c in Fs[k].items()],
        "F_k_plus_1": [[e, _fmt(c)] for e, c in Fs[k + 1].items()],
        "coefficients": [_fmt(c) for c in series.coeffs],
        "oracle_match": match,
    })
    return EXIT_OK if match else EXIT_FAILED


def cmd_recurrence(args) -> int:
    S = _steps(args)
    gf = bounded.rational_gf(S)
    lines = [
        f"N(t,z) = {gf.numerator.render()}",
        f"D(t,z) = {gf.denominator.render()}",
        f"delta = {gf.delta}",
    ]
    lines += [f"a_{i} = {c.render()}" for i, c in enumerate(gf.recurrence_coefficients())]
    payload = {
        "steps": S.render(), "delta": gf.delta,
        "N": bivariate_to_json(gf.numerator), "D": bivariate_to_json(gf.denominator),
    }
    status = EXIT_OK
    if args.kmax is not None:
        if args.kmax <= gf.delta:
            raise InputError(f"--kmax must exceed delta = {gf.delta}")
        ok = bounded.check_recurrence(S, args.kmax, gf.denominator)
        lines.append(f"recurrence holds for {gf.delta} < k <= {args.kmax}: {'yes' if ok else 'NO'}")
        payload["kmax"] = args.kmax
        payload["recurrence_holds"] = ok
        status = EXIT_OK if ok else EXIT_FAILED
    _emit(args, lines, payload)
    return status


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def cmd_plethysm(args) -> int:
    restrict = _int_list(args.restrict) if args.restrict is not None else None
    exp = platypus.plethysm_elementary(args.a, args.n, restrict)
    _emit(args, [f"Q(z) = {exp.render()}"], exp.to_json())
    return EXIT_OK


def cmd_schur_gf(args) -> int:
    try:
        vals = [Fraction(x) for x in args.vars.replace(" ", "").split(",") if x]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed --vars {args.vars!r}") from None
    alphabet = schur.NumericAlphabet(tuple(vals))
    P, Q = schur.rect_schur_gf(alphabet, args.a)
    _emit(args, [f"P(z) = {P.render()}", f"Q(z) = {Q.render()}"], {
        "vars": [_fmt(v) for v in alphabet.values], "a": args.a,
        "P": [_fmt(c) for c in P.coeffs], "Q": [_fmt(c) for c in Q.coeffs],
    })
    return EXIT_OK


def _verify_checks(S: StepSet, order: int, kmax: int) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    cache = {}

    def D():
        if "D" not in cache:
            cache["D"] = platypus.annihilator(S)
        return cache["D"]

    def E():
        if "E" not in cache:
            cache["E"] = oracle.count_excursions(S, order)
        return cache["E"]

    def Fs():
        top = max(kmax, S.d + S.a + S.b, 8)
        if "F" not in cache:
            cache["F"] = bounded.f_polynomials(S, top)
        return cache["F"]

    def annihilation():
        ok = oracle.verify_annihilation(D(), E())
        return ok, f"D(t,E) = O(t^{order + 1}), deg_z D = {D().degree}"

    def numerator():
        try:
            N = bounded.numerator(S, D(), Fs())
        except bounded.RecurrenceError as exc:
            return False, str(exc)
        report = oracle.verify_numerator_nonzero(N, E())
        return report.certified, f"N(t,E): {report.describe()}"

    def recurrence():
        ok = bounded.check_recurrence(S, kmax, D(), Fs())
        return ok, f"{S.delta} < k <= {kmax}"

    def bounded_vs_oracle():
        bad = []
        for k in range(0, 7):
            lhs = bounded.bounded_series(S, k, order).coeffs
            if tuple(lhs) != oracle.count_bounded(S, k, order).coefficients:
                bad.append(k)
        return not bad, "k <= 6" if not bad else f"mismatch at k = {bad}"

    def jacobi_trudi():
        bad = [k for k in range(0, 9) if schur.f_via_jacobi_trudi(S, k) != Fs()[k]]
        return not bad, "k <= 8" if not bad else f"mismatch at k = {bad}"

    return [
        ("annihilation", annihilation),
        ("numerator", numerator),
        ("recurrence", recurrence),
        ("bounded-vs-oracle", bounded_vs_oracle),
        ("jacobi-trudi", jacobi_trudi),
    ]


def cmd_verify(args) -> int:
    S = _steps(args)
    kmax = args.kmax if args.kmax is not None else S.d + S.a + S.b
    if kmax <= S.delta:
        raise InputError(f"--kmax must exceed delta = {S.delta}")
    results = []
    for name, check in _verify_checks(S, args.order, kmax):
        start = time.perf_counter()
        ok, detail = check()
        entry = {"name": name, "passed": bool(ok), "detail": detail}
        if args.timings:
            entry["seconds"] = round(time.perf_counter() - start, 6)
        results.append(entry)
    passed = all(r["passed"] for r in results)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}: {r['detail']}"
             + (f" [{r['seconds']:.3f}s]" if "seconds" in r else "") for r in results]
    lines.append("all checks passed" if passed else "some checks FAILED")
    _emit(args, lines, {
        "steps": S.render(), "order": args.order, "kmax": kmax,
        "checks": results, "passed": passed,
    })
    return EXIT_OK if passed else EXIT_FAILED


def cmd_divides(args) -> int:
    S = _steps(args)
    D = platypus.annihilator(S)
    quotient = D
    for text in args.factor:
        factor = parse_bivariate(text)
        q = bounded.exact_quotient(quotient, factor)
        if q is None:
            _emit(args, [f"not divisible by {factor.render()}"], {
                "steps": S.render(), "divisible": False, "failed_factor": factor.render(),
            })
            return EXIT_FAILED
        quotient = q
    _emit(args, [f"divisible: yes", f"quotient = {quotient.render()}"], {
        "steps": S.render(), "divisible": True, "quotient": bivariate_to_json(quotient),
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--normalize", action="store_true",
                        help="divide the steps by their gcd instead of rejecting them")

    parser = _Parser(prog="excursion-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def steps_arg(p):
        p.add_argument("--steps", required=True, help='step set, e.g. "1:1,-1:1"')

    p = sub.add_parser("annihilator", parents=[common], help="polynomial D(t,z) with D(t,E)=0")
    steps_arg(p)
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("series", parents=[common], help="excursion series E(t)")
    steps_arg(p)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--bounded", type=int, metavar="K", help="restrict to height <= K")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bounded", parents=[common], help="F_k, F_{k+1} and E^(k)")
    steps_arg(p)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=cmd_bounded)

    p = sub.add_parser("recurrence", parents=[common], help="N(t,z), D(t,z) and the recurrence for F_k")
    steps_arg(p)
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("plethysm", parents=[common], help="e_k[e_a] in the elementary basis")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restrict", help='keep only these e_i, e.g. "2,5"')
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("schur-gf", parents=[common], help="sum_k s_{k^a} z^k = P/Q for numeric variables")
    p.add_argument("--vars", required=True, help='e.g. "2,3,5/7,-1"')
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=cmd_schur_gf)

    p = sub.add_parser("verify", parents=[common], help="run every consistency check on one step set")
    steps_arg(p)
    p.add_argument("--order", type=int, default=15)
    p.add_argument("--kmax", type=int)
    p.add_argument("--timings", action="store_true", help="report per-check wall time")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("divides", parents=[common], help="exact division of D(t,z) by factors")
    steps_arg(p)
    p.add_argument("--factor", action="append", required=True,
                   help='candidate factor, e.g. "1 + t^2*z"; repeat to divide successively')
    p.set_defaults(func=cmd_divides)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    for name in ("order", "height", "kmax", "bounded"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            print(f"error: --{name} must be non-negative", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, StepSetError, PolyParseError, platypus.PlatypusError,
            schur.AlphabetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
