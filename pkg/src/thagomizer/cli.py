"""``thag``: compute the thagomizer and cycle polynomials and run the verification suites."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Callable

from thagomizer import closed_forms, intpoly, lattice, model, oracle, positivity
from thagomizer.bi_ring import (
    GradedBiSchur,
    dimension_poly,
    is_palindromic,
    render_latex,
    render_text,
)
from thagomizer.schur import SchurPoly

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

DEFAULT_MAX_N = 10
MAX_CYCLE_K = oracle.MAX_CYCLE_K
MAX_LATTICE_N = 5


class UsageError(Exception):
    pass


def max_n_guard() -> int:
    """Largest ``n`` accepted for the thagomizer family; ``THAG_MAX_N`` overrides it."""
    raw = os.environ.get("THAG_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"THAG_MAX_N must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("THAG_MAX_N must be non-negative")
    return value


# family name -> (closed form, oracle, lower bound, uses the cycle guard)
FAMILIES: dict[str, tuple[Callable, Callable, int, bool]] = {
    "p-thag": (lambda n: closed_forms.p_thagomizer(n), lambda n: oracle.p_thagomizer_oracle(n), 0, False),
    "q-thag": (lambda n: closed_forms.q_thagomizer(n), lambda n: oracle.q_thagomizer_oracle(n), 0, False),
    "z-thag": (lambda n: closed_forms.z_thagomizer(n), lambda n: oracle.z_thagomizer_oracle(n), 0, False),
    "char-thag": (lambda n: closed_forms.char_poly_thagomizer(n), lambda n: oracle.char_poly_oracle(n), 0, False),
    "p-cycle": (lambda k: closed_forms.c_cycle(k), lambda k: oracle.p_cycle_oracle(k), 2, True),
    "z-cycle": (lambda k: closed_forms.z_cycle(k), lambda k: oracle.z_cycle_oracle(k), 2, True),
}


def _check_range(family: str, n: int, use_oracle: bool) -> None:
    _, _, lo, cyclic = FAMILIES[family]
    hi = MAX_CYCLE_K if cyclic else max_n_guard()
    if use_oracle:
        hi = min(hi, MAX_CYCLE_K if cyclic else oracle.MAX_ORACLE_N)
    if not lo <= n <= hi:
        raise UsageError(f"{family}: argument must lie in [{lo}, {hi}], got {n}")


def compute(family: str, n: int, use_oracle: bool = False) -> GradedBiSchur:
    _check_range(family, n, use_oracle)
    closed, orc, _, _ = FAMILIES[family]
    return (orc if use_oracle else closed)(n)


def render(g: GradedBiSchur, fmt: str) -> str:
    if fmt == "json":
        return g.to_json()
    if fmt == "latex":
        return render_latex(g)
    return render_text(g)


def render_dims(p: intpoly.IntPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(p))
    if fmt == "latex":
        return intpoly.render(p).replace("*", "")
    return intpoly.render(p)


# ---------------------------------------------------------------------------
# verification suites


def _diff(name: str, n: int, expected, got) -> dict:
    def enc(x):
        if isinstance(x, GradedBiSchur):
            return x.to_json_obj()
        if isinstance(x, SchurPoly):
            return {str(list(k)): c for k, c in sorted(x.terms.items())}
        return list(x) if isinstance(x, tuple) else x
    return {"suite": name, "n": n, "expected": enc(expected), "got": enc(got)}


def _suite_p(max_n):
    for n in range(min(max_n, oracle.MAX_ORACLE_N) + 1):
        a, b = closed_forms.p_thagomizer(n), oracle.p_thagomizer_oracle(n)
        if a != b:
            yield _diff("p-thag closed form vs oracle", n, b, a)


def _suite_cycle(max_n):
    for k in range(2, min(max_n + 2, MAX_CYCLE_K) + 1):
        a, b = closed_forms.c_cycle(k), oracle.p_cycle_oracle(k)
        if a != b:
            yield _diff("p-cycle closed form vs oracle", k, b, a)


def _suite_q(max_n):
    for n in range(min(max_n, oracle.MAX_ORACLE_N) + 1):
        a, b, c = closed_forms.q_thagomizer(n), closed_forms.q_from_p(n), oracle.q_thagomizer_oracle(n)
        if a != b:
            yield _diff("q-thag closed form vs alternating sum", n, b, a)
        if a != c:
            yield _diff("q-thag closed form vs oracle", n, c, a)


def _suite_lattice(max_n):
    for n in range(min(max_n, MAX_LATTICE_N) + 1):
        L = model.flats_of_thagomizer(n)
        p, z = lattice.kl_and_z(L)
        pairs = [
            ("P", closed_forms.p_thagomizer(n), p),
            ("Z", closed_forms.z_thagomizer(n), z),
            ("Q", closed_forms.q_thagomizer(n), lattice.inverse_kl(L)),
            ("chi", closed_forms.char_poly_thagomizer(n), lattice.characteristic_polynomial(L)),
        ]
        for label, g, want in pairs:
            got = dimension_poly(g)
            if got != want:
                yield _diff(f"dimensions of {label} vs lattice", n, want, got)


def _suite_multiplicity_free(max_n):
    for n in range(max_n + 1):
        for label, g in (("P", closed_forms.p_thagomizer(n)), ("Q", closed_forms.q_thagomizer(n))):
            ok, wit = positivity.is_multiplicity_free(g)
            if not ok:
                yield {"suite": f"{label} multiplicity-free", "n": n, "witness": list(wit)}


def _suite_palindromic(max_n):
    for n in range(max_n + 1):
        if not is_palindromic(closed_forms.z_thagomizer(n), n + 1):
            yield {"suite": "z-thag palindromic", "n": n}
    for k in range(2, min(max_n + 2, MAX_CYCLE_K) + 1):
        if not is_palindromic(closed_forms.z_cycle(k), k - 1):
            yield {"suite": "z-cycle palindromic", "n": k}


def _suite_char(max_n):
    for n in range(max_n + 1):
        want = intpoly.mul((-1, 1), intpoly.power((-2, 1), n))
        got = dimension_poly(closed_forms.char_poly_thagomizer(n))
        if got != want:
            yield _diff("char-thag dimensions vs (t-1)(t-2)^n", n, want, got)
        if n <= oracle.MAX_ORACLE_N and oracle.char_poly_oracle(n) != closed_forms.char_poly_thagomizer(n):
            yield _diff("char-thag closed form vs oracle", n, oracle.char_poly_oracle(n),
                        closed_forms.char_poly_thagomizer(n))


def _suite_type_a(max_n):
    for n in range(max_n + 1):
        a = dimension_poly(closed_forms.p_type_a(n))
        b = dimension_poly(closed_forms.p_thagomizer(n))
        if a != b:
            yield _diff("type-A dimensions vs p-thag", n, b, a)


def _suite_pieri(max_n):
    from thagomizer.partitions import rectangle_with_tail
    for k in range(1, 6):
        for m in range(max_n + 1):
            want = SchurPoly.s(rectangle_with_tail(2, k, m))
            got = closed_forms.pieri_alternating_lhs(m, k)
            if got != want:
                yield _diff(f"alternating Pieri sum, k={k}", m, want, got)


SUITES = [
    ("p-thag", _suite_p),
    ("p-cycle", _suite_cycle),
    ("q-thag", _suite_q),
    ("lattice dimensions", _suite_lattice),
    ("multiplicity-free", _suite_multiplicity_free),
    ("palindromic", _suite_palindromic),
    ("characteristic polynomial", _suite_char),
    ("type-A dimensions", _suite_type_a),
    ("alternating Pieri", _suite_pieri),
]


def run_suites(max_n: int) -> list[dict]:
    out = []
    for name, fn in SUITES:
        start = time.perf_counter()
        diffs = list(fn(max_n))
        out.append({"suite": name, "passed": not diffs, "seconds": round(time.perf_counter() - start, 3),
                    "diffs": diffs})
    return out


# ---------------------------------------------------------------------------
# argument parsing


def _global_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "latex"), default="text")
    common.add_argument("--oracle", action="store_true", help="use the recursion oracle instead of the closed form")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="thag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    helps = {
        "p-thag": "equivariant KL polynomial of the thagomizer",
        "q-thag": "equivariant inverse KL polynomial of the thagomizer",
        "z-thag": "equivariant Z-polynomial of the thagomizer",
        "char-thag": "equivariant characteristic polynomial of the thagomizer",
        "p-cycle": "equivariant KL polynomial of the k-cycle",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("n", type=int)

    p = sub.add_parser("dims", parents=[common], help="dimension polynomial of a family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", help="run verification suites")
    vsub = p.add_subparsers(dest="suite", required=True, metavar="SUITE")
    va = vsub.add_parser("all", parents=[common], help="closed forms against oracles")
    va.add_argument("--max-n", type=int, default=5)
    vs = vsub.add_parser("series", parents=[common], help="generating-series identities")
    vs.add_argument("--order", type=int, default=9)
    vs.add_argument("--no-type-two", action="store_true", help="drop the spine orbits (the check should fail)")

    p = sub.add_parser("ilc", parents=[common], help="induced log-concavity sweep")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--variant", choices=("p", "q", "P", "Q"), default="p")
    p.add_argument("--strong", action="store_true", help="check all i <= j instead of only i = j")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_verify(args) -> tuple[str, int]:
    if args.suite == "all":
        if not 0 <= args.max_n <= max_n_guard():
            raise UsageError(f"--max-n must lie in [0, {max_n_guard()}]")
        results = run_suites(args.max_n)
        ok = all(r["passed"] for r in results)
        if args.format == "json":
            text = json.dumps({"max_n": args.max_n, "passed": ok, "suites": results}, indent=2)
        else:
            lines = [f"{r['suite']}: {'PASS' if r['passed'] else 'FAIL'} ({r['seconds']:.2f}s)" for r in results]
            lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
            text = "\n".join(lines)
            if not ok:
                diffs = [d for r in results for d in r["diffs"]]
                print(json.dumps(diffs, indent=2), file=sys.stderr)
        return text, EXIT_OK if ok else EXIT_MISMATCH

    try:
        report = closed_forms.verify_series_identities(args.order, include_type_two=not args.no_type_two)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = json.dumps(report.to_json_obj(), indent=2)
    else:
        lines = [f"{c.name}: {'PASS' if c.passed else 'FAIL'}" for c in report.checks]
        lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
        text = "\n".join(lines)
        if not report.passed:
            print(json.dumps(report.to_json_obj()["checks"], indent=2), file=sys.stderr)
    return text, EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_ilc(args) -> tuple[str, int]:
    if not 0 <= args.max_n <= positivity.MAX_ILC_N:
        raise UsageError(f"--max-n must lie in [0, {positivity.MAX_ILC_N}]")
    report = positivity.verify_strong_ilc(args.max_n, args.variant, strong=args.strong)
    if args.format == "json":
        text = json.dumps(report.to_json_obj(), indent=2)
    else:
        lines = [f"variant {report.variant}, max_n {report.max_n}, {len(report.entries)} differences checked"]
        for e in report.failures:
            d, (lam, mu), c = e.witness
            lines.append(f"n={e.n} i={e.i} j={e.j}: coefficient {c} at t^{d} {list(lam)};{list(mu)}"
                         f" (oracle confirms: {e.confirmed_by_oracle})")
        lines.append(f"failures: {len(report.failures)}")
        text = "\n".join(lines)
    # a confirmed failure is a finding about the mathematics, an unconfirmed one a bug
    return text, EXIT_OK if not report.failures else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            text, code = _cmd_verify(args)
        elif args.command == "ilc":
            text, code = _cmd_ilc(args)
        elif args.command == "dims":
            g = compute(args.family, args.n, args.oracle)
            text, code = render_dims(dimension_poly(g), args.format), EXIT_OK
        else:
            text, code = render(compute(args.command, args.n, args.oracle), args.format), EXIT_OK
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"thag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
