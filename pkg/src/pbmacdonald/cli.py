"""Command-line front end: ``pbmacdonald poly | naf | verify``.

Exit codes: 0 success, 1 violations found, 2 usage error, 3 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, hecke, special
from .errors import InexactDivision, MacdonaldError, NegativeQUnit
from .exactalg import XPolynomial
from .fillings import naf_with_stats, statistics, tableau_E
from .render import polynomial_to_latex, polynomial_to_text
from .sweep import CLAIMS, SweepConfig, bijection_sweep, run_item, run_sweep, threads_from_env
from .wordcomb import (
    composition,
    identity,
    inc,
    is_partition,
    left_action,
    longest,
    parse_list,
    permutation,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _shape(text: str) -> tuple:
    try:
        return composition(parse_list(text))
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from exc


def _perm(text: str) -> tuple:
    try:
        return permutation(parse_list(text))
    except ValueError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from exc


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- poly -------------------------------------------------------------------


def _e_term(method: str):
    return hecke.operator_E if method == "operators" else tableau_E


def compute_poly(kind: str, alpha: tuple, sigma: tuple | None, method: str) -> XPolynomial:
    E = _e_term(method)
    n = len(alpha)
    if kind == "E":
        return E(alpha, sigma or longest(n))
    if kind == "atom":
        return E(alpha, sigma or identity(n)).specialize_q_zero()
    if kind == "key":
        return E(alpha, longest(n)).specialize_q_zero()
    if kind == "asep":
        tau = sigma or special.sorting_permutation(inc(alpha), alpha)
        return E(inc(alpha), tau)
    if kind == "P":
        if not is_partition(alpha):
            raise UsageError(f"{alpha} is not a partition")
        base = inc(alpha)
        total = XPolynomial(n)
        for mu in special.distinct_rearrangements(alpha):
            total = total + E(base, special.sorting_permutation(base, mu))
        return total
    raise UsageError(f"unknown polynomial kind {kind!r}")


def cmd_poly(args) -> int:
    alpha = _shape(args.shape)
    sigma = _perm(args.basement) if args.basement else None
    if sigma is not None and len(sigma) != len(alpha):
        raise UsageError("shape and basement lengths differ")
    if args.kind == "asep" and sigma is not None:
        if left_action(sigma, inc(alpha)) != alpha:
            raise UsageError("asep basement must satisfy tau . inc(shape) = shape")
    methods = ["tableau", "operators"] if args.method == "both" else [args.method]
    results = {m: compute_poly(args.kind, alpha, sigma, m) for m in methods}
    poly = results[methods[0]]
    verdict = None
    if args.method == "both":
        verdict = "EQUAL" if results["tableau"] == results["operators"] else "MISMATCH"
    if args.format == "json":
        out = {"kind": args.kind, "shape": list(alpha), "basement": list(sigma) if sigma else None,
               "method": args.method, "polynomial": poly.to_json()}
        if verdict:
            out["verdict"] = verdict
        _emit(json.dumps(out))
    else:
        _emit(polynomial_to_latex(poly) if args.format == "latex" else polynomial_to_text(poly))
        if verdict:
            _emit(verdict)
    return EXIT_INTERNAL if verdict == "MISMATCH" else EXIT_OK


# -- naf --------------------------------------------------------------------


def _cell(v) -> str:
    return "." if v is None else str(v)


def cmd_naf(args) -> int:
    alpha = _shape(args.shape)
    sigma = _perm(args.basement) if args.basement else longest(len(alpha))
    beta = _shape(args.content) if args.content else None
    if len(sigma) != len(alpha) or (beta is not None and len(beta) != len(alpha)):
        raise UsageError("shape, basement and content lengths differ")
    found = naf_with_stats(alpha, sigma, beta)
    rows = []
    for k, (T, content, w) in enumerate(found, start=1):
        st = statistics(T)
        rows.append({"index": k, "filling": T.to_json(), "content": list(content),
                     "maj": st.maj, "inv": st.inv, "coinv": st.coinv, "wtqt": w})
    if args.format == "json":
        out = [dict(r, wtqt=r["wtqt"].to_json()) for r in rows]
        _emit(json.dumps({"shape": list(alpha), "basement": list(sigma), "count": len(rows), "fillings": out}))
    else:
        _emit(f"# {len(rows)} fillings")
        _emit("\t".join(["index", "rows", "content", "maj", "inv", "coinv", "wtqt"]))
        for r in rows:
            grid = "/".join(",".join(_cell(v) for v in row) for row in r["filling"]["rows"])
            _emit("\t".join([str(r["index"]), grid or "-", ",".join(map(str, r["content"])),
                             str(r["maj"]), str(r["inv"]), str(r["coinv"]), str(r["wtqt"])]))
    if args.figure:
        from .plotting import fillings_figure

        caps = [f"#{r['index']} maj {r['maj']} coinv {r['coinv']}" for r in rows]
        fillings_figure([T for T, _, _ in found], args.figure, caps)
    return EXIT_OK


# -- verify -----------------------------------------------------------------

_NEEDS_I = {"symmetry", "ale19", "balance", "normalization", "support"}


def _parse_sweep(tokens) -> SweepConfig:
    opts = {"n_max": 3, "part_max": 2}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in opts:
            raise UsageError(f"sweep option must be n_max=N or part_max=N, got {tok!r}")
        try:
            opts[key] = int(val)
        except ValueError as exc:
            raise UsageError(f"sweep option {tok!r} is not an integer") from exc
    try:
        return SweepConfig(**opts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _single_report(claim: str, args):
    alpha = _shape(args.shape)
    if claim in _NEEDS_I:
        sigma = _perm(args.basement) if args.basement else identity(len(alpha))
        if len(sigma) != len(alpha):
            raise UsageError("shape and basement lengths differ")
        if args.i is not None:
            indices = [args.i]
        else:
            indices = [i for i in range(1, len(alpha)) if alpha[i - 1] == alpha[i]]
        total = bijection.VerificationReport(claim, {"shape": list(alpha), "basement": list(sigma), "i": indices})
        for i in indices:
            total.merge(run_item(claim, (alpha, sigma, i)))
        return total
    if claim == "route-equivalence":
        sigma = _perm(args.basement) if args.basement else longest(len(alpha))
        if len(sigma) != len(alpha):
            raise UsageError("shape and basement lengths differ")
        return run_item(claim, (alpha, sigma))
    if claim == "symmetricP" and not is_partition(alpha):
        raise UsageError(f"{alpha} is not a partition")
    return run_item(claim, (alpha,))


def cmd_verify(args) -> int:
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    reports = {}
    if args.sweep is not None:
        cfg = _parse_sweep(args.sweep)
        cfg.parallelism = threads_from_env(args.jobs)
        for claim in claims:
            reports[claim] = run_sweep(claim, cfg)
        if args.row_lemmas:
            reports["row-lemmas"] = bijection_sweep(cfg)["row-lemmas"]
    else:
        if not args.shape:
            raise UsageError("verify needs --shape or --sweep")
        if args.claim == "all":
            raise UsageError("'all' is only available with --sweep")
        for claim in claims:
            reports[claim] = _single_report(claim, args)
    for claim, rep in reports.items():
        status = "PASS" if rep.passed else "FAIL"
        _emit(f"{claim}\tpairs_checked={rep.pairs_checked}\tviolations={len(rep.violations)}\t{status}")
        if claim == "eigen" and args.sweep is None:
            _emit("eigenvalues\t" + ", ".join(rep.notes["eigenvalues"]))
        for v in rep.violations[:5]:
            _emit("witness\t" + json.dumps(v))
    payload = [rep.to_json() for rep in reports.values()]
    doc = payload[0] if len(payload) == 1 else payload
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    if args.figure:
        from .plotting import sweep_figure

        sweep_figure(reports, args.figure)
    return EXIT_OK if all(r.passed for r in reports.values()) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pbmacdonald", description="Permuted-basement Macdonald polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="compute a polynomial")
    poly.add_argument("kind", choices=["E", "atom", "key", "asep", "P"])
    poly.add_argument("--shape", required=True)
    poly.add_argument("--basement")
    poly.add_argument("--method", choices=["tableau", "operators", "both"], default="tableau")
    poly.add_argument("--format", choices=["text", "json", "latex"], default="text")
    poly.set_defaults(func=cmd_poly)

    naf = sub.add_parser("naf", help="list non-attacking fillings")
    naf.add_argument("--shape", required=True)
    naf.add_argument("--basement")
    naf.add_argument("--content")
    naf.add_argument("--format", choices=["text", "json"], default="text")
    naf.add_argument("--figure", help="write skyline drawings to this image file")
    naf.set_defaults(func=cmd_naf)

    ver = sub.add_parser("verify", help="check a claim on one instance or a sweep")
    ver.add_argument("claim", choices=list(CLAIMS) + ["all"])
    ver.add_argument("--shape")
    ver.add_argument("--basement")
    ver.add_argument("--i", type=int)
    ver.add_argument("--sweep", nargs="*", metavar="KEY=VALUE")
    ver.add_argument("--row-lemmas", action="store_true", help="with --sweep, also check the row-local identities")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes (MACDONALD_THREADS overrides)")
    ver.add_argument("--output", help="write the JSON report here")
    ver.add_argument("--figure", help="write a summary bar chart here")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InexactDivision, NegativeQUnit) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except MacdonaldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
