"""Command-line surface: family generation, transforms, identity
verification suites and the persistent resumable conjecture sweep.

Exit codes: 0 all checks pass, 1 a mathematical check failed (a
potential counterexample - the certificate is serialized in full),
2 usage error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import math
import os
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import eulerxform, families, hills, rootloc, weyl
from .exactpoly import Poly

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2

LOG_DIR_ENV = "HILLPOLY_LOG_DIR"


class UsageError(Exception):
    pass


class MathFailure(Exception):
    pass


# ---------------------------------------------------------------------
# Output rendering
# ---------------------------------------------------------------------

def poly_table_str(p: Poly, var: str) -> str:
    """Human form, e.g. '1 + 6t + 6t^2 + t^3'; parenthesized fractions."""
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            if mag == 1:
                coeff_txt = ""
            elif mag.denominator == 1:
                coeff_txt = str(mag.numerator)
            else:
                coeff_txt = f"({mag})"
            body = coeff_txt + (var if k == 1 else f"{var}^{k}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def poly_json_dict(p: Poly, var: str) -> dict:
    return {"var": var, "coeffs": p.to_pairs()}


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def emit_poly(p: Poly, var: str, fmt: str, out) -> None:
    if fmt == "table":
        print(poly_table_str(p, var), file=out)
    elif fmt == "json":
        print(json.dumps(poly_json_dict(p, var)), file=out)
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["degree", "coefficient"])
        for k, c in enumerate(p.coeffs):
            writer.writerow([k, _frac_str(c)])
    else:
        raise UsageError(f"unknown format: {fmt}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def parse_coeffs(text: str) -> Poly:
    try:
        return Poly([Fraction(part) for part in text.split(",") if part.strip()])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coefficient list: {text!r}") from exc


# ---------------------------------------------------------------------
# family
# ---------------------------------------------------------------------

def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"family {args.name!r} requires --{name}")


def cmd_family(args) -> int:
    name = args.name
    if name == "jacobi":
        _require(args, "n", "alpha", "beta")
        poly, var = families.jacobi(args.n, args.alpha, args.beta), "x"
    elif name == "hahn":
        _require(args, "m", "alpha", "beta", "N")
        poly, var = families.hahn_explicit(args.m, args.alpha, args.beta, args.N), "n"
    elif name == "f":
        _require(args, "m")
        poly, var = families.f_poly(args.m), "t"
    elif name == "g":
        _require(args, "m")
        poly, var = families.g_poly(args.m), "t"
    elif name == "h":
        _require(args, "m")
        poly, var = families.h_poly(args.m), "s"
    elif name == "q":
        _require(args, "m")
        poly, var = families.q_poly(args.m), "s"
    elif name == "eulerian":
        _require(args, "k")
        _, poly = families.eulerian_family(args.k)
        var = "t"
    else:
        raise UsageError(f"unknown family: {name}")
    emit_poly(poly, var, args.format, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------
# euler / inverse-euler
# ---------------------------------------------------------------------

def cmd_euler(args) -> int:
    Q = parse_coeffs(args.coeffs)
    try:
        pair = eulerxform.euler_transform(Q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(
            json.dumps(
                {
                    "Q": poly_json_dict(pair.Q, "s"),
                    "P": poly_json_dict(pair.P, "t"),
                    "d": pair.d,
                    "e": pair.e,
                    "f": pair.f,
                }
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["d", "e", "f", "P"])
        writer.writerow([pair.d, pair.e, pair.f, ";".join(_frac_str(c) for c in pair.P.coeffs)])
    else:
        print(f"Q = {poly_table_str(pair.Q, 's')}")
        print(f"P = {poly_table_str(pair.P, 't')}")
        print(f"d = {pair.d}, e = {pair.e}, defect = {pair.f}")
    return EXIT_OK


def cmd_inverse_euler(args) -> int:
    P = parse_coeffs(args.coeffs)
    try:
        R = eulerxform.inverse_euler(P)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit_poly(R, "s", args.format, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------
# hill
# ---------------------------------------------------------------------

def _hill_report(hill: hills.Hill, with_diffeq: bool = False) -> dict:
    h, h_tilde = hills.hill_poly(hill)
    Q = hills.hill_q(hill)
    P = hills.hill_dual(hill)
    cert = rootloc.critical_line_check(Q, 0)
    neg = rootloc.negative_simple_roots_check(P)
    report = {
        "hill": str(hill),
        "volume": hill.volume,
        "width": hill.width,
        "height": hill.height,
        "h": h.to_pairs(),
        "h_tilde": h_tilde.to_pairs(),
        "Q": Q.to_pairs(),
        "P": P.to_pairs(),
        "deg_Q": Q.degree,
        "deg_P": P.degree,
        "thm44": cert.to_json_dict(),
        "conj47": {"verdict": "pass" if neg.passed else "fail", "witness": neg.witness},
    }
    if with_diffeq:
        report["diffeq_order_found"] = _diffeq_order(Q, hill.height)
    return report


def _diffeq_order(Q: Poly, h_max: int) -> Optional[int]:
    for order in range(1, h_max + 1):
        result = rootloc.diffeq_search(Q, order)
        if result.found and not result.degenerate:
            return order
    return None


def cmd_hill(args) -> int:
    try:
        hill = hills.parse_hill_spec(args.spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = _hill_report(hill, with_diffeq=args.diffeq)
    failed = report["thm44"]["verdict"] != rootloc.ON_LINE or report["conj47"]["verdict"] != "pass"
    if args.format == "json":
        print(json.dumps(report))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(sorted(report))
        writer.writerow([json.dumps(report[k]) if isinstance(report[k], (dict, list)) else report[k] for k in sorted(report)])
    else:
        print(f"hill    {report['hill']}  (volume {report['volume']}, width {report['width']}, height {report['height']})")
        print(f"h~      {poly_table_str(Poly.from_pairs(report['h_tilde']), 's')}")
        print(f"Q       {poly_table_str(Poly.from_pairs(report['Q']), 's')}")
        print(f"P       {poly_table_str(Poly.from_pairs(report['P']), 't')}")
        print(f"line    {report['thm44']['verdict']}")
        print(f"roots   {report['conj47']['verdict']}")
        if args.diffeq:
            print(f"diffeq  order {report.get('diffeq_order_found')}")
    return EXIT_MATH_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------
# weyl
# ---------------------------------------------------------------------

def cmd_weyl(args) -> int:
    if args.ell < 2:
        raise UsageError("--ell must be at least 2")
    poly = weyl.weyl_dim_poly(args.ell)
    m = args.ell - 2
    matches = weyl.verify_hirzebruch(m).ok
    if args.format == "json":
        print(
            json.dumps(
                {
                    "ell": args.ell,
                    "dim_poly": poly_json_dict(poly, "n"),
                    "matches_h": matches,
                    "plucker_dim": weyl.plucker_dim(m),
                }
            )
        )
    else:
        print(f"dim L(n*w2) for rank {args.ell}: {poly_table_str(poly, 'n')}")
        print(f"equals h_{m}: {matches}; ambient projective dimension {weyl.plucker_dim(m)}")
    return EXIT_OK if matches else EXIT_MATH_FAIL


# ---------------------------------------------------------------------
# diffeq
# ---------------------------------------------------------------------

def cmd_diffeq(args) -> int:
    if args.coeffs:
        Q = parse_coeffs(args.coeffs)
        default_order = max(1, args.order or 1)
        label = args.coeffs
    else:
        try:
            hill = hills.parse_hill_spec(args.spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        Q = hills.hill_q(hill)
        default_order = hill.height
        label = str(hill)
    order = args.order or default_order
    if order < 1:
        raise UsageError("--order must be at least 1")
    result = rootloc.diffeq_search(Q, order)
    if args.format == "json":
        payload = {
            "input": label,
            "order": order,
            "found": result.found,
            "nullity": result.nullity,
            "degenerate": result.degenerate,
            "solution": [poly_json_dict(p, "s") for p in result.solution] if result.found else None,
        }
        print(json.dumps(payload))
    else:
        print(f"order {order}: {'solution found' if result.found else 'none'} "
              f"(null-space dimension {result.nullity}"
              + (", degenerate p_0 = 0" if result.degenerate else "") + ")")
        if result.found:
            for i, p in enumerate(result.solution):
                print(f"  p_{i} = {poly_table_str(p, 's')}")
    return EXIT_OK


# ---------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------

def _check_popoviciu(rng: int) -> eulerxform.CheckResult:
    for m in range(rng + 1):
        res = eulerxform.popoviciu_check(families.q_poly(m), order=rng + 10)
        if not res.ok:
            return eulerxform.CheckResult(False, f"Q_{m}: {res.witness}")
    for hill in hills.enumerate_hills(min(rng, 8)):
        res = eulerxform.popoviciu_check(hills.hill_q(hill), order=rng + 10)
        if not res.ok:
            return eulerxform.CheckResult(False, f"hill {hill}: {res.witness}")
    return eulerxform.CheckResult(True)


def _check_toy_hecke(rng: int) -> eulerxform.CheckResult:
    for m in range(rng + 1):
        res = eulerxform.hecke_symmetry_check(families.q_poly(m))
        if not res.symmetric or res.epsilon != 1:
            return eulerxform.CheckResult(False, f"Q_{m} not symmetric with sign +1")
    for hill in hills.enumerate_hills(min(rng, 8)):
        res = eulerxform.hecke_symmetry_check(hills.hill_q(hill))
        if not res.symmetric:
            return eulerxform.CheckResult(False, f"hill {hill} not symmetric")
    return eulerxform.CheckResult(True)


def _check_hirzebruch(rng: int) -> eulerxform.CheckResult:
    for m in range(rng + 1):
        res = weyl.verify_hirzebruch(m)
        if not res.ok:
            return res
    return eulerxform.CheckResult(True)


def _check_h_integrality(rng: int) -> eulerxform.CheckResult:
    for m in range(rng + 1):
        res = weyl.integrality_scan(m, -50, 50)
        if not res.ok:
            return res
    return eulerxform.CheckResult(True)


def _check_hill_critical_line(rng: int) -> eulerxform.CheckResult:
    for hill in hills.enumerate_hills(min(rng, 10)):
        cert = rootloc.critical_line_check(hills.hill_q(hill), 0)
        if not cert.on_line:
            return eulerxform.CheckResult(False, f"hill {hill}: {cert.witness}")
    return eulerxform.CheckResult(True)


def _check_hill_dual_roots(rng: int) -> eulerxform.CheckResult:
    for hill in hills.enumerate_hills(min(rng, 10)):
        res = rootloc.negative_simple_roots_check(hills.hill_dual(hill))
        if not res.passed:
            return eulerxform.CheckResult(False, f"hill {hill}: {res.witness}")
    return eulerxform.CheckResult(True)


def _check_eulerian_critical_line(rng: int) -> eulerxform.CheckResult:
    for k in range(min(rng, 12) + 1):
        Q, _ = families.eulerian_family(k)
        cert = rootloc.critical_line_check(Q, 0)
        if not cert.on_line:
            return eulerxform.CheckResult(False, f"k={k}: {cert.witness}")
        if cert.roots_on_line != k:
            return eulerxform.CheckResult(
                False, f"k={k}: counted {cert.roots_on_line} roots, expected {k}"
            )
    return eulerxform.CheckResult(True)


EXTRA_CHECKS: Dict[str, Tuple[str, Callable[[int], eulerxform.CheckResult]]] = {
    "popoviciu": ("reciprocity expansion on the Q families", _check_popoviciu),
    "toy-hecke": ("symmetry criterion on the Q families", _check_toy_hecke),
    "hirzebruch": ("dimension polynomial equals h_m", _check_hirzebruch),
    "h-integrality": ("integrality and zero locus of h_m", _check_h_integrality),
    "hill-critical-line": ("hill Q roots on the critical line", _check_hill_critical_line),
    "hill-dual-roots": ("hill duals have simple negative roots", _check_hill_dual_roots),
    "eulerian-critical-line": ("width-one hills: line and root count", _check_eulerian_critical_line),
}


def verification_table() -> Dict[str, Tuple[str, Callable[[int], eulerxform.CheckResult]]]:
    table: Dict[str, Tuple[str, Callable[[int], eulerxform.CheckResult]]] = {}
    for name, check in families.IDENTITIES.items():
        table[name] = (check.summary, check.fn)
    table.update(EXTRA_CHECKS)
    return table


def cmd_verify(args) -> int:
    table = verification_table()
    if args.all:
        names = list(table)
    else:
        if not args.name:
            raise UsageError("give an identity name or --all")
        if args.name not in table:
            raise UsageError(f"unknown identity: {args.name}")
        names = [args.name]
    results = []
    all_ok = True
    for name in names:
        summary, fn = table[name]
        start = time.perf_counter()
        res = fn(args.range)
        elapsed = time.perf_counter() - start
        results.append({"name": name, "ok": res.ok, "witness": res.witness})
        all_ok = all_ok and res.ok
        if args.format == "table":
            status = "PASS" if res.ok else "FAIL"
            line = f"{status}  {name:34s} {summary}"
            if not res.ok:
                line += f"  [{res.witness}]"
            print(line + f"  ({elapsed:.2f}s)")
    if args.format == "json":
        print(json.dumps({"range": args.range, "all_ok": all_ok, "results": results}))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["name", "ok", "witness"])
        for r in results:
            writer.writerow([r["name"], r["ok"], r["witness"] or ""])
    elif args.format == "table":
        print(f"{'all checks passed' if all_ok else 'FAILURES PRESENT'} ({len(names)} checks)")
    return EXIT_OK if all_ok else EXIT_MATH_FAIL


# ---------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------

def sweep_record(index: int, mu: Tuple[int, ...], with_diffeq: bool) -> dict:
    """One fully certified record for the hill with the given entries."""
    start = time.perf_counter()
    hill = hills.Hill(mu)
    Q = hills.hill_q(hill)
    P = hills.hill_dual(hill)
    cert = rootloc.critical_line_check(Q, 0)
    neg = rootloc.negative_simple_roots_check(P)
    record = {
        "index": index,
        "hill": str(hill),
        "volume": hill.volume,
        "width": hill.width,
        "deg_Q": Q.degree,
        "deg_P": P.degree,
        "thm44_verdict": cert.verdict,
        "thm44_certificate": cert.to_json_dict(),
        "conj47_verdict": "pass" if neg.passed else "fail",
        "conj47_witness": neg.witness,
        "diffeq_order_found": _diffeq_order(Q, hill.height) if with_diffeq else None,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    return record


def _sweep_worker(task: Tuple[int, Tuple[int, ...], bool]) -> dict:
    index, mu, with_diffeq = task
    return sweep_record(index, mu, with_diffeq)


def _default_log_path(v_max: int) -> str:
    base = os.environ.get(LOG_DIR_ENV) or os.getcwd()
    return os.path.join(base, f"sweep-v{v_max}.ndjson")


def _load_resume_indices(path: str) -> Dict[int, str]:
    done: Dict[int, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                index = int(record["index"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise UsageError(
                    f"corrupt sweep log {path} at line {line_no}; refusing to overwrite"
                ) from exc
            done[index] = line
    return done


def _record_csv_row(record: dict) -> list:
    return [
        record["index"],
        record["hill"],
        record["volume"],
        record["width"],
        record["deg_Q"],
        record["deg_P"],
        record["thm44_verdict"],
        record["conj47_verdict"],
        record["diffeq_order_found"] if record["diffeq_order_found"] is not None else "",
        record["elapsed_ms"],
    ]


_SWEEP_CSV_HEADER = [
    "index", "hill", "volume", "width", "deg_Q", "deg_P",
    "thm44_verdict", "conj47_verdict", "diffeq_order_found", "elapsed_ms",
]


def cmd_sweep(args) -> int:
    if args.v_max < 1:
        raise UsageError("--v-max must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    log_path = args.log or _default_log_path(args.v_max)

    all_hills = list(hills.enumerate_hills(args.v_max))
    done: Dict[int, str] = {}
    if os.path.exists(log_path) and os.path.getsize(log_path) > 0:
        if not args.resume:
            raise UsageError(
                f"log {log_path} already exists; pass --resume to continue or choose another path"
            )
        done = _load_resume_indices(log_path)
    todo = [
        (i, hill.mu, args.diffeq) for i, hill in enumerate(all_hills) if i not in done
    ]

    start = time.perf_counter()
    new_records: List[dict] = []
    if args.jobs == 1 or not todo:
        for task in todo:
            new_records.append(_sweep_worker(task))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            # map preserves input order, so the writer emits records in
            # deterministic enumeration order regardless of completion order.
            new_records = list(pool.map(_sweep_worker, todo, chunksize=4))

    os.makedirs(os.path.dirname(log_path) or ".", exist_ok=True)
    with open(log_path, "a", encoding="utf-8") as fh:
        for record in new_records:
            fh.write(json.dumps(record) + "\n")

    records = dict(done)
    for record in new_records:
        records[record["index"]] = json.dumps(record)
    ordered = [json.loads(records[i]) for i in sorted(records)]

    failures = [
        r for r in ordered
        if r["thm44_verdict"] != rootloc.ON_LINE or r["conj47_verdict"] != "pass"
    ]
    max_degree = max((r["deg_Q"] for r in ordered), default=0)
    wall = time.perf_counter() - start

    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(_SWEEP_CSV_HEADER)
        for r in ordered:
            writer.writerow(_record_csv_row(r))
    elif args.format == "json":
        for r in ordered:
            print(json.dumps(r))
    else:
        for r in ordered:
            print(
                f"{r['index']:5d}  {r['hill']:20s} v={r['volume']:<3d} "
                f"thm44={r['thm44_verdict']:8s} conj47={r['conj47_verdict']}"
            )
    print(
        f"sweep: {len(ordered)} hills checked, {len(failures)} failures, "
        f"max deg Q = {max_degree}, wall time {wall:.2f}s",
        file=sys.stderr,
    )
    if failures:
        for r in failures:
            print(json.dumps(r), file=sys.stderr)
        return EXIT_MATH_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hillpoly",
        description="Exact calculus for generating-function dualities, "
        "orthogonal families and hill polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["json", "csv", "table"], default="table")

    p = sub.add_parser("family", help="emit a named polynomial family member")
    p.add_argument("name", choices=["jacobi", "hahn", "f", "g", "h", "q", "eulerian"])
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--alpha", type=parse_rational, default=None)
    p.add_argument("--beta", type=parse_rational, default=None)
    p.add_argument("--N", type=parse_rational, default=None)
    add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("euler", help="Euler transform of Q given by coefficients")
    p.add_argument("--coeffs", required=True, help="comma-separated rationals, ascending degree")
    add_format(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("inverse-euler", help="inverse Euler transform of P")
    p.add_argument("--coeffs", required=True, help="comma-separated rationals, ascending degree")
    add_format(p)
    p.set_defaults(func=cmd_inverse_euler)

    p = sub.add_parser("hill", help="polynomials and certificates for one hill")
    p.add_argument("spec", help="e.g. 1,2,2,1 or young:1,2+")
    p.add_argument("--diffeq", action="store_true", help="also search for a difference equation")
    add_format(p)
    p.set_defaults(func=cmd_hill)

    p = sub.add_parser("weyl", help="dimension polynomial for a type-A rank")
    p.add_argument("--ell", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("diffeq", help="search for an annihilating difference equation")
    p.add_argument("spec", nargs="?", help="hill spec, e.g. 1,2,1")
    p.add_argument("--coeffs", help="alternatively, Q by comma-separated coefficients")
    p.add_argument("--order", type=int, default=None, help="default: hill height")
    add_format(p)
    p.set_defaults(func=cmd_diffeq)

    p = sub.add_parser("verify", help="run one identity checker or the whole suite")
    p.add_argument("name", nargs="?", help="registered identity name")
    p.add_argument("--all", action="store_true")
    p.add_argument("--range", type=int, default=20)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive certified sweep over hills")
    p.add_argument("--v-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--log", default=None, help=f"NDJSON log path (default ${LOG_DIR_ENV} or cwd)")
    p.add_argument("--resume", action="store_true", help="skip indices already logged")
    p.add_argument("--diffeq", action="store_true", help="record first difference-equation order")
    add_format(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except families.UnknownIdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
