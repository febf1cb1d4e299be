"""Command-line front end: ``sqfsparse <subcommand> ...``.

Reports are JSON on stdout (or ``--out``).  The exit status is 0 when every
check in the report passes, 1 when a check fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import harness
from .config import ConfigError, effective_config
from .ffield import FieldError, parse_field_spec
from .polyring import XPoly
from .polytext import PolyParseError, parse_tpoly, parse_xpoly
from .sparse import NotSquareFreeError, SparseSpec, TheoremViolation, build_vanishing_poly, validate_conditions
from .sqfree import is_squarefree_f, is_squarefree_t


def _split(text: str) -> list[str]:
    return [s.strip() for s in text.split(",")]


def _field(args, cfg):
    return parse_field_spec(args.field, ceiling=cfg["field_ceiling"])


def _spec(args, F) -> SparseSpec:
    parts = [_split(v) for v in (args.a, args.b, args.c)]
    if not len(parts[0]) == len(parts[1]) == len(parts[2]):
        raise ValueError("--a, --b and --c must list the same number of polynomials")
    return SparseSpec(*(tuple(parse_tpoly(s, F) for s in p) for p in parts))


def _f(args, F, d: int | None = None) -> XPoly:
    return parse_xpoly(args.f, F, nvars=d)


def _invocation(args, cfg) -> dict:
    # workers is excluded: it never changes a report
    skip = {"func", "workers", "out", "config"}
    return {
        "subcommand": args.command,
        "args": {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None},
        "config": {k: v for k, v in cfg.items() if k != "workers"},
    }


# --- subcommands (each returns (report, ok)) --------------------------------

def cmd_field_info(args, cfg):
    F = _field(args, cfg)
    return {**harness.field_info(F), "elements": list(range(F.q)) if F.q <= 64 else None}, True


def cmd_sqfree_check(args, cfg):
    F = _field(args, cfg)
    f = parse_xpoly(args.f, F)
    if f.nvars == 0:
        v = is_squarefree_t(f.to_tpoly())
        kind = "F_q[t]"
    else:
        if not f:
            raise ValueError("the zero polynomial is not square-free (and not a valid f)")
        v = is_squarefree_f(f)
        kind = f"F_q[t][x1..x{f.nvars}]"
    return {
        "field": harness.field_info(F),
        "f": str(f),
        "ring": kind,
        "is_squarefree": v.is_squarefree,
        "witness": None if v.witness is None else str(v.witness),
        "is_zero": v.is_zero,
    }, True


def cmd_check_conditions(args, cfg):
    F = _field(args, cfg)
    spec = _spec(args, F)
    f = _f(args, F, spec.d)
    cond = validate_conditions(f, spec)
    return {
        "field": harness.field_info(F),
        "f": str(f),
        "spec": spec.to_dict(),
        "f_squarefree": bool(is_squarefree_f(f)),
        "conditions": cond.to_dict(),
    }, True


def cmd_build_p(args, cfg):
    F = _field(args, cfg)
    spec = _spec(args, F)
    f = _f(args, F, spec.d)
    van = build_vanishing_poly(f, spec)
    report = {
        "field": harness.field_info(F),
        "f": str(f),
        "spec": spec.to_dict(),
        "conditions": van.conditions.to_dict(),
        "k": van.k,
        "P": str(van.P),
        "degP": van.P.total_degree if van.P else None,
        "charBound": van.bounds.char_bound,
        "degBound": van.bounds.deg_bound,
    }
    return report, True


def cmd_count(args, cfg):
    F = _field(args, cfg)
    spec = _spec(args, F)
    f = _f(args, F, spec.d)
    rep = harness.count_sparse(f, spec, ceiling=cfg["max_evals"], workers=cfg["workers"],
                               emit_grid=bool(args.emit_grid))
    if args.emit_grid:
        with open(args.emit_grid, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow([f"beta{i + 1}" for i in range(2 * spec.d)] + ["squarefree", "p_zero"])
            for beta, sqf, pz in rep.grid:
                w.writerow(list(beta) + [int(sqf), int(pz)])
    return rep.to_dict(), rep.passed


def cmd_monic_box(args, cfg):
    F = _field(args, cfg)
    m = [int(s) for s in _split(args.m)]
    f = _f(args, F, len(m))
    rep = harness.count_monic_box(f, m, ceiling=cfg["box_ceiling"])
    return rep.to_dict(), rep.decomposition_check


def cmd_sweep(args, cfg):
    qs = [int(s) for s in _split(args.qs)]
    rows = harness.frequency_sweep(args.f, _split(args.a), _split(args.b), _split(args.c), qs,
                                   workers=cfg["workers"], ceiling=cfg["max_evals"])
    return {"f": args.f, "rows": rows}, all(r["status"] != "fail" for r in rows)


def cmd_counterexamples(args, cfg):
    F = _field(args, cfg)
    rep = harness.run_counterexamples(F, workers=cfg["workers"])
    return rep, rep["passed"]


def cmd_verify(args, cfg):
    from .acceptance import run_all

    results = run_all(workers_pair=(1, max(cfg["workers"], 4)), log=sys.stderr)
    return {"criteria": [r.to_dict() for r in results]}, all(r.passed for r in results)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="flat key = value file with defaults")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--workers", type=int, help="worker processes for grid enumeration")
    p.add_argument("--max-evals", dest="max_evals", type=int, help="ceiling on sparse-grid evaluations")
    p.add_argument("--box-ceiling", dest="box_ceiling", type=int, help="ceiling on monic-box size")


def _add_spec(p, f_required=True):
    p.add_argument("--f", required=f_required, help="polynomial in t, x1..xd (text syntax)")
    p.add_argument("--a", required=True, help="comma-separated a_1..a_d in F_q[t]")
    p.add_argument("--b", required=True, help="comma-separated b_1..b_d")
    p.add_argument("--c", required=True, help="comma-separated c_1..c_d")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sqfsparse", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    p = add("field-info", cmd_field_info, "describe GF(p^n) and its modulus")
    p.add_argument("--field", required=True, help="'p' or 'p^n'")

    p = add("sqfree-check", cmd_sqfree_check, "square-freeness of a polynomial")
    p.add_argument("--field", required=True)
    p.add_argument("--f", required=True)

    p = add("check-conditions", cmd_check_conditions, "validate the gcd and characteristic conditions")
    p.add_argument("--field", required=True)
    _add_spec(p)

    p = add("build-p", cmd_build_p, "construct the vanishing polynomial P")
    p.add_argument("--field", required=True)
    _add_spec(p)

    p = add("count", cmd_count, "exhaustive square-free count over a sparse family")
    p.add_argument("--field", required=True)
    _add_spec(p)
    p.add_argument("--emit-grid", dest="emit_grid", help="CSV path for one row per parameter tuple")

    p = add("monic-box", cmd_monic_box, "count over monic boxes and check the decomposition")
    p.add_argument("--field", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--m", required=True, help="comma-separated degrees m_1..m_d (each >= 2)")

    p = add("sweep", cmd_sweep, "repeat a count over several field sizes")
    _add_spec(p)
    p.add_argument("--qs", required=True, help="comma-separated field sizes")

    p = add("counterexamples", cmd_counterexamples, "run the two hypothesis-breaking scenarios")
    p.add_argument("--field", required=True)

    add("verify", cmd_verify, "run the built-in acceptance suite")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = effective_config(args.config, {
            "workers": args.workers, "max_evals": args.max_evals, "box_ceiling": args.box_ceiling})
        report, ok = args.func(args, cfg)
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    except (ConfigError, FieldError, NotSquareFreeError, harness.CeilingExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command != "build-p":
        report = {**report, "invocation": _invocation(args, cfg)}
    text = json.dumps(report, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
