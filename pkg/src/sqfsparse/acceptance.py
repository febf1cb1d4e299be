"""Built-in acceptance suite, shared by ``sqfsparse verify`` and the tests.

Each criterion returns a :class:`CriterionResult`; randomized criteria use
fixed seeds so repeated runs see identical instances.
"""
from __future__ import annotations

import itertools
import json
import random
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .discrim import disc_t, universal_disc
from .ffield import FieldDescriptor, field_from_q
from .harness import count_monic_box, count_sparse, frequency_sweep, run_counterexamples, schmidt_check
from .polyring import CoefPoly, TPoly, XPoly
from .polytext import parse_tpoly, parse_xpoly
from .sparse import SparseSpec, build_psi, build_vanishing_poly
from .sqfree import (
    brute_squarefree_oracle,
    brute_squarefree_oracle_f,
    is_squarefree_f,
    is_squarefree_t,
    iter_xpolys,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    runtime_s: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail} ({self.runtime_s:.2f}s)"

    def to_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}


# --- random instances -------------------------------------------------------

def random_tpoly(rng: random.Random, F: FieldDescriptor, max_deg: int, nonzero: bool = False) -> TPoly:
    while True:
        deg = rng.randint(0, max_deg)
        u = TPoly(F, [rng.randrange(F.q) for _ in range(deg + 1)])
        if u or not nonzero:
            return u


def random_xpoly(rng: random.Random, F: FieldDescriptor, nvars: int, max_deg_t: int, max_deg_x: int,
                 density: float = 0.5) -> XPoly:
    """Random f with deg_t <= max_deg_t and total x-degree <= max_deg_x."""
    monos = [e for e in itertools.product(range(max_deg_t + 1), *(range(max_deg_x + 1),) * nvars)
             if sum(e[1:]) <= max_deg_x]
    terms = {e: rng.randrange(1, F.q) for e in monos if rng.random() < density}
    return XPoly(F, nvars, terms)


def random_admissible(rng: random.Random, F: FieldDescriptor, d: int):
    """A square-free f over d variables and a spec, avoiding the t-free/constant-spec corner."""
    while True:
        if d == 1:
            f = random_xpoly(rng, F, 1, 2, 2)
            spec_deg = 2
        else:
            f = random_xpoly(rng, F, 2, 1, 2, density=0.4)
            spec_deg = 1
        if not f or f.deg_xvec < 1 or not is_squarefree_f(f):
            continue
        spec = SparseSpec(*(tuple(random_tpoly(rng, F, spec_deg) for _ in range(d)) for _ in range(3)))
        if f.deg_t == 0 and spec.norm == 0:
            continue
        if not any(spec.a[i] or spec.b[i] for i in range(d)) or not build_psi(f, spec):
            continue
        return f, spec


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CriterionResult(number, name, ok, detail, time.perf_counter() - t0)


# --- criteria ---------------------------------------------------------------

def _spec(F, a, b, c) -> SparseSpec:
    return SparseSpec.single(parse_tpoly(a, F), parse_tpoly(b, F), parse_tpoly(c, F))


def criterion_1() -> CriterionResult:
    def run():
        out = []
        for q in (2, 3, 5, 7, 9):
            F = field_from_q(q)
            t0 = time.perf_counter()
            rep = count_sparse(parse_xpoly("x*(x+t)", F), _spec(F, "t", "t^2", "0"))
            dt = time.perf_counter() - t0
            out.append((q, rep.sqf_count, dt))
        ok = all(n == 0 and dt < 1.0 for _, n, dt in out)
        return ok, "; ".join(f"q={q}: sqf={n} in {dt:.3f}s" for q, n, dt in out)
    return _timed(1, "counterexample pin (gcd)", run)


def criterion_2() -> CriterionResult:
    def run():
        out = []
        for q in (4, 8, 9):
            F = field_from_q(q)
            t0 = time.perf_counter()
            rep = count_sparse(parse_xpoly("x - t", F), _spec(F, "1", "t^p", "t"))
            dt = time.perf_counter() - t0
            out.append((q, rep.frequency, dt))
        ok = all(fr <= Fraction(1, q) and dt < 1.0 for q, fr, dt in out)
        return ok, "; ".join(f"q={q}: freq={fr} (<= 1/{q}) in {dt:.3f}s" for q, fr, dt in out)
    return _timed(2, "counterexample pin (Frobenius)", run)


def commutation_failures(F: FieldDescriptor, n: int, rng: random.Random) -> int:
    """Random (f, β, k): evaluate-then-D^k against D^k-then-evaluate."""
    failures = 0
    for _ in range(n):
        d = rng.randint(1, 2)
        f = random_xpoly(rng, F, d, rng.randint(0, 4), 2)
        k = rng.randint(max(f.deg_t, 1) if f else 1, 4)
        beta = [rng.randrange(F.q) for _ in range(d)]
        lhs = disc_t(f, k).evaluate(beta)
        spec_coeffs = f.evaluate_scalars(beta).coeffs
        rhs = universal_disc([F.element(c) for c in spec_coeffs] or [F.zero], k).code
        failures += lhs != rhs
    return failures


def criterion_3() -> CriterionResult:
    def run():
        rng = random.Random(3)
        fails = {q: commutation_failures(field_from_q(q), 500, rng) for q in (5, 9)}
        return all(v == 0 for v in fails.values()), f"failures per q: {fails} over 500 instances each"
    return _timed(3, "discriminant/evaluation commutation", run)


def superset_battery(n_per_field: int = 50, seed: int = 4, qs=(4, 5, 8, 9)) -> dict:
    """Exhaustive superset and nonzero checks on random admissible instances."""
    rng = random.Random(seed)
    stats = {"instances": 0, "superset_violations": 0, "zero_p_with_conditions": 0,
             "conditions_held": 0, "degree_violations": 0, "max_deg_ratio": Fraction(0)}
    for q in qs:
        F = field_from_q(q)
        for i in range(n_per_field):
            d = 1 + i % 2
            f, spec = random_admissible(rng, F, d)
            van = build_vanishing_poly(f, spec)
            rep = count_sparse(f, spec)
            stats["instances"] += 1
            stats["superset_violations"] += not rep.superset_check
            if van.conditions.overall:
                stats["conditions_held"] += 1
                stats["zero_p_with_conditions"] += not van.P
            if van.P:
                if van.P.total_degree > van.bounds.deg_bound:
                    stats["degree_violations"] += 1
                elif van.bounds.deg_bound > 0:
                    stats["max_deg_ratio"] = max(stats["max_deg_ratio"],
                                                 Fraction(van.P.total_degree, van.bounds.deg_bound))
    return stats


_battery_cache: dict = {}


def _battery() -> dict:
    if "stats" not in _battery_cache:
        _battery_cache["stats"] = superset_battery()
    return _battery_cache["stats"]


def criterion_4() -> CriterionResult:
    def run():
        s = _battery()
        ok = s["superset_violations"] == 0 and s["zero_p_with_conditions"] == 0
        return ok, (f"{s['instances']} instances, {s['conditions_held']} with hypotheses; "
                    f"superset violations {s['superset_violations']}, zero P under hypotheses "
                    f"{s['zero_p_with_conditions']}")
    return _timed(4, "superset contract and nonzero P", run)


def criterion_5() -> CriterionResult:
    def run():
        s = _battery()
        F = field_from_q(5)
        van = build_vanishing_poly(parse_xpoly("x^2 - t", F), _spec(F, "1", "t", "0"))
        worked = van.P.total_degree == 4 and van.bounds.deg_bound == 10
        ok = s["degree_violations"] == 0 and worked
        return ok, (f"worked instance deg P = {van.P.total_degree} <= {van.bounds.deg_bound}; "
                    f"battery degree violations {s['degree_violations']} of {s['instances']}")
    return _timed(5, "degree bound", run)


def criterion_6() -> CriterionResult:
    def run():
        rng = random.Random(6)
        bad, checked = 0, 0
        while checked < 100:
            q = rng.choice((3, 5))
            D = rng.randint(1, 3)
            F = field_from_q(q)
            P = random_xpoly(rng, F, D, 0, 4, density=0.3).as_coef()
            if not P:
                continue
            res = schmidt_check(P, F)
            bad += not res.ok
            checked += 1
        return bad == 0, f"{checked} random polynomials, {bad} exceed deg * q^(D-1)"
    return _timed(6, "zero-count bound", run)


SWEEP_QS = (3, 4, 5, 7, 8, 9, 11, 13)


def criterion_7() -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        rows = frequency_sweep("x^2 + x - t", "1", "t", "0", SWEEP_QS)
        dt = time.perf_counter() - t0
        fails = []
        for row in rows:
            r = row["report"]
            err, bound = Fraction(r["error"]), Fraction(r["error_bound"])
            if not (r["guaranteed"] and err <= bound and all(r["chain_check"].values())):
                fails.append(row["q"])
        ok = not fails and dt < 10.0
        return ok, f"{len(rows)} rows, failing q: {fails or 'none'}, {dt:.2f}s"
    return _timed(7, "main estimate chain sweep", run)


def criterion_8() -> CriterionResult:
    def run():
        F = field_from_q(5)
        rep = count_sparse(parse_xpoly("x^2 - t", F), _spec(F, "1", "t", "0"))
        return rep.sqf_count == 21, f"sqf_count = {rep.sqf_count} (expected 21), frequency {rep.frequency}"
    return _timed(8, "pinned count", run)


BOX_CASES = (
    (2, "x^2 + t", (3,)),
    (2, "x*(x+t)", (3,)),
    (3, "x^2 + t", (3,)),
    (3, "x^2 + x - t", (3,)),
    (2, "x1*x2 + t", (2, 2)),
    (2, "x1^2 + x2 + t", (2, 2)),
)


def criterion_9() -> CriterionResult:
    def run():
        parts, ok = [], True
        for q, ftext, m in BOX_CASES:
            F = field_from_q(q)
            rep = count_monic_box(parse_xpoly(ftext, F, nvars=len(m)), m)
            ok &= rep.decomposition_check
            parts.append(f"q={q} f={ftext} m={m}: {rep.sqf_count}={rep.decomposed_count}")
        return ok, "; ".join(parts)
    return _timed(9, "monic-box decomposition", run)


def oracle_mismatches() -> dict:
    out = {}
    for q in (2, 3):
        F = field_from_q(q)
        bad = 0
        for deg in range(-1, 7):
            if deg < 0:
                polys = [TPoly(F)]
            else:
                polys = (TPoly(F, low + (lead,)) for lead in range(1, q)
                         for low in itertools.product(range(q), repeat=deg))
            for u in polys:
                bad += is_squarefree_t(u).is_squarefree != brute_squarefree_oracle(u)
        out[f"F_{q}[t]"] = bad
    F = field_from_q(2)
    bad = 0
    for f in iter_xpolys(F, 1, (2, 2)):
        if f:
            bad += is_squarefree_f(f).is_squarefree != brute_squarefree_oracle_f(f)
    out["F_2[t][x]"] = bad
    return out


def criterion_10() -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        mism = oracle_mismatches()
        dt = time.perf_counter() - t0
        return all(v == 0 for v in mism.values()) and dt < 60, f"mismatches {mism}, {dt:.1f}s"
    return _timed(10, "oracle equivalence", run)


def field_core_failures(q: int, rng: random.Random, triples: int = 1000) -> int:
    F = field_from_q(q)
    bad = sum(F.pth_root(F.frobenius(x)) != x for x in range(q))
    add, mul = F.add, F.mul
    for _ in range(triples):
        a, b, c = (rng.randrange(q) for _ in range(3))
        bad += add(add(a, b), c) != add(a, add(b, c))
        bad += mul(mul(a, b), c) != mul(a, mul(b, c))
        bad += add(a, b) != add(b, a) or mul(a, b) != mul(b, a)
        bad += mul(a, add(b, c)) != add(mul(a, b), mul(a, c))
        bad += add(a, F.neg(a)) != 0 or add(a, 0) != a or mul(a, 1) != a
        if a:
            bad += mul(a, F.inv(a)) != 1
    return bad


def criterion_11() -> CriterionResult:
    def run():
        rng = random.Random(11)
        res = {q: field_core_failures(q, rng) for q in (4, 8, 9, 16, 25, 27, 81)}
        return all(v == 0 for v in res.values()), f"failures per q: {res}"
    return _timed(11, "field core", run)


def _strip_runtime(obj):
    if isinstance(obj, dict):
        return {k: _strip_runtime(v) for k, v in obj.items() if k != "runtime_ms"}
    if isinstance(obj, list):
        return [_strip_runtime(v) for v in obj]
    return obj


def criterion_12(workers_pair=(1, 4)) -> CriterionResult:
    from .cli import main

    def run():
        texts = []
        with tempfile.TemporaryDirectory() as tmp:
            for w in workers_pair:
                out = Path(tmp) / f"sweep_{w}.json"
                code = main(["sweep", "--f", "x^2 + x - t", "--a", "1", "--b", "t", "--c", "0",
                             "--qs", ",".join(map(str, SWEEP_QS)), "--workers", str(w), "--out", str(out)])
                if code != 0:
                    return False, f"sweep with --workers {w} exited {code}"
                data = _strip_runtime(json.loads(out.read_text()))
                texts.append(json.dumps(data, indent=2))
        same = texts[0] == texts[1]
        return same, f"--workers {workers_pair[0]} vs {workers_pair[1]}: {'identical' if same else 'DIFFERENT'}"
    return _timed(12, "determinism across worker counts", run)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12)


def run_all(workers_pair=(1, 4), log=None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        r = crit(workers_pair) if crit is criterion_12 else crit()
        if log is not None:
            print(r.line(), file=log, flush=True)
        results.append(r)
    return results
