"""Exhaustive counting experiments over small finite fields.

Each experiment enumerates a parameter grid completely and reports exact
integer counts; frequencies and error bounds are exact fractions.  The grid
of β ∈ F_q^{2d} is walked in :func:`itertools.product` order of field codes
(β_1 most significant) and may be split across worker processes into
contiguous index ranges; only integer sums cross process boundaries, so the
worker count never changes a report.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .ffield import FieldDescriptor, field_from_q
from .polyring import CoefPoly, TPoly, XPoly
from .polytext import parse_tpoly, parse_xpoly
from .sparse import (
    BoundSet,
    ConditionReport,
    NotSquareFreeError,
    SparseSpec,
    build_vanishing_poly,
)
from .sqfree import is_squarefree_f, squarefree_t_fast

SPARSE_CEILING = 10**7
BOX_CEILING = 10**6
SCHMIDT_CEILING = 10**7


class CeilingExceeded(ValueError):
    pass


def field_info(desc: FieldDescriptor) -> dict:
    return {"spec": desc.spec, "p": desc.p, "n": desc.n, "q": desc.q, "modulus": list(desc.modulus)}


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# --- sparse counts ----------------------------------------------------------

def _beta_from_index(idx: int, q: int, length: int) -> tuple[int, ...]:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        idx, out[pos] = divmod(idx, q)
    return tuple(out)


@dataclass
class _Tally:
    sqf: int = 0
    p_zero: int = 0
    violations: int = 0
    grid: list = dc_field(default_factory=list)

    def merge(self, other: "_Tally"):
        self.sqf += other.sqf
        self.p_zero += other.p_zero
        self.violations += other.violations
        self.grid.extend(other.grid)


def _count_range(f: XPoly, spec: SparseSpec, P: CoefPoly, start: int, stop: int, want_grid: bool) -> _Tally:
    F = f.field
    q, length = F.q, 2 * spec.d
    tally = _Tally()
    beta = list(_beta_from_index(start, q, length))
    p_at = P.evaluator()
    for _ in range(start, stop):
        value = f.evaluate_x(spec.member(beta))
        sqf = squarefree_t_fast(value.coeffs, F)
        pz = p_at(beta) == 0
        tally.sqf += sqf
        tally.p_zero += pz
        if not sqf and not pz:
            tally.violations += 1
        if want_grid:
            tally.grid.append((tuple(beta), sqf, pz))
        # odometer increment, last coordinate fastest
        for pos in range(length - 1, -1, -1):
            beta[pos] += 1
            if beta[pos] < q:
                break
            beta[pos] = 0
    return tally


def _count_range_star(args):
    return _count_range(*args)


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def _tally_grid(f, spec, P, total, workers, want_grid) -> _Tally:
    tally = _Tally()
    if workers <= 1 or total < 2 * workers:
        tally.merge(_count_range(f, spec, P, 0, total, want_grid))
        return tally
    jobs = [(f, spec, P, a, b, want_grid) for a, b in _ranges(total, workers)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_count_range_star, jobs):
            tally.merge(part)
    return tally


@dataclass
class CountReport:
    field: dict
    f: str
    spec: dict
    total: int
    sqf_count: int
    p_zero_count: int
    k: int
    P: str
    deg_p: int | None
    bounds: BoundSet
    conditions: ConditionReport
    superset_check: bool
    runtime_ms: float
    grid: list | None = None

    @property
    def d(self) -> int:
        return len(self.spec["a"])

    @property
    def bad_count(self) -> int:
        return self.total - self.sqf_count

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.sqf_count, self.total)

    @property
    def error(self) -> Fraction:
        return 1 - self.frequency

    @property
    def q(self) -> int:
        return self.field["q"]

    @property
    def guaranteed(self) -> bool:
        return self.conditions.overall

    @property
    def error_bound(self) -> Fraction:
        return Fraction(self.bounds.deg_bound, self.q)

    @property
    def bound_check(self) -> bool:
        return self.error <= self.error_bound

    @property
    def chain(self) -> dict:
        """bad <= #zeros(P) <= deg P * q^(2d-1) <= C~(N) * q^(2d-1), each link separately."""
        scale = self.q ** (2 * self.d - 1)
        p_nonzero = self.deg_p is not None
        return {
            "bad_le_p_zeros": self.bad_count <= self.p_zero_count,
            "p_zeros_le_degp_scale": p_nonzero and self.p_zero_count <= self.deg_p * scale,
            "degp_scale_le_degbound_scale": p_nonzero and self.deg_p * scale <= self.bounds.deg_bound * scale,
        }

    @property
    def passed(self) -> bool:
        if not self.superset_check:
            return False
        if not self.guaranteed:
            return True
        return self.bound_check and all(self.chain.values())

    def to_dict(self) -> dict:
        out = {
            "field": self.field,
            "f": self.f,
            "spec": self.spec,
            "total": self.total,
            "sqf_count": self.sqf_count,
            "bad_count": self.bad_count,
            "frequency": _frac(self.frequency),
            "frequency_decimal": float(self.frequency),
            "p_zero_count": self.p_zero_count,
            "k": self.k,
            "p": self.P,
            "deg_p": self.deg_p,
            "bounds": self.bounds.to_dict(),
            "conditions": self.conditions.to_dict(),
            "guaranteed": self.guaranteed,
            "error": _frac(self.error),
            "error_decimal": float(self.error),
            "error_bound": _frac(self.error_bound),
            "bound_check": self.bound_check,
            "chain_check": self.chain,
            "superset_check": self.superset_check,
            "passed": self.passed,
            "runtime_ms": self.runtime_ms,
        }
        return out


def count_sparse(
    f: XPoly,
    spec: SparseSpec,
    ceiling: int = SPARSE_CEILING,
    workers: int = 1,
    emit_grid: bool = False,
) -> CountReport:
    """Count β ∈ F_q^{2d} whose family member gives a square-free value of f."""
    t0 = time.perf_counter()
    F = f.field
    total = F.q ** (2 * spec.d)
    if total > ceiling:
        raise CeilingExceeded(f"q^(2d) = {total} evaluations exceed the ceiling {ceiling}")
    if not is_squarefree_f(f):
        raise NotSquareFreeError(f"f = {f} is not square-free; the count is refused")
    van = build_vanishing_poly(f, spec, check_squarefree=False)
    tally = _tally_grid(f, spec, van.P, total, workers, emit_grid)
    return CountReport(
        field=field_info(F),
        f=str(f),
        spec=spec.to_dict(),
        total=total,
        sqf_count=tally.sqf,
        p_zero_count=tally.p_zero,
        k=van.k,
        P=str(van.P),
        deg_p=van.P.total_degree if van.P else None,
        bounds=van.bounds,
        conditions=van.conditions,
        superset_check=tally.violations == 0,
        runtime_ms=round((time.perf_counter() - t0) * 1000, 3),
        grid=tally.grid if emit_grid else None,
    )


# --- monic boxes ------------------------------------------------------------

@dataclass
class BoxReport:
    field: dict
    f: str
    m: tuple[int, ...]
    total: int
    sqf_count: int
    decomposed_count: int
    classes: int
    runtime_ms: float

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.sqf_count, self.total)

    @property
    def decomposition_check(self) -> bool:
        return self.sqf_count == self.decomposed_count

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "f": self.f,
            "m": list(self.m),
            "total": self.total,
            "sqf_count": self.sqf_count,
            "frequency": _frac(self.frequency),
            "frequency_decimal": float(self.frequency),
            "decomposed_count": self.decomposed_count,
            "classes": self.classes,
            "decomposition_check": self.decomposition_check,
            "runtime_ms": self.runtime_ms,
        }


def _monic(F: FieldDescriptor, m: int):
    for low in itertools.product(range(F.q), repeat=m):
        yield TPoly(F, low + (1,))


def count_monic_box(f: XPoly, m: Sequence[int], ceiling: int = BOX_CEILING) -> BoxReport:
    """Square-free values of f on M_{m_1} x ... x M_{m_d}, counted directly and
    as a disjoint union of sparse families (a_i = t, b_i = 1, c_i monic of
    degree m_i with zero coefficients at t^0 and t^1)."""
    t0 = time.perf_counter()
    F, d = f.field, f.nvars
    m = tuple(m)
    if len(m) != d:
        raise ValueError(f"need {d} degrees, got {len(m)}")
    if any(mi < 2 for mi in m):
        raise ValueError("every m_i must be at least 2")
    total = F.q ** sum(m)
    if total > ceiling:
        raise CeilingExceeded(f"box size {total} exceeds the ceiling {ceiling}")
    if not is_squarefree_f(f):
        raise NotSquareFreeError(f"f = {f} is not square-free")

    direct = 0
    for us in itertools.product(*(_monic(F, mi) for mi in m)):
        direct += squarefree_t_fast(f.evaluate_x(us).coeffs, F)

    t, one = TPoly.t(F), TPoly.constant(F, 1)
    classes, decomposed = 0, 0
    c_sets = [[TPoly(F, (0, 0) + mid + (1,)) for mid in itertools.product(range(F.q), repeat=mi - 2)] for mi in m]
    for cs in itertools.product(*c_sets):
        spec = SparseSpec((t,) * d, (one,) * d, cs)
        decomposed += count_sparse(f, spec, ceiling=ceiling).sqf_count
        classes += 1
    return BoxReport(field_info(F), str(f), m, total, direct, decomposed, classes,
                     round((time.perf_counter() - t0) * 1000, 3))


# --- zero counts ------------------------------------------------------------

@dataclass(frozen=True)
class SchmidtResult:
    zeros: int
    bound: int
    ok: bool


def schmidt_check(P: CoefPoly, desc: FieldDescriptor, ceiling: int = SCHMIDT_CEILING) -> SchmidtResult:
    """Zeros of P in F_q^D against the bound (total degree) * q^(D-1)."""
    if not P:
        raise ValueError("the zero polynomial has no meaningful zero bound")
    if P.field != desc:
        raise ValueError("P is not defined over the given field")
    D, q = P.nvars, desc.q
    if q**D > ceiling:
        raise CeilingExceeded(f"q^D = {q ** D} exceeds the ceiling {ceiling}")
    at = P.evaluator()
    zeros = sum(at(x) == 0 for x in itertools.product(range(q), repeat=D))
    bound = P.total_degree * q ** max(D - 1, 0) if D else 0
    return SchmidtResult(zeros, bound, zeros <= bound)


# --- named experiments ------------------------------------------------------

def _spec_from_text(F: FieldDescriptor, a, b, c) -> SparseSpec:
    as_list = lambda v: [v] if isinstance(v, str) else list(v)
    return SparseSpec(*(tuple(parse_tpoly(s, F) for s in as_list(v)) for v in (a, b, c)))


def run_counterexamples(desc: FieldDescriptor, workers: int = 1) -> dict:
    """The two configurations that break the hypotheses of the counting estimate.

    1. f = x(x+t) on (t, t^2, 0): every value is divisible by t^2.
    2. f = x - t on (1, t^p, t): every value β_1 + β_2 t^p is a p-th power,
       so only the unit values (β_2 = 0, β_1 != 0) can be square-free.
    """
    F = desc
    s1 = count_sparse(parse_xpoly("x*(x+t)", F), _spec_from_text(F, "t", "t^2", "0"), workers=workers)
    s2 = count_sparse(parse_xpoly("x - t", F), _spec_from_text(F, "1", "t^p", "t"), workers=workers)
    ok1 = s1.sqf_count == 0
    ok2 = s2.frequency <= Fraction(1, F.q)
    return {
        "field": field_info(F),
        "scenarios": [
            {"name": "gcd", "report": s1.to_dict(), "expect": "sqf_count == 0", "passed": ok1},
            {"name": "frobenius", "report": s2.to_dict(), "expect": "frequency <= 1/q", "passed": ok2},
        ],
        "passed": ok1 and ok2,
    }


def frequency_sweep(f_text: str, a, b, c, qs: Sequence[int], workers: int = 1,
                    ceiling: int = SPARSE_CEILING) -> list[dict]:
    """Count the same f and spec template over several fields.

    Templates are parsed per field, so ``t^p`` follows each field's
    characteristic.  Rows whose hypotheses fail carry status
    ``"no guarantee"`` and skip the bound check.
    """
    rows = []
    for q in qs:
        F = field_from_q(q)
        f = parse_xpoly(f_text, F)
        spec = _spec_from_text(F, a, b, c)
        if f.nvars != spec.d:
            f = parse_xpoly(f_text, F, nvars=spec.d)
        rep = count_sparse(f, spec, ceiling=ceiling, workers=workers)
        if not rep.passed:
            status = "fail"
        elif not rep.guaranteed:
            status = "no guarantee"
        else:
            status = "pass"
        rows.append({"q": q, "status": status, "report": rep.to_dict()})
    return rows
