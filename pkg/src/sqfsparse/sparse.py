"""Linear sparse sets and the vanishing polynomial P_{f,a,b,c}.

A :class:`SparseSpec` with vectors a, b, c of length d describes the family

    { (a_i(t) β_i + b_i(t) β_{d+i} + c_i(t))_{i=1..d} : β ∈ F_q^{2d} }

inside F_q[t]^d.  Substituting x_i -> a_i x_i + b_i x_{d+i} + c_i turns
f ∈ F_q[t][x_1..x_d] into f̃ ∈ F_q[t][x_1..x_2d] with f̃(t, β) equal to f at the
family member indexed by β.  P := δ_k · D^k_t(f̃), where k = deg_t f̃ and
δ_k is the leading t-coefficient, vanishes at every β whose value is not
square-free.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .discrim import disc_t
from .ffield import FieldDescriptor
from .polyring import CoefPoly, TPoly, XPoly, gcd_t, substitute_x
from .sqfree import is_squarefree_f


class NotSquareFreeError(ValueError):
    """f violates the square-free hypothesis."""


class TheoremViolation(AssertionError):
    """A guaranteed property of P failed; indicates a bug or a false claim."""


def _deg0(u: TPoly) -> int:
    # zero polynomials do not raise the norm
    return max(u.degree, 0)


@dataclass(frozen=True)
class SparseSpec:
    a: tuple[TPoly, ...]
    b: tuple[TPoly, ...]
    c: tuple[TPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        if not (len(self.a) == len(self.b) == len(self.c) >= 1):
            raise ValueError("a, b, c must have the same length d >= 1")
        fields = {u.field for u in self.a + self.b + self.c}
        if len(fields) != 1:
            raise ValueError("a, b, c must share one field")

    @classmethod
    def single(cls, a: TPoly, b: TPoly, c: TPoly) -> "SparseSpec":
        return cls((a,), (b,), (c,))

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def field(self) -> FieldDescriptor:
        return self.a[0].field

    @property
    def norm(self) -> int:
        return max(_deg0(u) for u in self.a + self.b + self.c)

    def member(self, beta: Sequence[int]) -> list[TPoly]:
        """The tuple (a_i β_i + b_i β_{d+i} + c_i)_i for β in F_q^{2d} (codes)."""
        d = self.d
        if len(beta) != 2 * d:
            raise ValueError(f"expected {2 * d} parameters, got {len(beta)}")
        return [self.a[i].scale(beta[i]) + self.b[i].scale(beta[d + i]) + self.c[i] for i in range(d)]

    def to_dict(self) -> dict:
        return {"a": [str(u) for u in self.a], "b": [str(u) for u in self.b], "c": [str(u) for u in self.c]}


@dataclass(frozen=True)
class BoundSet:
    N: int
    char_bound: int
    deg_bound: int

    def to_dict(self) -> dict:
        return {"N": self.N, "charBound": self.char_bound, "degBound": self.deg_bound}


@dataclass(frozen=True)
class ConditionReport:
    p: int
    char_bound: int
    gcd_ok: tuple[bool, ...]
    branch1_ok: bool
    branch2_ok: tuple[bool, ...]

    @property
    def overall(self) -> bool:
        return all(self.gcd_ok) and (self.branch1_ok or all(self.branch2_ok))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "charBound": self.char_bound,
            "gcd_ok": list(self.gcd_ok),
            "branch1_ok": self.branch1_ok,
            "branch2_ok": list(self.branch2_ok),
            "overall": self.overall,
        }


def _check_arity(f: XPoly, spec: SparseSpec):
    if f.nvars != spec.d:
        raise ValueError(f"f has {f.nvars} x-variables but the sparse family has d = {spec.d}")
    if f.field != spec.field:
        raise ValueError("f and the sparse family live over different fields")


def build_psi(f: XPoly, spec: SparseSpec) -> XPoly:
    """f̃ = f(t, a_1 x_1 + b_1 x_{d+1} + c_1, ..., a_d x_d + b_d x_{2d} + c_d)."""
    _check_arity(f, spec)
    d, F = spec.d, spec.field
    images = []
    for i in range(d):
        li = (spec.a[i].to_xpoly(2 * d) * XPoly.var(F, 2 * d, i + 1)
              + spec.b[i].to_xpoly(2 * d) * XPoly.var(F, 2 * d, d + i + 1)
              + spec.c[i].to_xpoly(2 * d))
        images.append(li)
    return substitute_x(f, images)


def compute_bounds(f: XPoly, spec: SparseSpec) -> BoundSet:
    """C(N) = ‖(a,b,c)‖·deg_x f + deg_t f and C̃(N) = (2·C(N) - 1)·deg_x f."""
    _check_arity(f, spec)
    dx = max(f.deg_xvec, 0)
    dt = max(f.deg_t, 0)
    norm = spec.norm
    c = norm * dx + dt
    return BoundSet(N=max(dx, dt, norm), char_bound=c, deg_bound=(2 * c - 1) * dx)


def validate_conditions(f: XPoly, spec: SparseSpec) -> ConditionReport:
    """Check gcd(a_i, b_i) = 1 and (p > C(N) or b_i/a_i ∉ F_q(t^p) for all i).

    b/a lies in F_q(t^p) exactly when its derivative b'a - ba' vanishes.
    """
    bounds = compute_bounds(f, spec)
    gcd_ok, branch2 = [], []
    for a, b in zip(spec.a, spec.b):
        gcd_ok.append(bool(a or b) and gcd_t(a, b).degree == 0)
        branch2.append(bool(a) and bool(b.derivative() * a - b * a.derivative()))
    p = spec.field.p
    return ConditionReport(p, bounds.char_bound, tuple(gcd_ok), p > bounds.char_bound, tuple(branch2))


@dataclass(frozen=True)
class VanishingPoly:
    """P together with the data it was built from."""

    P: CoefPoly
    bounds: BoundSet
    k: int
    psi: XPoly
    conditions: ConditionReport

    @property
    def degree(self):
        return self.P.total_degree


def build_vanishing_poly(f: XPoly, spec: SparseSpec, check_squarefree: bool = True) -> VanishingPoly:
    """Construct P_{f,a,b,c} ∈ F_q[x_1..x_2d].

    For k = deg_t f̃ >= 1, P = δ_k · D^k_t(f̃).  If f̃ is free of t (k = 0)
    the value at β is the constant f̃(β), square-free iff nonzero, and P is
    f̃ itself.  Raises :class:`TheoremViolation` when the hypotheses hold but
    P = 0, or when k >= 1 and deg P exceeds C̃(N).
    """
    _check_arity(f, spec)
    if check_squarefree and not is_squarefree_f(f):
        raise NotSquareFreeError(f"f = {f} is not square-free")
    psi = build_psi(f, spec)
    if not psi:
        raise ValueError("the substituted polynomial is zero")
    k = psi.deg_t
    bounds = compute_bounds(f, spec)
    cond = validate_conditions(f, spec)
    if k == 0:
        P = CoefPoly(psi.field, psi.nvars, psi.terms)
    else:
        lead = psi.t_coefficients()[k]
        P = CoefPoly(psi.field, psi.nvars, (lead * disc_t(psi, k)).terms)
        if P and P.total_degree > bounds.deg_bound:
            raise TheoremViolation(f"deg P = {P.total_degree} exceeds C~(N) = {bounds.deg_bound}")
    if cond.overall and not P:
        raise TheoremViolation(f"hypotheses hold but P = 0 for f = {f}, spec = {spec.to_dict()}")
    return VanishingPoly(P, bounds, k, psi, cond)
