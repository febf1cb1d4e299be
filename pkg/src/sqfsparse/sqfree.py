"""Square-freeness and separability tests, with brute-force oracles.

Units count as square-free and zero does not: s^2 | 0 for every s, while
only units divide a unit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .discrim import disc_t
from .ffield import FieldDescriptor
from .polyring import (
    TPoly,
    XPoly,
    content_and_primitive,
    gcd_t,
    partial_derivative,
    poly_gcd,
    pth_power_split,
)

#: brute-force oracle limits
ORACLE_MAX_Q = 3
ORACLE_MAX_DEG_T = 6
ORACLE_MAX_DEG_F = 4


class OracleCeilingError(ValueError):
    pass


@dataclass(frozen=True)
class SqfVerdict:
    is_squarefree: bool
    witness: Union[TPoly, XPoly, None] = None
    is_zero: bool = False

    def __bool__(self) -> bool:
        return self.is_squarefree


def _tpoly_pth_root(u: TPoly) -> TPoly:
    F = u.field
    return TPoly(F, [F.pth_root(c) for c in u.coeffs[:: F.p]])


def is_squarefree_t(u: TPoly) -> SqfVerdict:
    """Square-freeness in F_q[t] via gcd(u, u')."""
    if not u:
        return SqfVerdict(False, is_zero=True)
    if u.degree == 0:
        return SqfVerdict(True)
    du = u.derivative()
    if not du:
        return SqfVerdict(False, _tpoly_pth_root(u))
    g = gcd_t(u, du)
    if g.degree == 0:
        return SqfVerdict(True)
    for w in (g, g.exquo(gcd_t(g, g.derivative())) if g.derivative() else None):
        if w is not None and w.degree > 0 and (w * w).divides(u):
            return SqfVerdict(False, w)
    return SqfVerdict(False)


def squarefree_t_fast(coeffs: tuple, field: FieldDescriptor) -> bool:
    """Boolean-only variant of :func:`is_squarefree_t` on a raw coefficient tuple."""
    n = len(coeffs)
    if n == 0:
        return False
    if n <= 2:
        return True
    F = field
    fi = F.from_int
    du = [F.mul(fi(i), coeffs[i]) for i in range(1, n)]
    while du and du[-1] == 0:
        du.pop()
    if not du:
        return False
    a, b = TPoly(F, coeffs), TPoly(F, du)
    while b:
        a, b = b, a % b
    return a.degree == 0


def is_squarefree_f(f: XPoly) -> SqfVerdict:
    """Square-freeness in F_q[t][x_1..x_D].

    The content (in F_q[t]) must be square-free.  For the primitive part g
    an irreducible h satisfies h^2 | g exactly when h divides g and every
    partial derivative of g (F_q is perfect, so an h killed by all partials
    would be a p-th power).  Hence g is square-free iff
    gcd(g, ∂g/∂t, ∂g/∂x_1, ...) is constant; when all partials vanish g is a
    p-th power and fails outright.
    """
    if not f:
        raise ValueError("square-freeness of the zero polynomial is not defined here")
    content, g = content_and_primitive(f)
    cv = is_squarefree_t(content)
    if not cv:
        w = cv.witness.to_xpoly(f.nvars) if cv.witness is not None else None
        return SqfVerdict(False, w)
    if g.is_constant():
        return SqfVerdict(True)
    partials = [partial_derivative(g, v) for v in range(f.nvars + 1)]
    partials = [d for d in partials if d]
    if not partials:
        return SqfVerdict(False, pth_power_split(g))
    G = g
    for d in partials:
        G = poly_gcd(G, d)
        if G.is_constant():
            return SqfVerdict(True)
    return SqfVerdict(False, G if (G * G).divides(g) else None)


def is_separable_in_t(f: XPoly) -> bool:
    """Δ_t f != 0, i.e. D^k_t f at k = deg_t f is not the zero polynomial."""
    k = f.deg_t
    if k < 1:
        raise ValueError(f"separability in t needs deg_t f >= 1, got {k}")
    return bool(disc_t(f, k))


# --- oracles ----------------------------------------------------------------

def _all_tpolys(F: FieldDescriptor, deg: int) -> Iterator[TPoly]:
    """All polynomials of exact degree ``deg``."""
    for lead in range(1, F.q):
        for low in itertools.product(range(F.q), repeat=deg):
            yield TPoly(F, low + (lead,))


def brute_squarefree_oracle(u: TPoly) -> bool:
    """Search every non-constant s with 2 deg s <= deg u for s^2 | u."""
    F = u.field
    if F.q > ORACLE_MAX_Q or u.degree > ORACLE_MAX_DEG_T:
        raise OracleCeilingError(f"oracle limited to q <= {ORACLE_MAX_Q}, degree <= {ORACLE_MAX_DEG_T}")
    if not u:
        return False
    for d in range(1, u.degree // 2 + 1):
        for s in _all_tpolys(F, d):
            if not (u % (s * s)):
                return False
    return True


def iter_xpolys(F: FieldDescriptor, nvars: int, max_degs: tuple) -> Iterator[XPoly]:
    """Every polynomial with deg in variable i at most ``max_degs[i]`` (zero included)."""
    monos = list(itertools.product(*(range(m + 1) for m in max_degs)))
    for cs in itertools.product(range(F.q), repeat=len(monos)):
        yield XPoly(F, nvars, {e: c for e, c in zip(monos, cs) if c})


def _oracle_check_f(f: XPoly):
    if f.field.q > ORACLE_MAX_Q or f.deg_t + f.deg_xvec > ORACLE_MAX_DEG_F:
        raise OracleCeilingError(
            f"oracle limited to q <= {ORACLE_MAX_Q}, deg_t + deg_x <= {ORACLE_MAX_DEG_F}")


def brute_squarefree_oracle_f(f: XPoly) -> bool:
    """Search every non-unit s with s^2 | f by exact division."""
    _oracle_check_f(f)
    if not f:
        return False
    bounds = tuple(f.degree_in(i) // 2 for i in range(f.nvars + 1))
    for s in iter_xpolys(f.field, f.nvars, bounds):
        if s and not s.is_constant() and (s * s).divides(f):
            return False
    return True


def brute_divisors(f: XPoly, max_degs: tuple | None = None) -> Iterator[XPoly]:
    """Non-unit divisors of f within the given per-variable degree bounds."""
    if max_degs is None:
        max_degs = tuple(f.degree_in(i) for i in range(f.nvars + 1))
    for s in iter_xpolys(f.field, f.nvars, max_degs):
        if s and not s.is_constant() and s.divides(f):
            yield s
