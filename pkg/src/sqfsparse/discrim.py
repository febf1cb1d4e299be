"""Resultants and the universal discriminant D^k.

Every routine here is generic over a *carrier*: any commutative integral
domain whose elements support ``+ - *``, integer coercion, truthiness for
zero tests and an ``exquo`` method for exact division.  Field elements,
:class:`~sqfsparse.polyring.TPoly` and :class:`~sqfsparse.polyring.XPoly`
all qualify.  Because the same determinant expansion is evaluated in every
carrier, D^k commutes with ring homomorphisms such as evaluation at a point.

Conventions: the Sylvester matrix lists the rows of f before the rows of g,
coefficients from high to low degree.  D^k carries the classical sign
(-1)^(k(k-1)/2), so D^2(g0, g1, g2) = g1^2 - 4 g2 g0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .polyring import CoefPoly, XPoly


class DiscriminantError(RuntimeError):
    """An exact division that must succeed did not."""


def _zero_like(x):
    return x * 0


def _one_like(x):
    return x * 0 + 1


def bareiss_det(matrix: Sequence[Sequence[Any]], one=None):
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(matrix)
    if n == 0:
        if one is None:
            raise ValueError("empty matrix needs an explicit carrier one")
        return one
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _zero_like(m[0][0])
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                v = pivot * row_i[j]
                if mik:
                    v = v - mik * row_k[j]
                if prev is not None:
                    v = v.exquo(prev)
                row_i[j] = v
            row_i[k] = _zero_like(pivot)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: Sequence[Any], deg_f: int, g: Sequence[Any], deg_g: int) -> list[list[Any]]:
    """The (deg_f + deg_g)-square Sylvester matrix at the given formal degrees.

    ``f`` and ``g`` are coefficient lists, low degree first, of length at
    most ``deg + 1`` (missing high coefficients are zero).
    """
    if deg_f < 0 or deg_g < 0:
        raise ValueError("formal degrees must be non-negative")
    if len(f) > deg_f + 1 or len(g) > deg_g + 1:
        raise ValueError("coefficient list longer than its formal degree allows")
    sample = next(iter(list(f) + list(g)), None)
    if sample is None:
        raise ValueError("cannot infer the carrier from two empty coefficient lists")
    zero = _zero_like(sample)
    fc = [f[i] if i < len(f) else zero for i in range(deg_f, -1, -1)]
    gc = [g[i] if i < len(g) else zero for i in range(deg_g, -1, -1)]
    size = deg_f + deg_g
    rows = []
    for r in range(deg_g):
        rows.append([zero] * r + fc + [zero] * (size - r - deg_f - 1))
    for r in range(deg_f):
        rows.append([zero] * r + gc + [zero] * (size - r - deg_g - 1))
    return rows


@dataclass(frozen=True)
class SylvesterProblem:
    """Two polynomials in a distinguished variable with coefficients in a carrier.

    Coefficient lists are low degree first; actual degrees may fall short
    of the formal ones.
    """

    f: tuple
    formal_deg_f: int
    g: tuple
    formal_deg_g: int

    def __post_init__(self):
        if self.formal_deg_f < 0 or self.formal_deg_g < 0:
            raise ValueError("formal degrees must be non-negative")


def sylvester_resultant(prob: SylvesterProblem):
    """Res(f, g) at the formal degrees of ``prob``."""
    mat = sylvester_matrix(prob.f, prob.formal_deg_f, prob.g, prob.formal_deg_g)
    sample = next(iter(prob.f + prob.g))
    return bareiss_det(mat, one=_one_like(sample))


def _minor(mat, row: int, col: int):
    return [r[:col] + r[col + 1:] for i, r in enumerate(mat) if i != row]


def universal_disc(coeffs: Sequence[Any], k: int, method: str = "auto"):
    """D^k(δ_0, ..., δ_k) evaluated in the carrier of ``coeffs``.

    ``method="division"`` computes Res(f, f')/δ_k at formal degrees
    (k, k-1) and needs δ_k != 0.  ``method="cofactor"`` expands the
    Sylvester determinant along its first column, whose only entries are
    δ_k (top row of f) and k·δ_k (top row of f'); the common factor δ_k
    cancels symbolically, so this route is division-free and also valid when
    δ_k = 0.  ``"auto"`` divides when it can.
    """
    if k < 1:
        raise ValueError(f"D^k needs k >= 1, got {k}")
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    if len(coeffs) > k + 1:
        raise ValueError(f"{len(coeffs)} coefficients exceed formal degree {k}")
    zero = _zero_like(coeffs[0])
    one = zero + 1
    delta = coeffs + [zero] * (k + 1 - len(coeffs))
    deriv = [i * delta[i] for i in range(1, k + 1)]
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    if method == "auto":
        method = "division" if delta[k] else "cofactor"
    if method == "division":
        if not delta[k]:
            raise ValueError("division route needs a nonzero leading coefficient")
        res = bareiss_det(sylvester_matrix(delta, k, deriv, k - 1), one=one)
        try:
            raw = res.exquo(delta[k])
        except ArithmeticError as exc:
            raise DiscriminantError(f"Res(f, f') not divisible by the leading coefficient (k={k})") from exc
    elif method == "cofactor":
        mat = sylvester_matrix(delta, k, deriv, k - 1)
        # rows with a nonzero first-column entry, as (row, entry / δ_k)
        hits = [(0, 1), (k - 1, k)] if k >= 2 else [(0, 1)]
        raw = zero
        for row, mult in hits:
            cof = bareiss_det(_minor(mat, row, 0), one=one)
            term = mult * cof
            raw = raw + term if row % 2 == 0 else raw - term
    else:
        raise ValueError(f"unknown method {method!r}")
    return raw if sign == 1 else -raw


def disc_t(f: XPoly, k: int | None = None, method: str = "auto") -> CoefPoly:
    """D^k_t f: D^k applied to the t-coefficients δ_i(x) of f."""
    deg = f.deg_t
    if k is None:
        k = deg
    if k < 1:
        raise ValueError(f"D^k needs k >= 1, got {k}")
    if deg > k:
        raise ValueError(f"deg_t f = {deg} exceeds k = {k}")
    delta = f.t_coefficients() or [CoefPoly(f.field, f.nvars)]
    d = universal_disc(delta, k, method=method)
    return CoefPoly(f.field, f.nvars, d.terms)
