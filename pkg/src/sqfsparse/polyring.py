"""Polynomials over F_q[t] (dense) and F_q[t][x_1..x_D] (sparse).

Coefficients are stored as integer codes of the underlying
:class:`~sqfsparse.ffield.FieldDescriptor`.  Integers passed to arithmetic
operators are mapped through Z -> F_q, so ``2 * f`` doubles ``f``; to build a
polynomial from a code use :meth:`TPoly.constant` / :meth:`XPoly.constant`.

In an :class:`XPoly` every exponent tuple is ``(e_t, e_1, ..., e_D)``;
position 0 is always ``t``.  Position ``i`` for ``i >= 1`` is ``x_i``.
"""
from __future__ import annotations

import math
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .ffield import FieldDescriptor, FieldElement, FieldError

#: degree of the zero polynomial; compares below every integer
NEG_INF = -math.inf

T = 0  # variable index of t in XPoly exponent tuples


class PolyError(ValueError):
    """Arity or field mismatch between polynomials."""


def _coerce_scalar(field: FieldDescriptor, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldError(f"cannot mix elements of {field!r} and {c.field!r}")
        return c.code
    if isinstance(c, int):
        return field.from_int(c)
    raise TypeError(f"not a scalar: {c!r}")


# ---------------------------------------------------------------------------
# F_q[t]
# ---------------------------------------------------------------------------

class TPoly:
    """Element of F_q[t]; ``coeffs[i]`` is the code of the t^i coefficient."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, field: FieldDescriptor, code: int) -> "TPoly":
        return cls(field, (field.check(code),))

    @classmethod
    def monomial(cls, field: FieldDescriptor, k: int, code: int = 1) -> "TPoly":
        return cls(field, [0] * k + [code])

    @classmethod
    def t(cls, field: FieldDescriptor) -> "TPoly":
        return cls(field, (0, 1))

    # --- structure ---

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == TPoly(self.field, (self.field.from_int(other),)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"TPoly({self.field!r}, {list(self.coeffs)})"

    def __str__(self) -> str:
        from .polytext import format_tpoly
        return format_tpoly(self)

    # --- arithmetic ---

    def _other(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            if other.field != self.field:
                raise PolyError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, FieldElement)):
            return TPoly(self.field, (_coerce_scalar(self.field, other),))
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b, F = self.coeffs, o.coeffs, self.field
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = F.add(out[i], bi)
        return TPoly(F, out)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        F = self.field
        return TPoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b, F = self.coeffs, o.coeffs, self.field
        if not a or not b:
            return TPoly(F)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return TPoly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = TPoly(self.field, (1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, code: int) -> "TPoly":
        F = self.field
        return TPoly(F, [F.mul(code, c) for c in self.coeffs])

    def shift(self, k: int) -> "TPoly":
        """Multiply by t^k."""
        return TPoly(self.field, (0,) * k + self.coeffs) if self.coeffs else self

    def __divmod__(self, other) -> tuple["TPoly", "TPoly"]:
        o = self._other(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = len(o.coeffs) - 1
        inv_lc = F.inv(o.lc)
        qt = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            c = F.mul(r[-1], inv_lc)
            s = len(r) - 1 - db
            qt[s] = c
            for i, bi in enumerate(o.coeffs):
                r[s + i] = F.sub(r[s + i], F.mul(c, bi))
            while r and r[-1] == 0:
                r.pop()
        return TPoly(F, qt), TPoly(F, r)

    def __floordiv__(self, other) -> "TPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "TPoly":
        return divmod(self, other)[1]

    def exquo(self, other) -> "TPoly":
        """Exact quotient; ArithmeticError if ``other`` does not divide."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "TPoly") -> bool:
        if not self:
            return not other
        return not (other % self)

    def monic(self) -> "TPoly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> "TPoly":
        F = self.field
        return TPoly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        """Evaluate at the field element with code ``x``."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def to_xpoly(self, nvars: int = 0) -> "XPoly":
        z = (0,) * nvars
        return XPoly(self.field, nvars, {(i,) + z: c for i, c in enumerate(self.coeffs) if c})


def gcd_t(u: TPoly, v: TPoly) -> TPoly:
    """Monic gcd in F_q[t] by Euclid's algorithm.

    >>> from sqfsparse.ffield import field_make
    >>> F = field_make(3)
    >>> str(gcd_t(TPoly(F, [0, 1]), TPoly(F, [0, 0, 1])))
    't'
    """
    if u.field != v.field:
        raise PolyError("field mismatch in gcd_t")
    if not u and not v:
        raise ValueError("gcd of two zero polynomials is undefined")
    while v:
        u, v = v, u % v
    return u.monic()


# ---------------------------------------------------------------------------
# F_q[t][x_1..x_D]
# ---------------------------------------------------------------------------

def _add_exp(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class XPoly:
    """Sparse element of F_q[t][x_1, ..., x_D].

    ``terms`` maps exponent tuples ``(e_t, e_1, ..., e_D)`` to nonzero codes.
    Instances are treated as immutable.
    """

    __slots__ = ("field", "nvars", "_terms")

    def __init__(self, field: FieldDescriptor, nvars: int, terms: Mapping[tuple, int] | None = None):
        if nvars < 0:
            raise PolyError("nvars must be >= 0")
        self.field = field
        self.nvars = nvars
        t = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars + 1:
                    raise PolyError(f"exponent {e} does not fit {nvars} x-variables")
                if c:
                    t[tuple(e)] = c
        self._terms = t

    @classmethod
    def _raw(cls, field, nvars, terms: dict) -> "XPoly":
        obj = cls.__new__(cls)
        obj.field, obj.nvars, obj._terms = field, nvars, terms
        return obj

    @classmethod
    def constant(cls, field: FieldDescriptor, nvars: int, code: int) -> "XPoly":
        return cls(field, nvars, {(0,) * (nvars + 1): field.check(code)})

    @classmethod
    def zero(cls, field: FieldDescriptor, nvars: int) -> "XPoly":
        return cls._raw(field, nvars, {})

    @classmethod
    def one(cls, field: FieldDescriptor, nvars: int) -> "XPoly":
        return cls.constant(field, nvars, 1)

    @classmethod
    def var(cls, field: FieldDescriptor, nvars: int, i: int) -> "XPoly":
        """The variable t (``i = 0``) or x_i (``1 <= i <= nvars``)."""
        if not 0 <= i <= nvars:
            raise PolyError(f"no variable with index {i} among t, x1..x{nvars}")
        e = [0] * (nvars + 1)
        e[i] = 1
        return cls._raw(field, nvars, {tuple(e): 1})

    @property
    def terms(self) -> Mapping[tuple, int]:
        return MappingProxyType(self._terms)

    # --- degrees ---

    def degree_in(self, i: int):
        return max((e[i] for e in self._terms), default=NEG_INF)

    @property
    def deg_t(self):
        return self.degree_in(T)

    def deg_x(self, i: int):
        return self.degree_in(i)

    @property
    def total_degree(self):
        return max((sum(e) for e in self._terms), default=NEG_INF)

    @property
    def deg_xvec(self):
        """Total degree in the x-variables only."""
        return max((sum(e[1:]) for e in self._terms), default=NEG_INF)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_code(self) -> int:
        return self._terms.get((0,) * (self.nvars + 1), 0)

    def leading_monomial(self) -> tuple:
        return max(self._terms)

    # --- comparison ---

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == XPoly(self.field, self.nvars, {(0,) * (self.nvars + 1): self.field.from_int(other)})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.field!r}, {self.nvars}, {dict(sorted(self._terms.items()))})"

    def __str__(self) -> str:
        from .polytext import format_xpoly
        return format_xpoly(self)

    # --- arithmetic ---

    def _other(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            if other.field != self.field:
                raise PolyError(f"field mismatch: {self.field!r} vs {other.field!r}")
            if other.nvars != self.nvars:
                raise PolyError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, TPoly):
            if other.field != self.field:
                raise PolyError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other.to_xpoly(self.nvars)
        if isinstance(other, (int, FieldElement)):
            c = _coerce_scalar(self.field, other)
            return XPoly._raw(self.field, self.nvars, {(0,) * (self.nvars + 1): c} if c else {})
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        F = self.field
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return XPoly._raw(F, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        F = self.field
        return XPoly._raw(F, self.nvars, {e: F.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        F = self.field
        add, mul = F.add, F.mul
        out: dict = {}
        for ea, ca in self._terms.items():
            for eb, cb in o._terms.items():
                e = _add_exp(ea, eb)
                out[e] = add(out.get(e, 0), mul(ca, cb))
        return XPoly._raw(F, self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = XPoly.one(self.field, self.nvars), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, code: int) -> "XPoly":
        F = self.field
        if not code:
            return XPoly.zero(F, self.nvars)
        return XPoly._raw(F, self.nvars, {e: F.mul(code, c) for e, c in self._terms.items()})

    def mul_monomial(self, mono: tuple, code: int = 1) -> "XPoly":
        F = self.field
        return XPoly._raw(F, self.nvars, {_add_exp(e, mono): F.mul(code, c) for e, c in self._terms.items()})

    def exquo(self, other: "XPoly") -> "XPoly":
        """Exact quotient by lex-ordered division; ArithmeticError if inexact."""
        o = self._other(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        lm = o.leading_monomial()
        inv_lc = F.inv(o._terms[lm])
        rem = dict(self._terms)
        quot: dict = {}
        ot = list(o._terms.items())
        while rem:
            m = max(rem)
            diff = tuple(a - b for a, b in zip(m, lm))
            if min(diff) < 0:
                raise ArithmeticError("inexact polynomial division")
            c = F.mul(rem[m], inv_lc)
            quot[diff] = c
            for e, ce in ot:
                k = _add_exp(e, diff)
                s = F.sub(rem.get(k, 0), F.mul(c, ce))
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return XPoly._raw(F, self.nvars, quot)

    def divides(self, other: "XPoly") -> bool:
        if not self:
            return not other
        try:
            other.exquo(self)
        except ArithmeticError:
            return False
        return True

    def monic(self) -> "XPoly":
        """Scale so the lex-leading coefficient is 1."""
        if not self._terms:
            return self
        return self.scale(self.field.inv(self._terms[self.leading_monomial()]))

    # --- views ---

    def coefficients_in(self, i: int) -> list["XPoly"]:
        """``[c_0, c_1, ...]`` with ``self = sum c_j * v^j`` for variable ``i``."""
        if not self._terms:
            return []
        out = [dict() for _ in range(self.degree_in(i) + 1)]
        for e, c in self._terms.items():
            k = e[i]
            out[k][e[:i] + (0,) + e[i + 1:]] = c
        return [XPoly._raw(self.field, self.nvars, d) for d in out]

    def t_coefficients(self) -> list["CoefPoly"]:
        """δ_0..δ_k with ``self = sum δ_i(x) t^i``."""
        return [CoefPoly._raw(self.field, self.nvars, c._terms) for c in self.coefficients_in(T)]

    def x_coefficients(self) -> dict[tuple, TPoly]:
        """Map from x-exponent tuples to their F_q[t] coefficients."""
        acc: dict[tuple, dict[int, int]] = {}
        for e, c in self._terms.items():
            acc.setdefault(e[1:], {})[e[0]] = c
        out = {}
        for xe, d in acc.items():
            coeffs = [0] * (max(d) + 1)
            for k, c in d.items():
                coeffs[k] = c
            out[xe] = TPoly(self.field, coeffs)
        return out

    def to_tpoly(self) -> TPoly:
        if self.deg_xvec > 0:
            raise PolyError(f"{self} involves x-variables")
        d = {e[0]: c for e, c in self._terms.items()}
        coeffs = [0] * (max(d) + 1) if d else []
        for k, c in d.items():
            coeffs[k] = c
        return TPoly(self.field, coeffs)

    def as_coef(self) -> "CoefPoly":
        return CoefPoly(self.field, self.nvars, self._terms)

    # --- evaluation ---

    def evaluate_x(self, point: Sequence[TPoly]) -> TPoly:
        """Substitute x_i := point[i-1] (elements of F_q[t]) and collapse to F_q[t]."""
        if len(point) != self.nvars:
            raise PolyError(f"expected {self.nvars} values, got {len(point)}")
        F = self.field
        for u in point:
            if u.field != F:
                raise PolyError("field mismatch in evaluate_x")
        powers: list[dict[int, TPoly]] = [{} for _ in point]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = point[i] ** k
            return cache[k]

        acc = [0]
        for e, c in self._terms.items():
            term = TPoly.monomial(F, e[0], c)
            for i, k in enumerate(e[1:]):
                if k:
                    term = term * pw(i, k)
                    if not term:
                        break
            if len(term.coeffs) > len(acc):
                acc.extend([0] * (len(term.coeffs) - len(acc)))
            for j, tj in enumerate(term.coeffs):
                acc[j] = F.add(acc[j], tj)
        return TPoly(F, acc)

    def evaluate_scalars(self, xs: Sequence[int]) -> TPoly:
        """Substitute constants (codes) for x_1..x_D; result in F_q[t]."""
        if len(xs) != self.nvars:
            raise PolyError(f"expected {self.nvars} values, got {len(xs)}")
        F = self.field
        acc: dict[int, int] = {}
        for e, c in self._terms.items():
            v = c
            for x, k in zip(xs, e[1:]):
                if k:
                    v = F.mul(v, F.pow(x, k))
                    if not v:
                        break
            if v:
                acc[e[0]] = F.add(acc.get(e[0], 0), v)
        coeffs = [0] * (max(acc) + 1) if acc else []
        for k, v in acc.items():
            coeffs[k] = v
        return TPoly(F, coeffs)

    def __call__(self, t: int, xs: Sequence[int]) -> int:
        """Evaluate at t and x (all codes)."""
        return self.evaluate_scalars(xs)(t)

    def substitute_x(self, images: Sequence["XPoly"]) -> "XPoly":
        """Ring homomorphism fixing F_q[t] with x_i -> images[i-1]."""
        return substitute_x(self, images)

    def partial_derivative(self, var: int) -> "XPoly":
        return partial_derivative(self, var)


class CoefPoly(XPoly):
    """An :class:`XPoly` free of t, read as an element of F_q[x_1..x_D]."""

    __slots__ = ()

    def __init__(self, field, nvars, terms=None):
        super().__init__(field, nvars, terms)
        if any(e[0] for e in self._terms):
            raise PolyError("CoefPoly must not involve t")

    @classmethod
    def _raw(cls, field, nvars, terms: dict) -> "CoefPoly":
        obj = cls.__new__(cls)
        obj.field, obj.nvars, obj._terms = field, nvars, dict(terms)
        return obj

    def evaluate(self, xs: Sequence[int]) -> int:
        """Value at the point ``xs`` of F_q^D (codes)."""
        return self.evaluate_scalars(xs)(0)

    def evaluator(self) -> "PrefixEvaluator":
        """A callable for many evaluations at points sharing long prefixes."""
        return PrefixEvaluator(self)


class PrefixEvaluator:
    """Evaluate a :class:`CoefPoly` at a stream of points.

    x_1, x_2, ... are substituted one at a time and every partial
    substitution is cached, so consecutive points that agree on their first
    j coordinates only redo the work for the later ones.  Grid enumeration
    in odometer order (last coordinate fastest) therefore costs little more
    than a univariate evaluation per point.
    """

    def __init__(self, poly: CoefPoly):
        self.field = poly.field
        self.nvars = poly.nvars
        # level j holds the polynomial in x_{j+1}..x_D after fixing x_1..x_j
        self._levels: list[dict] = [{e[1:]: c for e, c in poly.terms.items()}] + [None] * poly.nvars
        self._prefix: list[int | None] = [None] * poly.nvars

    def __call__(self, xs: Sequence[int]) -> int:
        if len(xs) != self.nvars:
            raise PolyError(f"expected {self.nvars} values, got {len(xs)}")
        F = self.field
        j = 0
        while j < self.nvars and self._prefix[j] == xs[j]:
            j += 1
        for i in range(j, self.nvars):
            v = xs[i]
            src, out = self._levels[i], {}
            powers = [1]
            for e, c in src.items():
                k = e[0]
                while len(powers) <= k:
                    powers.append(F.mul(powers[-1], v))
                w = F.mul(c, powers[k])
                if w:
                    key = e[1:]
                    out[key] = F.add(out.get(key, 0), w)
            self._levels[i + 1] = out
            self._prefix[i] = v
        return self._levels[self.nvars].get((), 0)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def evaluate_x(f: XPoly, point: Sequence[TPoly]) -> TPoly:
    return f.evaluate_x(point)


def substitute_x(f: XPoly, images: Sequence[XPoly]) -> XPoly:
    """Replace each x_i in ``f`` by ``images[i-1]``.

    All images must share a field and a number of variables D'; the result
    lives in F_q[t][x_1..x_D'].
    """
    if len(images) != f.nvars:
        raise PolyError(f"expected {f.nvars} images, got {len(images)}")
    if not images:
        return f
    F, nv = f.field, images[0].nvars
    for g in images:
        if g.field != F or g.nvars != nv:
            raise PolyError("images must share field and nvars")
    cache: list[dict[int, XPoly]] = [{1: g} for g in images]

    def pw(i, k):
        c = cache[i]
        if k not in c:
            c[k] = images[i] ** k
        return c[k]

    out = XPoly.zero(F, nv)
    tz = (0,) * nv
    for e, c in f._terms.items():
        term = XPoly._raw(F, nv, {(e[0],) + tz: c})
        for i, k in enumerate(e[1:]):
            if k:
                term = term * pw(i, k)
        out = out + term
    return out


def partial_derivative(f: XPoly, var: int) -> XPoly:
    """Formal derivative in t (``var = 0``) or x_var."""
    if not 0 <= var <= f.nvars:
        raise PolyError(f"unknown variable index {var} for {f.nvars} x-variables")
    F = f.field
    out = {}
    for e, c in f._terms.items():
        k = e[var]
        if k:
            v = F.mul(F.from_int(k), c)
            if v:
                out[e[:var] + (k - 1,) + e[var + 1:]] = v
    return XPoly._raw(F, f.nvars, out)


def content_and_primitive(f: XPoly) -> tuple[TPoly, XPoly]:
    """Split f = content * primitive with content the monic gcd of its x-coefficients."""
    if not f:
        raise ValueError("content of the zero polynomial is undefined")
    xc = f.x_coefficients()
    g = None
    for u in xc.values():
        g = u.monic() if g is None else gcd_t(g, u)
        if g.degree == 0:
            break
    F = f.field
    terms = {}
    for xe, u in xc.items():
        for k, c in enumerate(u.exquo(g).coeffs):
            if c:
                terms[(k,) + xe] = c
    return g, XPoly._raw(F, f.nvars, terms)


def pth_power_split(f: XPoly) -> XPoly | None:
    """g with g^p == f when every exponent of f is divisible by p, else None."""
    F = f.field
    p = F.p
    out = {}
    for e, c in f._terms.items():
        if any(k % p for k in e):
            return None
        out[tuple(k // p for k in e)] = F.pth_root(c)
    return XPoly._raw(F, f.nvars, out)


# --- multivariate gcd (recursive primitive PRS) -----------------------------

def _pseudo_rem(a: XPoly, b: XPoly, v: int) -> XPoly:
    db = b.degree_in(v)
    bc = b.coefficients_in(v)
    lcb = bc[-1]
    r = a
    while r and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lcr = r.coefficients_in(v)[-1]
        mono = [0] * (a.nvars + 1)
        mono[v] = dr - db
        r = r * lcb - (lcr * b).mul_monomial(tuple(mono))
    return r


def _content_in(f: XPoly, v: int) -> XPoly:
    g = None
    for c in f.coefficients_in(v):
        if c:
            g = c if g is None else poly_gcd(g, c)
            if g.is_constant():
                break
    return g.monic()


def poly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Gcd in F_q[t, x_1..x_D], normalized to lex-leading coefficient 1."""
    o = a._other(b)
    if not a:
        return o.monic()
    if not o:
        return a.monic()
    present = [i for i in range(a.nvars + 1) if a.degree_in(i) > 0 or o.degree_in(i) > 0]
    if not present:
        return XPoly.one(a.field, a.nvars)
    v = present[-1]
    ca, cb = _content_in(a, v), _content_in(o, v)
    c = poly_gcd(ca, cb) if len(present) > 1 else XPoly.one(a.field, a.nvars)
    pa, pb = a.exquo(ca), o.exquo(cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while pb and pb.degree_in(v) > 0:
        r = _pseudo_rem(pa, pb, v)
        pa, pb = pb, (r.exquo(_content_in(r, v)) if r else r)
    g = pa if not pb else XPoly.one(a.field, a.nvars)
    if g.degree_in(v) <= 0:
        g = XPoly.one(a.field, a.nvars)
    else:
        g = g.exquo(_content_in(g, v))
    return (c * g).monic()
