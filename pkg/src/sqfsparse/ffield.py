"""Finite fields GF(p^n) with integer-coded elements.

An element of GF(p^n) is the residue class of a polynomial
c_0 + c_1 g + ... + c_{n-1} g^{n-1} in the generator g, and is coded by the
radix-p integer c_0 + c_1 p + ... + c_{n-1} p^{n-1}.  The code order is the
order produced by :func:`enumerate_field`, so codes double as the
serialized form of elements in reports and in the polynomial text syntax.

Polynomials elsewhere in the package store raw codes and call the
descriptor's arithmetic methods (``add``, ``mul``, ...).  :class:`FieldElement`
wraps a code together with its descriptor for user-facing work.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

DEFAULT_FIELD_CEILING = 2**20

# full addition tables are built up to this size
_ADD_TABLE_MAX_Q = 256


class FieldError(ValueError):
    """Invalid field parameters or cross-field arithmetic."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- dense polynomials over F_p as lists, low degree first -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _fp_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = list(a)
    _trim(a)
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_fp(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p (coefficients low first).

    Degrees up to 4 are decided by trial division with every monic
    polynomial of degree at most n/2; above that by the criterion
    gcd(f, x^(p^i) - x) = 1 for i <= n/2.
    """
    m = _trim(list(modulus))
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if n <= 4:
        for d in range(1, n // 2 + 1):
            for low in itertools.product(range(p), repeat=d):
                if not _fp_mod(m, list(low) + [1], p):
                    return False
        return True
    xp = [0, 1]
    for _ in range(n // 2):
        xp = _fp_powmod(xp, p, m, p)
        g = _fp_gcd(m, _fp_sub(xp, [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for code in range(p**n):
        low = [(code // p**i) % p for i in range(n)]
        cand = low + [1]
        if is_irreducible_fp(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldDescriptor:
    """The field GF(p^n) = F_p[g]/(modulus).

    ``modulus`` holds n+1 residues, low degree first, and is monic.
    Arithmetic methods act on integer codes in ``range(q)``.
    """

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.n < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.n}")
        m = tuple(self.modulus)
        if len(m) != self.n + 1 or m[-1] != 1 or any(not 0 <= c < self.p for c in m):
            raise FieldError(f"modulus {m} is not a monic degree-{self.n} polynomial over F_{self.p}")
        if not is_irreducible_fp(m, self.p):
            raise FieldError(f"modulus {m} is reducible over F_{self.p}")

    @cached_property
    def q(self) -> int:
        return self.p**self.n

    def __repr__(self) -> str:
        return f"GF({self.spec})"

    @property
    def spec(self) -> str:
        """The field spec string, ``"p"`` or ``"p^n"``."""
        return str(self.p) if self.n == 1 else f"{self.p}^{self.n}"

    # --- code <-> coefficient vectors ---

    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.n):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_digits(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.n:
            raise FieldError(f"expected at most {self.n} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element code of {self!r}")
        return a

    # --- tables ---

    def _poly_mul_code(self, a: int, b: int) -> int:
        prod = _fp_mul(_trim(list(self.digits(a))), _trim(list(self.digits(b))), self.p)
        return self.from_digits(_fp_mod(prod, self.modulus, self.p))

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        q = self.q
        order = q - 1
        prime_factors = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        for g in range(2 if self.n == 1 else self.p, q):
            exp = [1] * order
            x = 1
            for i in range(1, order):
                x = self._poly_mul_code(x, g) if self.n > 1 else x * g % q
                exp[i] = x
            if all(exp[order // r] != 1 for r in prime_factors):
                break
        else:
            # q == 2
            exp = [1]
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        return exp, log

    @cached_property
    def _add_table(self) -> list[int] | None:
        q = self.q
        if self.n == 1 or self.p == 2 or q > _ADD_TABLE_MAX_Q:
            return None
        return [self._add_digits(a, b) for a in range(q) for b in range(q)]

    @cached_property
    def _neg_table(self) -> list[int]:
        return [self.from_digits([-c for c in self.digits(a)]) for a in range(self.q)]

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        code, scale = 0, 1
        for _ in range(self.n):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            code += ((ra + rb) % p) * scale
            scale *= p
        return code

    # --- arithmetic on codes ---

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._add_table
        if table is not None:
            return table[a * self.q + b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._exp_log
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._exp_log
        return exp[-log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.n == 1:
            return pow(a, e, self.p)
        exp, log = self._exp_log
        return exp[log[a] * e % (self.q - 1)]

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> F_q."""
        return k % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        return self.pow(a, self.p ** (self.n - 1))

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, self.check(code))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)


class FieldElement:
    """An element of a :class:`FieldDescriptor`; immutable.

    Arithmetic between elements of different fields raises FieldError.
    Plain integers are coerced through Z -> F_q (so ``x + 1`` and ``2 * x``
    work; note that this is *not* the code interpretation).
    """

    __slots__ = ("field", "code")

    def __init__(self, field: FieldDescriptor, code: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.digits(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot mix elements of {self.field!r} and {other.field!r}")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, code: int) -> "FieldElement":
        return FieldElement(self.field, code)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(b, self.code))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(b, self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.code))

    def exquo(self, other: "FieldElement") -> "FieldElement":
        return self / other

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"FieldElement({self.field!r}, {self.code})"

    def __str__(self) -> str:
        return str(self.code)


def field_make(p: int, n: int = 1, ceiling: int = DEFAULT_FIELD_CEILING) -> FieldDescriptor:
    """GF(p^n) with the lexicographically smallest monic irreducible modulus.

    Candidates are ordered by the radix-p code of their lower n coefficients,
    so the choice is deterministic and needs no modulus tables.

    >>> field_make(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n}")
    if p**n > ceiling:
        raise FieldError(f"field size {p}^{n} exceeds the enumeration ceiling {ceiling}")
    return FieldDescriptor(p, n, _smallest_irreducible(p, n))


_SPEC_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_field_spec(spec: str, ceiling: int = DEFAULT_FIELD_CEILING) -> FieldDescriptor:
    """Parse ``"p"`` or ``"p^n"`` into a field descriptor."""
    m = _SPEC_RE.match(str(spec))
    if not m:
        raise FieldError(f"malformed field spec {spec!r}; expected 'p' or 'p^n'")
    return field_make(int(m.group(1)), int(m.group(2) or 1), ceiling=ceiling)


def field_from_q(q: int, ceiling: int = DEFAULT_FIELD_CEILING) -> FieldDescriptor:
    """The field of order q (q must be a prime power)."""
    for p in range(2, q + 1):
        if q % p == 0:
            n, r = 0, q
            while r % p == 0:
                r //= p
                n += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return field_make(p, n, ceiling=ceiling)
    raise FieldError(f"{q} is not a prime power")


def frobenius(x: FieldElement) -> FieldElement:
    """x -> x^p."""
    return FieldElement(x.field, x.field.frobenius(x.code))


def pth_root(x: FieldElement) -> FieldElement:
    """The unique y with y^p = x, computed as x^(p^(n-1))."""
    return FieldElement(x.field, x.field.pth_root(x.code))


def enumerate_field(desc: FieldDescriptor) -> list[FieldElement]:
    return [FieldElement(desc, c) for c in range(desc.q)]


def iter_codes(desc: FieldDescriptor) -> Iterator[int]:
    return iter(range(desc.q))
