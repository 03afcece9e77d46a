"""Exact arithmetic in GF(q) for prime powers q.

Elements are encoded by a canonical integer index: the element with
coefficient vector (c_0, ..., c_{n-1}) over GF(p), taken low-to-high in the
polynomial basis 1, t, ..., t^{n-1}, has index sum(c_i * p**i).  Index 0 is
zero and index 1 is one.  Every graph builder downstream works on these
indices directly; :class:`FieldElement` is the user-facing wrapper.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

__all__ = [
    "NotAPrimePower",
    "FieldError",
    "Field",
    "FieldElement",
    "field_new",
    "add",
    "mul",
    "neg",
    "inv",
    "double",
    "elements",
    "element_from_index",
]

MAX_ORDER = 2**20

# Monic moduli, coefficients low-to-high.  Checked for irreducibility on use.
MODULUS_TABLE: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 6, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    81: (2, 0, 0, 2, 1),
    121: (2, 7, 1),
    125: (3, 3, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
}

# Full add/mul tables are built up to this order; beyond it arithmetic is
# computed on demand.
_TABLE_LIMIT = 256


class FieldError(ValueError):
    pass


class NotAPrimePower(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, n) with q == p**n, or raise NotAPrimePower."""
    if not isinstance(q, int) or q < 2:
        raise NotAPrimePower(f"{q!r} is not a prime power")
    p = next((d for d in range(2, int(q**0.5) + 1) if q % d == 0), q)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise NotAPrimePower(f"{q} has at least two distinct prime factors")
    return p, n


# -- polynomials over GF(p) as coefficient lists, low-to-high ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        coef = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = list(modulus)
    n = len(m) - 1
    if n < 1 or m[-1] % p != 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(m, list(low) + [1], p):
                return False
    return True


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest (low-to-high) monic irreducible of degree n."""
    for low in itertools.product(range(p), repeat=n):
        # itertools.product varies the last slot fastest; reverse so that the
        # constant term is the most significant key
        cand = tuple(reversed(low)) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {n} over GF({p})")


class Field:
    """GF(q) with arithmetic on canonical integer indices.

    Instances are immutable after construction and cached per order, so
    ``Field(9) is Field(9)`` holds when created via :func:`field_new`.
    """

    def __init__(self, q: int, modulus=None):
        p, n = prime_power_decomposition(q)
        if q > MAX_ORDER:
            raise FieldError(f"fields larger than 2**20 are not supported (q={q})")
        self.q, self.p, self.n = q, p, n
        if n == 1:
            self.modulus = (0, 1)
        else:
            if modulus is None:
                modulus = MODULUS_TABLE.get(q) or find_irreducible(p, n)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != n + 1 or not is_irreducible(modulus, p):
                raise FieldError(f"{modulus} is not a monic irreducible of degree {n} over GF({p})")
            self.modulus = modulus
        self._add = self._mul = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"Field(q={self.q}, p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    # -- encoding --------------------------------------------------------

    def coeffs(self, i: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.n):
            i, r = divmod(i, p)
            out.append(r)
        return tuple(out)

    def index(self, coeffs) -> int:
        return sum(c * self.p**k for k, c in enumerate(coeffs))

    def metadata(self) -> dict:
        return {"q": self.q, "p": self.p, "n": self.n, "modulus": list(self.modulus)}

    # -- raw arithmetic on indices -----------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.index([(x + y) % self.p for x, y in zip(ca, cb)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        p, n = self.p, self.n
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        r = _poly_mod(prod, list(self.modulus), p)
        return self.index(r + [0] * (n - len(r)))

    def _build_tables(self):
        q = self.q
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]

    def add(self, a: int, b: int) -> int:
        return self._add[a][b] if self._add is not None else self._add_raw(a, b)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b] if self._mul is not None else self._mul_raw(a, b)

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        return self.index([-c % self.p for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def double(self, a: int) -> int:
        return self.add(a, a)

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        # a^(q-2) = a^-1 in the multiplicative group of order q-1
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.q)]

    def __call__(self, value) -> "FieldElement":
        """Coerce an index or coefficient sequence into an element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return element_from_index(self, value)
        return FieldElement(self, self.index([int(c) % self.p for c in value]))


@dataclass(frozen=True)
class FieldElement:
    field: Field = dc_field(repr=False, compare=False)
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise FieldError(f"index {self.index} out of range for GF({self.field.q})")

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.field == other.field and self.index == other.index

    def __hash__(self):
        return hash((self.field.q, self.index))

    def __lt__(self, other):
        return self.index < _idx(self.field, other)

    def __int__(self):
        return self.index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def _wrap(self, i):
        return FieldElement(self.field, i)

    def __add__(self, o):
        return self._wrap(self.field.add(self.index, _idx(self.field, o)))

    __radd__ = __add__

    def __sub__(self, o):
        return self._wrap(self.field.sub(self.index, _idx(self.field, o)))

    def __rsub__(self, o):
        return self._wrap(self.field.sub(_idx(self.field, o), self.index))

    def __mul__(self, o):
        return self._wrap(self.field.mul(self.index, _idx(self.field, o)))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __truediv__(self, o):
        return self._wrap(self.field.div(self.index, _idx(self.field, o)))

    def __pow__(self, e: int):
        if e < 0:
            return self._wrap(self.field.pow(self.field.inv(self.index), -e))
        return self._wrap(self.field.pow(self.index, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.index))


def _idx(f: Field, x) -> int:
    if isinstance(x, FieldElement):
        if x.field != f:
            raise FieldError("operands belong to different fields")
        return x.index
    if isinstance(x, int):
        # plain integers act through the prime subfield, like 2 in 2ab
        return f.index([x % f.p]) if f.n > 1 else x % f.p
    return NotImplemented


@lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    """Build (and cache) GF(q) with the normative modulus choice."""
    return Field(q)


def element_from_index(f: Field, i: int) -> FieldElement:
    return FieldElement(f, i)


def elements(f: Field) -> list[FieldElement]:
    return f.elements()


def add(f: Field, x: FieldElement, y: FieldElement) -> FieldElement:
    return FieldElement(f, f.add(_idx(f, x), _idx(f, y)))


def mul(f: Field, x: FieldElement, y: FieldElement) -> FieldElement:
    return FieldElement(f, f.mul(_idx(f, x), _idx(f, y)))


def neg(f: Field, x: FieldElement) -> FieldElement:
    return FieldElement(f, f.neg(_idx(f, x)))


def inv(f: Field, x: FieldElement) -> FieldElement:
    return FieldElement(f, f.inv(_idx(f, x)))


def double(f: Field, x: FieldElement) -> FieldElement:
    """x + x; identically zero in characteristic 2."""
    return FieldElement(f, f.double(_idx(f, x)))
