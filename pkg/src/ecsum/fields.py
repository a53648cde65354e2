"""Exact arithmetic over the rationals and odd prime fields.

A :class:`FieldDescriptor` names the field; :class:`FieldValue` is an
immutable element in canonical form (reduced fraction with positive
denominator, or a residue in ``[0, p)``), so equality is structural.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import BadPrime, DescriptorMismatch, DivisionByZero

RATIONALS = "Q"
PRIME_FIELD = "Fp"

DEFAULT_HEIGHT = 10

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int, rounds: int = 8, rng: random.Random | None = None) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 via the fixed bases."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= 3317044064679887385961981:
        rng = rng or random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(rounds)]
    for base in bases:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            p = self.modulus
            if not isinstance(p, int) or p <= 3:
                raise BadPrime(f"modulus must be a prime > 3, got {p!r}")
            if not is_probable_prime(p):
                raise BadPrime(f"{p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldDescriptor:
        return QQ

    @classmethod
    def prime(cls, p: int) -> FieldDescriptor:
        return cls(PRIME_FIELD, int(p))

    @classmethod
    def parse(cls, text: str) -> FieldDescriptor:
        """Parse ``"Q"`` or ``"Fp:<prime>"``."""
        text = text.strip()
        if text == RATIONALS:
            return QQ
        head, sep, tail = text.partition(":")
        if head == PRIME_FIELD and sep and tail.strip().isdigit():
            return cls.prime(int(tail))
        raise ValueError(f"bad field descriptor {text!r}; expected 'Q' or 'Fp:<prime>'")

    def __str__(self) -> str:
        return RATIONALS if self.kind == RATIONALS else f"{PRIME_FIELD}:{self.modulus}"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    def __call__(self, value) -> FieldValue:
        """Coerce an int, Fraction, string or FieldValue into this field."""
        if isinstance(value, FieldValue):
            if value.field != self:
                raise DescriptorMismatch(f"{value.field} value used in {self}")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == RATIONALS:
            return FieldValue._make(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise DivisionByZero(f"{value} has no image in {self}")
            return FieldValue._make(
                self, value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
            )
        return FieldValue._make(self, int(value) % self.modulus)

    @property
    def zero(self) -> FieldValue:
        return self(0)

    @property
    def one(self) -> FieldValue:
        return self(1)

    def sample(self, rng: random.Random | int, height: int = DEFAULT_HEIGHT) -> FieldValue:
        return fe_sample(self, rng, height)


QQ = FieldDescriptor(RATIONALS)

Scalar = Union[int, Fraction, "FieldValue"]


class FieldValue:
    """An immutable field element in canonical form."""

    __slots__ = ("field", "value")

    field: FieldDescriptor
    value: int | Fraction

    @classmethod
    def _make(cls, field, value):
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "value", value)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FieldValue is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldValue):
            if other.field is not self.field and other.field != self.field:
                raise DescriptorMismatch(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field(other).value
        return NotImplemented

    def _wrap(self, v):
        if self.field.modulus is not None:
            return FieldValue._make(self.field, v % self.field.modulus)
        return FieldValue._make(self.field, v)

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._wrap(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._wrap(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self._wrap(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def inverse(self) -> FieldValue:
        if not self.value:
            raise DivisionByZero(f"inverse of zero in {self.field}")
        if self.field.modulus is not None:
            return FieldValue._make(self.field, pow(self.value, -1, self.field.modulus))
        return FieldValue._make(self.field, 1 / self.value)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * FieldValue._make(self.field, v).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldValue._make(self.field, v) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.modulus is not None:
            return FieldValue._make(self.field, pow(self.value, k, self.field.modulus))
        return FieldValue._make(self.field, self.value**k)

    def __eq__(self, other):
        if isinstance(other, FieldValue):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field(other).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def canonical(self) -> FieldValue:
        """Re-canonicalize; a no-op for values built through this module."""
        return self.field(self.value)

    def __str__(self):
        """Canonical string: decimal residue, or ``num/den`` for rationals."""
        v = self.value
        if isinstance(v, Fraction):
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return str(v)

    def __repr__(self):
        return f"FieldValue({self}, {self.field})"


def _check_same(u: FieldValue, v: FieldValue):
    if u.field != v.field:
        raise DescriptorMismatch(f"cannot combine {u.field} and {v.field}")


def fe_arith(op: str, u: FieldValue, v: FieldValue | None = None) -> FieldValue:
    """Apply ``add``, ``sub``, ``mul`` or ``neg`` (which ignores ``v``)."""
    if op == "neg":
        return -u
    if v is None:
        raise TypeError(f"{op} needs two operands")
    _check_same(u, v)
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown field operation {op!r}")


def fe_inv(u: FieldValue) -> FieldValue:
    return u.inverse()


def fe_sample(
    field: FieldDescriptor, rng_seed: random.Random | int, height: int = DEFAULT_HEIGHT
) -> FieldValue:
    """Draw a field element.

    Uniform over residues for a prime field. Over Q the numerator is drawn
    from ``[-height, height]`` and the denominator from ``[1, height]``, so
    the reduced result stays within the height bound.
    """
    rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
    if field.is_prime_field:
        return FieldValue._make(field, rng.randrange(field.modulus))
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return FieldValue._make(field, Fraction(num, den))


def sqrt_mod(n: int, p: int) -> int | None:
    """Square root of ``n`` modulo an odd prime, or None for a non-residue.

    Tonelli-Shanks; returns the smaller of the two roots.
    """
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)
