"""Arithmetic in the prime field GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, DomainError, FieldMismatch, NotPrime


@lru_cache(maxsize=256)
def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(q)."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise DomainError(f"field order must be an integer, got {self.q!r}")
        if self.q < 2 or not is_prime(self.q):
            raise NotPrime(self.q)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)


def make_field(q: int) -> FieldSpec:
    return FieldSpec(q)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise DomainError(f"{self.value} is not a canonical element of GF({self.field.q})")

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"

    def __add__(self, other):
        return fe_add(self, other)

    def __sub__(self, other):
        return fe_sub(self, other)

    def __mul__(self, other):
        return fe_mul(self, other)

    def __neg__(self):
        return fe_neg(self)

    def __truediv__(self, other):
        return fe_mul(self, fe_inv(other))


def _check(a: FieldElement, b: FieldElement) -> int:
    if a.field.q != b.field.q:
        raise FieldMismatch(f"GF({a.field.q}) vs GF({b.field.q})")
    return a.field.q


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    q = _check(a, b)
    return FieldElement((a.value + b.value) % q, a.field)


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    q = _check(a, b)
    return FieldElement((a.value - b.value) % q, a.field)


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    q = _check(a, b)
    return FieldElement((a.value * b.value) % q, a.field)


def fe_neg(a: FieldElement) -> FieldElement:
    return FieldElement(-a.value % a.field.q, a.field)


def inverse_mod(a: int, q: int) -> int:
    """Inverse of a modulo q by the extended Euclidean algorithm."""
    a %= q
    if a == 0:
        raise DivisionByZero(f"0 has no inverse in GF({q})")
    r0, r1 = q, a
    s0, s1 = 0, 1
    while r1:
        t = r0 // r1
        r0, r1 = r1, r0 - t * r1
        s0, s1 = s1, s0 - t * s1
    # r0 == 1 since q is prime
    return s0 % q


def fe_inv(a: FieldElement) -> FieldElement:
    return FieldElement(inverse_mod(a.value, a.field.q), a.field)
