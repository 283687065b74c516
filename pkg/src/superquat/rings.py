"""Exact coefficient rings with invertible 2.

Three kinds of commutative unital rings are supported:

* ``Q``  -- the rationals, with arbitrary-precision ``fractions.Fraction``
  values (Gaussian elimination blows up fixed-width integers, so exact
  fractions are non-negotiable);
* ``Fp`` -- the prime field of odd order ``p``;
* ``Zn`` -- the residue ring modulo an odd ``n >= 3`` (not a field; the
  solvers refuse it, evaluation and checking still work).

Oddness of the modulus keeps 2 invertible everywhere, which the graded
Jordan product and the symmetry split rely on.  Every element is stored in
canonical form (reduced fraction with positive denominator, or least
non-negative residue), so equality is plain representation equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import DomainError

_KINDS = ("Q", "Fp", "Zn")


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingDescriptor:
    """Identifies one of the supported coefficient rings.

    ``modulus`` is ``None`` for the rationals, the (odd) prime for ``Fp``
    and the (odd, >= 3) modulus for ``Zn``.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.modulus is not None:
                raise DomainError("rationals take no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.modulus, int) or not _is_odd_prime(self.modulus):
                raise DomainError(f"Fp needs an odd prime, got {self.modulus!r}")
        elif self.kind == "Zn":
            if not isinstance(self.modulus, int) or self.modulus < 3 or self.modulus % 2 == 0:
                raise DomainError(f"Zn needs an odd modulus >= 3, got {self.modulus!r}")
        else:
            raise DomainError(f"unknown ring kind {self.kind!r}, expected one of {_KINDS}")

    @property
    def is_field(self) -> bool:
        return self.kind != "Zn"

    @property
    def is_finite(self) -> bool:
        return self.kind != "Q"

    def element(self, value) -> RingElement:
        """Coerce an int, string, or (over Q) Fraction into a canonical element."""
        if isinstance(value, RingElement):
            if value.descriptor != self:
                raise DomainError(f"element of {value.descriptor} used over {self}")
            return value
        if self.kind == "Q":
            return RingElement(self, Fraction(value))
        if isinstance(value, str):
            value = int(value, 10)
        if not isinstance(value, int):
            raise DomainError(f"modular rings take integer values, got {value!r}")
        return RingElement(self, value % self.modulus)

    @cached_property
    def zero(self) -> RingElement:
        return self.element(0)

    @cached_property
    def one(self) -> RingElement:
        return self.element(1)

    @cached_property
    def half(self) -> RingElement:
        """The inverse of 2, which exists in every supported ring."""
        if self.kind == "Q":
            return RingElement(self, Fraction(1, 2))
        return RingElement(self, (self.modulus + 1) // 2)

    def elements(self):
        """Iterate the whole ring (finite kinds only)."""
        if not self.is_finite:
            raise DomainError("cannot enumerate the rationals")
        for v in range(self.modulus):
            yield RingElement(self, v)

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"kind": "Q"}
        key = "p" if self.kind == "Fp" else "n"
        return {"kind": self.kind, key: self.modulus}

    @staticmethod
    def from_json(obj: dict) -> RingDescriptor:
        kind = obj.get("kind")
        if kind == "Q":
            return rationals()
        if kind == "Fp":
            return prime_field(obj["p"])
        if kind == "Zn":
            return residue_ring(obj["n"])
        raise DomainError(f"bad ring descriptor {obj!r}")

    def __str__(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.modulus}"
        return f"Z/{self.modulus}"


def rationals() -> RingDescriptor:
    return RingDescriptor("Q")


def prime_field(p: int) -> RingDescriptor:
    return RingDescriptor("Fp", p)


def residue_ring(n: int) -> RingDescriptor:
    return RingDescriptor("Zn", n)


class RingElement:
    """A canonical ring element; immutable by convention.

    Arithmetic accepts plain ints on either side and coerces them through
    the element's own descriptor.
    """

    __slots__ = ("descriptor", "value")

    def __init__(self, descriptor: RingDescriptor, value):
        self.descriptor = descriptor
        self.value = value

    def _coerce(self, other):
        if isinstance(other, RingElement):
            d = self.descriptor
            if other.descriptor is not d and other.descriptor != d:
                raise DomainError(
                    f"mixed rings: {self.descriptor} and {other.descriptor}")
            return other
        if isinstance(other, int):
            return self.descriptor.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.descriptor
        v = self.value + other.value
        return RingElement(d, v if d.modulus is None else v % d.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.descriptor
        v = self.value - other.value
        return RingElement(d, v if d.modulus is None else v % d.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.descriptor
        v = self.value * other.value
        return RingElement(d, v if d.modulus is None else v % d.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        d = self.descriptor
        return RingElement(d, -self.value if d.modulus is None else (-self.value) % d.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        inv = other.try_invert()
        if inv is None:
            raise DomainError(f"{other} is not a unit in {self.descriptor}")
        return self * inv

    def try_invert(self) -> RingElement | None:
        """The multiplicative inverse, or None when the element is not a unit."""
        d = self.descriptor
        if d.modulus is None:
            if self.value == 0:
                return None
            return RingElement(d, 1 / self.value)
        if gcd(self.value, d.modulus) != 1:
            return None
        return RingElement(d, pow(self.value, -1, d.modulus))

    def is_unit(self) -> bool:
        return self.try_invert() is not None

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.descriptor == other.descriptor and self.value == other.value
        if isinstance(other, int):
            return self == self.descriptor.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.descriptor, self.value))

    def to_str(self) -> str:
        """Canonical string form: '5/6', '-2' or '3'."""
        return str(self.value)

    def __repr__(self) -> str:
        return str(self.value)
