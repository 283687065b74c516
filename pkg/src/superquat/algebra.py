"""The generalized quaternion algebra as a Z2-graded algebra.

For ring units ``a`` and ``b``, the algebra is the free rank-4 module on
``{1, i, j, k}`` with the associative multiplication generated by

    i*i = -a,   j*j = -b,   k*k = -a*b,
    i*j = -j*i = k,   j*k = -k*j = b*i,   k*i = -i*k = a*j,

and 1 central.  The grading puts ``1, i`` in the even part and ``j, k`` in
the odd part; products add parities mod 2.  On top of the associative
product live the Lie superproduct ``[x,y]_s = xy - (-1)^{|x||y|} yx`` and
the Jordan superproduct ``x o y = (xy + (-1)^{|x||y|} yx)/2``, both
extended bilinearly from homogeneous arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError
from .rings import RingDescriptor, RingElement

BASIS_LABELS = ("1", "i", "j", "k")
BASIS_PARITY = (0, 0, 1, 1)


@dataclass(frozen=True)
class AlgebraParams:
    """The defining data (ring, a, b); a and b must be units."""

    ring: RingDescriptor
    a: RingElement
    b: RingElement

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b)):
            if v.descriptor != self.ring:
                raise DomainError(f"parameter {name} is not over {self.ring}")
            if v.try_invert() is None:
                raise DomainError(f"parameter {name} = {v} is not a unit in {self.ring}")

    @cached_property
    def table(self) -> tuple:
        """Structure constants: table[p][q] is the coefficient 4-tuple of e_p * e_q."""
        z, o = self.ring.zero, self.ring.one
        a, b = self.a, self.b

        def unit(idx, c):
            return tuple(c if r == idx else z for r in range(4))

        rows = [[None] * 4 for _ in range(4)]
        for q in range(4):
            rows[0][q] = unit(q, o)
            rows[q][0] = unit(q, o)
        rows[1][1] = unit(0, -a)
        rows[1][2] = unit(3, o)
        rows[1][3] = unit(2, -a)
        rows[2][1] = unit(3, -o)
        rows[2][2] = unit(0, -b)
        rows[2][3] = unit(1, b)
        rows[3][1] = unit(2, a)
        rows[3][2] = unit(1, -b)
        rows[3][3] = unit(0, -(a * b))
        return tuple(tuple(r) for r in rows)

    def element(self, value) -> RingElement:
        return self.ring.element(value)

    def quaternion(self, c1, c2, c3, c4) -> Quaternion:
        el = self.ring.element
        return Quaternion(self, (el(c1), el(c2), el(c3), el(c4)))

    def from_vector(self, vec) -> Quaternion:
        if len(vec) != 4:
            raise DomainError(f"need 4 coordinates, got {len(vec)}")
        coeffs = []
        for v in vec:
            if not isinstance(v, RingElement) or v.descriptor != self.ring:
                raise DomainError(f"coordinate {v!r} is not over {self.ring}")
            coeffs.append(v)
        return Quaternion(self, tuple(coeffs))

    def zero(self) -> Quaternion:
        z = self.ring.zero
        return Quaternion(self, (z, z, z, z))

    def basis_element(self, idx: int) -> Quaternion:
        z, o = self.ring.zero, self.ring.one
        return Quaternion(self, tuple(o if r == idx else z for r in range(4)))

    def basis(self) -> tuple:
        return tuple(self.basis_element(p) for p in range(4))

    def one(self) -> Quaternion:
        return self.basis_element(0)

    def i(self) -> Quaternion:
        return self.basis_element(1)

    def j(self) -> Quaternion:
        return self.basis_element(2)

    def k(self) -> Quaternion:
        return self.basis_element(3)

    def scalar(self, value) -> Quaternion:
        z = self.ring.zero
        return Quaternion(self, (self.ring.element(value), z, z, z))


def algebra(ring: RingDescriptor, a, b) -> AlgebraParams:
    """Convenience constructor coercing a and b through the ring."""
    return AlgebraParams(ring, ring.element(a), ring.element(b))


@dataclass(frozen=True, slots=True)
class Quaternion:
    """An element written in the basis {1, i, j, k}."""

    params: AlgebraParams
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 4:
            raise DomainError("a quaternion has exactly 4 coordinates")
        ring = self.params.ring
        for c in self.coeffs:
            if c.descriptor != ring:
                raise DomainError(f"coordinate {c!r} is not over {ring}")

    def _check(self, other: Quaternion):
        if other.params is not self.params and other.params != self.params:
            raise DomainError("operands live in different algebras")

    def __add__(self, other: Quaternion) -> Quaternion:
        self._check(other)
        return Quaternion(self.params,
                          tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        self._check(other)
        return Quaternion(self.params,
                          tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Quaternion:
        return Quaternion(self.params, tuple(-x for x in self.coeffs))

    def __mul__(self, other: Quaternion) -> Quaternion:
        """The associative product, via the structure-constant table."""
        self._check(other)
        table = self.params.table
        acc = [self.params.ring.zero] * 4
        for p, xp in enumerate(self.coeffs):
            if xp.is_zero():
                continue
            for q, yq in enumerate(other.coeffs):
                if yq.is_zero():
                    continue
                c = xp * yq
                struct = table[p][q]
                for r in range(4):
                    t = struct[r]
                    if not t.is_zero():
                        acc[r] = acc[r] + c * t
        return Quaternion(self.params, tuple(acc))

    def scale(self, c: RingElement) -> Quaternion:
        return Quaternion(self.params, tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def to_vector(self) -> tuple:
        """The coordinate column (x1, x2, x3, x4)."""
        return self.coeffs

    def to_json(self) -> dict:
        return {"coeffs": [c.to_str() for c in self.coeffs]}

    @staticmethod
    def from_json(params: AlgebraParams, obj: dict) -> Quaternion:
        coeffs = obj.get("coeffs")
        if not isinstance(coeffs, list) or len(coeffs) != 4:
            raise DomainError(f"quaternion JSON needs a 4-entry 'coeffs' list, got {obj!r}")
        return params.quaternion(*coeffs)

    def __repr__(self) -> str:
        parts = []
        for c, label in zip(self.coeffs, BASIS_LABELS):
            if c.is_zero():
                continue
            if label == "1":
                parts.append(str(c))
            elif c.is_one():
                parts.append(label)
            elif (-c).is_one():
                parts.append(f"-{label}")
            else:
                parts.append(f"({c}){label}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def grade_split(x: Quaternion) -> tuple[Quaternion, Quaternion]:
    """Split into (even, odd) parts; they sum back to x."""
    z = x.params.ring.zero
    c = x.coeffs
    even = Quaternion(x.params, (c[0], c[1], z, z))
    odd = Quaternion(x.params, (z, z, c[2], c[3]))
    return even, odd


def parity_of(x: Quaternion) -> int | None:
    """0 for even, 1 for odd, None for a genuinely mixed element.

    Zero counts as even so that parity is total on each graded part.
    """
    even_zero = x.coeffs[0].is_zero() and x.coeffs[1].is_zero()
    odd_zero = x.coeffs[2].is_zero() and x.coeffs[3].is_zero()
    if odd_zero:
        return 0
    if even_zero:
        return 1
    return None


def _graded_terms(x: Quaternion, y: Quaternion):
    x0, x1 = grade_split(x)
    y0, y1 = grade_split(y)
    yield x0, y0, 1
    yield x1, y0, 1
    yield x0, y1, 1
    yield x1, y1, -1


def lie_super(x: Quaternion, y: Quaternion) -> Quaternion:
    """[x,y]_s = xy - (-1)^{|x||y|} yx, extended bilinearly to mixed inputs."""
    x._check(y)
    acc = x.params.zero()
    for xp, yp, sign in _graded_terms(x, y):
        if xp.is_zero() or yp.is_zero():
            continue
        prod = xp * yp
        back = yp * xp
        acc = acc + (prod - back if sign > 0 else prod + back)
    return acc


def jordan_super(x: Quaternion, y: Quaternion) -> Quaternion:
    """x o y = (xy + (-1)^{|x||y|} yx)/2, extended bilinearly to mixed inputs."""
    x._check(y)
    half = x.params.ring.half
    acc = x.params.zero()
    for xp, yp, sign in _graded_terms(x, y):
        if xp.is_zero() or yp.is_zero():
            continue
        prod = xp * yp
        back = yp * xp
        acc = acc + (prod + back if sign > 0 else prod - back).scale(half)
    return acc
