"""Superderivations of the graded quaternion algebra.

A superderivation of degree d shifts the grading by d and satisfies the
graded Leibniz rule D(xy) = D(x)y + (-1)^{d|x|} x D(y) on homogeneous
arguments.  Over any coefficient ring where a, b and 2 are units the
space of degree-0 superderivations is the one-parameter family

    j -> t k,   k -> -a t j          (everything else to 0)

and the degree-1 space is the two-parameter family

    i -> -u/b j + t/b k,   j -> t,   k -> u       (1 and scalars to 0)

with t, u ranging over the ring.  The general solver recovers these
families as the exact nullspace of the stacked grading and Leibniz
constraints on the 16 matrix unknowns; the closed forms above double as
an independent cross-check.  Inner superderivations x -> [x, .]_s span
the whole space, so the outer quotient vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import (BASIS_LABELS, BASIS_PARITY, AlgebraParams, Quaternion,
                      grade_split, lie_super)
from .errors import (DomainError, InputNotDerivationError,
                     InternalContradictionError)
from .linalg import LinMap, SolutionSpace, nullspace, rank
from .rings import RingElement


@dataclass(frozen=True)
class DerivationParams:
    """Coordinates of a closed-form superderivation: ``lam`` for degree 0,
    ``(mu, nu)`` for degree 1."""

    degree: int
    lam: RingElement | None = None
    mu: RingElement | None = None
    nu: RingElement | None = None

    def __post_init__(self):
        if self.degree == 0:
            if self.lam is None or self.mu is not None or self.nu is not None:
                raise DomainError("degree 0 takes exactly the parameter lam")
        elif self.degree == 1:
            if self.mu is None or self.nu is None or self.lam is not None:
                raise DomainError("degree 1 takes exactly the parameters mu, nu")
        else:
            raise DomainError(f"degree must be 0 or 1, got {self.degree}")

    def to_json(self) -> dict:
        if self.degree == 0:
            return {"degree": 0, "lambda": self.lam.to_str()}
        return {"degree": 1, "mu": self.mu.to_str(), "nu": self.nu.to_str()}


def derivation_matrix(params: AlgebraParams, dp: DerivationParams) -> LinMap:
    """The matrix of the closed-form family member."""
    if dp.degree == 0:
        lam = params.ring.element(dp.lam)
        return LinMap.from_entries(params, {(2, 3): -(params.a * lam),
                                            (3, 2): lam})
    mu = params.ring.element(dp.mu)
    nu = params.ring.element(dp.nu)
    binv = params.b.try_invert()
    return LinMap.from_entries(params, {(0, 2): mu,
                                        (0, 3): nu,
                                        (2, 1): -(binv * nu),
                                        (3, 1): binv * mu})


def recover_params(D: LinMap, degree: int) -> DerivationParams:
    """Read the family coordinates off their defining matrix entries."""
    if degree == 0:
        return DerivationParams(0, lam=D.entry(3, 2))
    return DerivationParams(1, mu=D.entry(0, 2), nu=D.entry(0, 3))


@dataclass(frozen=True)
class DerivationDefect:
    """First failed condition: a forced-zero entry ('grading') or a basis
    pair where the graded Leibniz rule breaks ('leibniz')."""

    kind: str
    left: str
    right: str
    value: Quaternion | RingElement


def _defect_components(D: LinMap, degree: int):
    """Yield (kind, left label, right label, ring element) for every scalar
    condition defining a degree-``degree`` superderivation, in a fixed order."""
    for c in range(4):
        for r in range(4):
            if BASIS_PARITY[r] != (BASIS_PARITY[c] + degree) % 2:
                yield "grading", BASIS_LABELS[r], BASIS_LABELS[c], D.rows[r][c]
    basis = D.params.basis()
    images = [D.apply(e) for e in basis]
    for p, q in product(range(4), repeat=2):
        lhs = D.apply(basis[p] * basis[q])
        rhs = images[p] * basis[q]
        mixed = basis[p] * images[q]
        if degree and BASIS_PARITY[p]:
            rhs = rhs - mixed
        else:
            rhs = rhs + mixed
        defect = lhs - rhs
        for r in range(4):
            yield "leibniz", BASIS_LABELS[p], BASIS_LABELS[q], defect.coeffs[r]


def superderivation_defect(D: LinMap, degree: int) -> DerivationDefect | None:
    """None when D is a superderivation of the given degree, else the first
    violated condition."""
    if degree not in (0, 1):
        raise DomainError(f"degree must be 0 or 1, got {degree}")
    for kind, left, right, value in _defect_components(D, degree):
        if not value.is_zero():
            return DerivationDefect(kind, left, right, value)
    return None


def is_superderivation(D: LinMap, degree: int) -> bool:
    return superderivation_defect(D, degree) is None


def _constraint_rows(params: AlgebraParams, degree: int) -> list:
    # The conditions are linear in the matrix, so evaluating the defect on
    # the 16 unit matrices yields the constraint columns.
    cols = []
    zero, one = params.ring.zero, params.ring.one
    for u in range(16):
        unit = LinMap.from_flat(params, tuple(one if i == u else zero
                                              for i in range(16)))
        cols.append([v for _, _, _, v in _defect_components(unit, degree)])
    return [list(row) for row in zip(*cols)]


def solve_superderivations(params: AlgebraParams, degree: int) -> SolutionSpace:
    """Exact basis of the degree-0 or degree-1 superderivation space."""
    if degree not in (0, 1):
        raise DomainError(f"degree must be 0 or 1, got {degree}")
    rows = _constraint_rows(params, degree)
    return nullspace(rows, 16, params.ring)


def derivation_space_maps(params: AlgebraParams, degree: int) -> list[LinMap]:
    space = solve_superderivations(params, degree)
    return [LinMap.from_flat(params, v) for v in space.basis]


def inner_superderivation(x: Quaternion) -> LinMap:
    """The map y -> [x, y]_s, as a matrix (columns are images of the basis)."""
    cols = [lie_super(x, e).to_vector() for e in x.params.basis()]
    return LinMap.from_columns(x.params, cols)


def inner_span_rank(params: AlgebraParams) -> int:
    """Rank of the span of the inner superderivations at the four basis
    elements, inside the 16-dimensional space of matrices."""
    flats = [inner_superderivation(e).to_flat() for e in params.basis()]
    return rank(flats)


def outer_dimension(params: AlgebraParams) -> int:
    """dim Der_s minus the dimension of the inner span (0 in every case the
    closed forms cover)."""
    total = (solve_superderivations(params, 0).dim
             + solve_superderivations(params, 1).dim)
    return total - inner_span_rank(params)


def superbracket(D: LinMap, deg_d: int, E: LinMap, deg_e: int) -> LinMap:
    """[D, E]_s = DE - (-1)^{|D||E|} ED on homogeneous superderivations.

    Both inputs are verified; the result is verified to be a superderivation
    of degree |D|+|E| mod 2, which the bracket structure guarantees.
    """
    for M, deg, name in ((D, deg_d, "left"), (E, deg_e, "right")):
        defect = superderivation_defect(M, deg)
        if defect is not None:
            raise InputNotDerivationError(
                f"{name} operand is not a degree-{deg} superderivation "
                f"({defect.kind} fails at ({defect.left}, {defect.right}))")
    result = D @ E - E @ D if not (deg_d and deg_e) else D @ E + E @ D
    if superderivation_defect(result, (deg_d + deg_e) % 2) is not None:
        raise InternalContradictionError(
            "bracket of superderivations failed to be a superderivation")
    return result


def graded_parts(D: LinMap) -> tuple[LinMap, LinMap]:
    """Split a matrix into its grading-preserving and grading-swapping
    parts (the degree-0/degree-1 components of a mixed superderivation)."""
    z = D.params.ring.zero
    keep = [[z] * 4 for _ in range(4)]
    swap = [[z] * 4 for _ in range(4)]
    for r in range(4):
        for c in range(4):
            if BASIS_PARITY[r] == BASIS_PARITY[c]:
                keep[r][c] = D.rows[r][c]
            else:
                swap[r][c] = D.rows[r][c]
    return (LinMap(D.params, tuple(tuple(r) for r in keep)),
            LinMap(D.params, tuple(tuple(r) for r in swap)))
