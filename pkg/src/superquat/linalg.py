"""Exact linear algebra on the 4-dimensional algebra.

Linear self-maps are 4x4 coefficient matrices acting on coordinate columns
from the left; bilinear maps are 4x4 grids of algebra values determining
the map on all inputs by bilinearity.  Constraint systems over these
unknowns are flattened with a fixed variable ordering (matrix entries
row-major; grid entries lexicographic in (row, column, component)) and
solved by reduced row echelon form over a field.  Everything is exact, so
nullspace bases satisfy their systems with no tolerance, and pivoting is
the deterministic first-nonzero rule rather than any numerical heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraParams, Quaternion
from .errors import DomainError, InternalContradictionError, UnsupportedRingError
from .rings import RingDescriptor, RingElement


def _require_field(descriptor: RingDescriptor, what: str):
    if not descriptor.is_field:
        raise UnsupportedRingError(f"{what} needs a field, got {descriptor}")


@dataclass(frozen=True)
class LinMap:
    """A linear self-map: rows[r][c] is the coefficient of basis r in the
    image of basis c (column action)."""

    params: AlgebraParams
    rows: tuple

    def __post_init__(self):
        ring = self.params.ring
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise DomainError("a linear map needs a 4x4 matrix")
        for row in self.rows:
            for v in row:
                if v.descriptor != ring:
                    raise DomainError(f"matrix entry {v!r} is not over {ring}")

    def apply(self, x: Quaternion) -> Quaternion:
        if x.params is not self.params and x.params != self.params:
            raise DomainError("map and argument live in different algebras")
        xv = x.coeffs
        out = []
        for row in self.rows:
            acc = self.params.ring.zero
            for m, c in zip(row, xv):
                if not (m.is_zero() or c.is_zero()):
                    acc = acc + m * c
            out.append(acc)
        return Quaternion(self.params, tuple(out))

    def column(self, q: int) -> tuple:
        return tuple(self.rows[r][q] for r in range(4))

    def entry(self, r: int, c: int) -> RingElement:
        return self.rows[r][c]

    def __matmul__(self, other: LinMap) -> LinMap:
        """Composition self(other(x)), i.e. the matrix product."""
        if other.params != self.params:
            raise DomainError("maps live in different algebras")
        z = self.params.ring.zero
        rows = []
        for r in range(4):
            row = []
            for c in range(4):
                acc = z
                for s in range(4):
                    m, n = self.rows[r][s], other.rows[s][c]
                    if not (m.is_zero() or n.is_zero()):
                        acc = acc + m * n
                row.append(acc)
            rows.append(tuple(row))
        return LinMap(self.params, tuple(rows))

    def __add__(self, other: LinMap) -> LinMap:
        if other.params != self.params:
            raise DomainError("maps live in different algebras")
        return LinMap(self.params, tuple(
            tuple(x + y for x, y in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: LinMap) -> LinMap:
        return self + (-other)

    def __neg__(self) -> LinMap:
        return LinMap(self.params, tuple(tuple(-v for v in r) for r in self.rows))

    def scale(self, c: RingElement) -> LinMap:
        return LinMap(self.params, tuple(tuple(c * v for v in r) for r in self.rows))

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.rows for v in r)

    def to_flat(self) -> tuple:
        """Row-major 16-vector of the entries (the solver variable order)."""
        return tuple(v for r in self.rows for v in r)

    @staticmethod
    def from_flat(params: AlgebraParams, flat) -> LinMap:
        if len(flat) != 16:
            raise DomainError("flat linear map needs 16 entries")
        return LinMap(params, tuple(tuple(flat[4 * r + c] for c in range(4))
                                    for r in range(4)))

    @staticmethod
    def zero(params: AlgebraParams) -> LinMap:
        z = params.ring.zero
        return LinMap(params, tuple(tuple(z for _ in range(4)) for _ in range(4)))

    @staticmethod
    def identity(params: AlgebraParams) -> LinMap:
        z, o = params.ring.zero, params.ring.one
        return LinMap(params, tuple(tuple(o if r == c else z for c in range(4))
                                    for r in range(4)))

    @staticmethod
    def from_entries(params: AlgebraParams, entries: dict) -> LinMap:
        """Build from a sparse {(row, col): value} dict, zero elsewhere."""
        z = params.ring.zero
        rows = [[z] * 4 for _ in range(4)]
        for (r, c), v in entries.items():
            rows[r][c] = params.ring.element(v)
        return LinMap(params, tuple(tuple(r) for r in rows))

    @staticmethod
    def from_columns(params: AlgebraParams, cols) -> LinMap:
        if len(cols) != 4 or any(len(c) != 4 for c in cols):
            raise DomainError("need 4 columns of 4 entries")
        return LinMap(params, tuple(tuple(cols[c][r] for c in range(4))
                                    for r in range(4)))

    def to_json(self) -> dict:
        return {"matrix": [[v.to_str() for v in row] for row in self.rows]}

    @staticmethod
    def from_json(params: AlgebraParams, obj: dict) -> LinMap:
        m = obj.get("matrix")
        if not isinstance(m, list) or len(m) != 4 or any(
                not isinstance(r, list) or len(r) != 4 for r in m):
            raise DomainError(f"linear-map JSON needs a 4x4 'matrix', got {obj!r}")
        el = params.ring.element
        return LinMap(params, tuple(tuple(el(v) for v in row) for row in m))


@dataclass(frozen=True)
class BilinMap:
    """A bilinear map given by its values on basis pairs: values[p][q] is
    the image of (e_p, e_q); bilinearity determines everything else."""

    params: AlgebraParams
    values: tuple

    def __post_init__(self):
        if len(self.values) != 4 or any(len(r) != 4 for r in self.values):
            raise DomainError("a bilinear map needs a 4x4 grid of values")
        for row in self.values:
            for v in row:
                if v.params != self.params:
                    raise DomainError("grid value lives in a different algebra")

    def eval(self, x: Quaternion, y: Quaternion) -> Quaternion:
        if x.params != self.params or y.params != self.params:
            raise DomainError("arguments live in a different algebra")
        acc = self.params.zero()
        for p, xp in enumerate(x.coeffs):
            if xp.is_zero():
                continue
            for q, yq in enumerate(y.coeffs):
                if yq.is_zero():
                    continue
                v = self.values[p][q]
                if not v.is_zero():
                    acc = acc + v.scale(xp * yq)
        return acc

    def entry(self, p: int, q: int) -> Quaternion:
        return self.values[p][q]

    def __add__(self, other: BilinMap) -> BilinMap:
        if other.params != self.params:
            raise DomainError("maps live in different algebras")
        return BilinMap(self.params, tuple(
            tuple(x + y for x, y in zip(r1, r2))
            for r1, r2 in zip(self.values, other.values)))

    def __sub__(self, other: BilinMap) -> BilinMap:
        return self + other.scale(-self.params.ring.one)

    def scale(self, c: RingElement) -> BilinMap:
        return BilinMap(self.params, tuple(tuple(v.scale(c) for v in r)
                                           for r in self.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.values for v in r)

    def to_flat(self) -> tuple:
        """64-vector ordered lexicographically in (row, column, component)."""
        return tuple(v.coeffs[r] for row in self.values for v in row for r in range(4))

    @staticmethod
    def from_flat(params: AlgebraParams, flat) -> BilinMap:
        if len(flat) != 64:
            raise DomainError("flat bilinear map needs 64 entries")
        vals = []
        for p in range(4):
            row = []
            for q in range(4):
                base = 16 * p + 4 * q
                row.append(Quaternion(params, tuple(flat[base + r] for r in range(4))))
            vals.append(tuple(row))
        return BilinMap(params, tuple(vals))

    @staticmethod
    def zero(params: AlgebraParams) -> BilinMap:
        z = params.zero()
        return BilinMap(params, tuple(tuple(z for _ in range(4)) for _ in range(4)))

    @staticmethod
    def from_entries(params: AlgebraParams, entries: dict) -> BilinMap:
        """Build from a sparse {(p, q): Quaternion} dict, zero elsewhere."""
        z = params.zero()
        vals = [[z] * 4 for _ in range(4)]
        for (p, q), v in entries.items():
            vals[p][q] = v
        return BilinMap(params, tuple(tuple(r) for r in vals))

    def to_json(self) -> dict:
        return {"values": [[v.to_json() for v in row] for row in self.values]}

    @staticmethod
    def from_json(params: AlgebraParams, obj: dict) -> BilinMap:
        grid = obj.get("values")
        if not isinstance(grid, list) or len(grid) != 4 or any(
                not isinstance(r, list) or len(r) != 4 for r in grid):
            raise DomainError(f"bilinear-map JSON needs a 4x4 'values' grid, got {obj!r}")
        return BilinMap(params, tuple(
            tuple(Quaternion.from_json(params, v) for v in row) for row in grid))


@dataclass(frozen=True)
class SolutionSpace:
    """A basis of the solutions of a homogeneous linear system."""

    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        """Exact membership test via a rank comparison."""
        if len(vector) != self.ambient_dim:
            raise DomainError("vector has the wrong length for this space")
        if not self.basis:
            return all(v.is_zero() for v in vector)
        return rank(list(self.basis) + [tuple(vector)]) == self.dim


def rref(rows) -> tuple[list, list]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns (nonzero reduced rows, pivot column indices).  Entries must be
    ring elements over a field.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if not work[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = work[r][c].try_invert()
        if inv is None:
            raise UnsupportedRingError(
                f"pivot {work[r][c]} is not invertible; elimination needs a field")
        if not inv.is_one():
            work[r] = [inv * v for v in work[r]]
        for i in range(nrows):
            if i == r:
                continue
            f = work[i][c]
            if f.is_zero():
                continue
            pivot_row = work[r]
            work[i] = [vi if vr.is_zero() else vi - f * vr
                       for vi, vr in zip(work[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols: int, descriptor: RingDescriptor) -> SolutionSpace:
    """Basis of {v : A v = 0}, deterministically ordered.

    Free variables are set to 1 one at a time in ascending index order, so
    re-running on the same system reproduces the same basis bytes.
    """
    _require_field(descriptor, "nullspace computation")
    rows = [r for r in rows if any(not v.is_zero() for v in r)]
    for r in rows:
        if len(r) != ncols:
            raise DomainError("constraint row has the wrong number of columns")
    zero, one = descriptor.zero, descriptor.one
    if not rows:
        basis = tuple(tuple(one if i == f else zero for i in range(ncols))
                      for f in range(ncols))
        return SolutionSpace(ncols, basis)
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for prow, pc in zip(reduced, pivots):
            if not prow[f].is_zero():
                v[pc] = -prow[f]
        basis.append(tuple(v))
    space = SolutionSpace(ncols, tuple(basis))
    _verify_solution_space(rows, space)
    return space


def _verify_solution_space(rows, space: SolutionSpace):
    # Exact postconditions: every basis vector solves the system, and the
    # basis really is independent.
    for v in space.basis:
        for row in rows:
            acc = None
            for rv, vv in zip(row, v):
                if rv.is_zero() or vv.is_zero():
                    continue
                acc = rv * vv if acc is None else acc + rv * vv
            if acc is not None and not acc.is_zero():  # pragma: no cover
                raise InternalContradictionError("nullspace vector fails its system")
    if space.basis and rank(space.basis) != space.dim:  # pragma: no cover
        raise InternalContradictionError("nullspace basis is dependent")


def solve_linear(rows, rhs, descriptor: RingDescriptor):
    """One exact solution of A v = rhs, or None when inconsistent.

    Free variables are pinned to zero, so the answer is deterministic.
    """
    _require_field(descriptor, "linear solving")
    if len(rows) != len(rhs):
        raise DomainError("system and right-hand side sizes differ")
    if not rows:
        return ()
    ncols = len(rows[0])
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    zero = descriptor.zero
    v = [zero] * ncols
    for prow, pc in zip(reduced, pivots):
        v[pc] = prow[ncols]
    return tuple(v)
