"""Exact matrices and subspaces backed by sympy's sparse ``DomainMatrix``.

Vectors are stored as rows. Operators act on column vectors, so applying an
operator ``A`` to a stack of row vectors ``V`` is ``V @ A.T``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from sympy.polys.matrices import DomainMatrix

from ..exceptions import ValidationError
from .field import Field

RowDict = dict[int, dict[int, Any]]


def _rows_of(dm: DomainMatrix) -> RowDict:
    rep = dm.to_sparse().rep
    return {i: dict(row) for i, row in rep.items() if row}


class Matrix:
    """An immutable matrix over a :class:`Field`."""

    __slots__ = ("_dm", "field")

    def __init__(self, field: Field, dm: DomainMatrix) -> None:
        self.field = field
        self._dm = dm.to_sparse()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_dict(
        cls, field: Field, shape: tuple[int, int], entries: Mapping[int, Mapping[int, Any]]
    ) -> Matrix:
        """Build from ``{row: {col: value}}``; zero values are dropped."""
        K = field.domain
        rows: RowDict = {}
        r, c = shape
        for i, row in entries.items():
            clean = {}
            for j, v in row.items():
                if not (0 <= i < r and 0 <= j < c):
                    raise ValidationError(f"Entry ({i},{j}) outside shape {shape}.")
                x = K.convert(v)
                if x:
                    clean[j] = x
            if clean:
                rows[i] = clean
        return cls(field, DomainMatrix(rows, shape, K))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Any]], ncols: int | None = None) -> Matrix:
        width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != width for r in rows):
            raise ValidationError("All rows must have the same length.")
        entries = {i: dict(enumerate(r)) for i, r in enumerate(rows)}
        return cls.from_dict(field, (len(rows), width), entries)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, DomainMatrix({}, (nrows, ncols), field.domain))

    @classmethod
    def identity(cls, field: Field, size: int) -> Matrix:
        one = field.one
        return cls(field, DomainMatrix({i: {i: one} for i in range(size)}, (size, size), field.domain))

    @classmethod
    def unit_rows(cls, field: Field, indices: Sequence[int], ncols: int) -> Matrix:
        """Rows are the standard basis vectors e_k for k in ``indices``."""
        return cls.from_dict(field, (len(indices), ncols), {r: {k: 1} for r, k in enumerate(indices)})

    @classmethod
    def vstack(cls, field: Field, blocks: Sequence[Matrix], ncols: int) -> Matrix:
        rows: RowDict = {}
        offset = 0
        for b in blocks:
            if b.ncols != ncols:
                raise ValidationError(f"Cannot stack a {b.shape} block into width {ncols}.")
            for i, row in b.row_dicts().items():
                rows[offset + i] = row
            offset += b.nrows
        return cls(field, DomainMatrix(rows, (offset, ncols), field.domain))

    @classmethod
    def block_diagonal(cls, field: Field, blocks: Sequence[Matrix]) -> Matrix:
        rows: RowDict = {}
        r0 = c0 = 0
        for b in blocks:
            for i, row in b.row_dicts().items():
                rows[r0 + i] = {c0 + j: v for j, v in row.items()}
            r0 += b.nrows
            c0 += b.ncols
        return cls(field, DomainMatrix(rows, (r0, c0), field.domain))

    # -- inspection -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        r, c = self._dm.shape
        return (int(r), int(c))

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def row_dicts(self) -> RowDict:
        return _rows_of(self._dm)

    def row(self, i: int) -> dict[int, Any]:
        return self.row_dicts().get(i, {})

    def entry(self, i: int, j: int) -> Any:
        return self.row(i).get(j, self.field.zero)

    def to_lists(self) -> list[list[Any]]:
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for i, row in self.row_dicts().items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.row_dicts().values())

    @property
    def is_zero(self) -> bool:
        return not self.row_dicts()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.row_dicts() == other.row_dicts()

    def __hash__(self) -> int:
        return hash((self.shape, tuple(sorted((i, tuple(sorted(r.items()))) for i, r in self.row_dicts().items()))))

    def __repr__(self) -> str:
        body = [[self.field.format(x) for x in row] for row in self.to_lists()]
        return f"Matrix({self.field}, {body})"

    # -- arithmetic -------------------------------------------------------

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValidationError(f"Shape mismatch: {self.shape} vs {other.shape}.")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.field, self._dm + other._dm)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.field, self._dm - other._dm)

    def __neg__(self) -> Matrix:
        return Matrix(self.field, -self._dm)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValidationError(f"Cannot multiply {self.shape} by {other.shape}.")
        return Matrix(self.field, self._dm.matmul(other._dm))

    def scale(self, c: Any) -> Matrix:
        x = self.field(c)
        if not x:
            return Matrix.zeros(self.field, *self.shape)
        rows = {i: {j: v * x for j, v in row.items()} for i, row in self.row_dicts().items()}
        return Matrix(self.field, DomainMatrix(rows, self.shape, self.field.domain))

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self._dm.transpose())

    def transpose(self) -> Matrix:
        return self.T

    def select_rows(self, indices: Sequence[int]) -> Matrix:
        src = self.row_dicts()
        rows = {r: src[i] for r, i in enumerate(indices) if i in src}
        return Matrix(self.field, DomainMatrix(rows, (len(indices), self.ncols), self.field.domain))

    def select_cols(self, indices: Sequence[int]) -> Matrix:
        where = {j: c for c, j in enumerate(indices)}
        rows: RowDict = {}
        for i, row in self.row_dicts().items():
            kept = {where[j]: v for j, v in row.items() if j in where}
            if kept:
                rows[i] = kept
        return Matrix(self.field, DomainMatrix(rows, (self.nrows, len(indices)), self.field.domain))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return self.select_rows(rows).select_cols(cols)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row echelon form and pivot columns (first-nonzero pivoting)."""
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.zeros(self.field, *self.shape), ()
        reduced, pivots = self._dm.rref()
        return Matrix(self.field, reduced), tuple(int(p) for p in pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> Matrix:
        """Rows form a basis of {x : self @ x = 0}, one per free column."""
        reduced, pivots = self.rref()
        rows = reduced.row_dicts()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        neg_one = -self.field.one
        entries: RowDict = {}
        for r, f in enumerate(free):
            vec = {f: self.field.one}
            for k, p in enumerate(pivots):
                v = rows.get(k, {}).get(f)
                if v:
                    vec[p] = v * neg_one
            entries[r] = vec
        return Matrix(self.field, DomainMatrix(entries, (len(free), self.ncols), self.field.domain))

    def solve(self, b: Matrix) -> Matrix | None:
        """A column x with ``self @ x = b``, or None when inconsistent."""
        if b.shape != (self.nrows, 1):
            raise ValidationError(f"Right-hand side must have shape ({self.nrows}, 1).")
        aug_rows = self.row_dicts()
        for i, row in b.row_dicts().items():
            aug_rows.setdefault(i, {})[self.ncols] = row[0]
        aug = Matrix(self.field, DomainMatrix(aug_rows, (self.nrows, self.ncols + 1), self.field.domain))
        reduced, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        rows = reduced.row_dicts()
        x = {p: {0: rows[k][self.ncols]} for k, p in enumerate(pivots) if self.ncols in rows.get(k, {})}
        return Matrix(self.field, DomainMatrix(x, (self.ncols, 1), self.field.domain))

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> Matrix:
        if not self.is_invertible():
            raise ValidationError("Matrix is not invertible.")
        return Matrix(self.field, self._dm.to_dense().inv())


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient held as the nonzero rows of an rref matrix."""

    basis: Matrix
    pivots: tuple[int, ...]
    ambient: int

    @classmethod
    def span(cls, vectors: Matrix) -> Subspace:
        reduced, pivots = vectors.rref()
        basis = reduced.select_rows(range(len(pivots)))
        return cls(basis, pivots, vectors.ncols)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> Subspace:
        return cls(Matrix.zeros(field, 0, ambient), (), ambient)

    @classmethod
    def whole(cls, field: Field, ambient: int) -> Subspace:
        return cls(Matrix.identity(field, ambient), tuple(range(ambient)), ambient)

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coordinates(self, vectors: Matrix) -> Matrix:
        """Coordinates of rows known to lie in the subspace."""
        return vectors.select_cols(self.pivots)

    def reduce(self, vectors: Matrix) -> Matrix:
        """Subtract the subspace component so pivot columns become zero."""
        if self.dim == 0:
            return vectors
        return vectors - self.coordinates(vectors) @ self.basis

    def contains(self, vectors: Matrix) -> bool:
        return self.reduce(vectors).is_zero

    def complement_columns(self) -> list[int]:
        """Non-pivot columns; their unit vectors span a complement."""
        pivot_set = set(self.pivots)
        return [j for j in range(self.ambient) if j not in pivot_set]

    def quotient_coordinates(self, vectors: Matrix) -> Matrix:
        """Coordinates in F^ambient / self with respect to the complement columns."""
        return self.reduce(vectors).select_cols(self.complement_columns())

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.pivots == other.pivots and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.pivots, self.ambient))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span(Matrix.vstack(a.field, [a.basis, b.basis], a.ambient))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Vectors xA = yB, from the left kernel of the stacked bases."""
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.field, a.ambient)
    stacked = Matrix.vstack(a.field, [a.basis, b.basis], a.ambient)
    relations = stacked.T.kernel_basis()
    left = relations.select_cols(range(a.dim))
    return Subspace.span(Matrix.vstack(a.field, [left @ a.basis], a.ambient))


def spin(seeds: Matrix, operators: Iterable[Matrix]) -> Subspace:
    """
    Smallest subspace containing ``seeds`` and stable under every operator.

    Args:
        seeds: Row vectors to start from
        operators: Square matrices acting on column vectors

    Returns:
        The spun subspace, in reduced row echelon form

    Example:
        Spinning e_1 under the 2×2 Jordan block gives the whole plane.
    """
    field = seeds.field
    width = seeds.ncols
    transposed = [op.T for op in operators]
    for op in transposed:
        if op.shape != (width, width):
            raise ValidationError(f"Operator of shape {op.shape} cannot act on F^{width}.")
    current = Subspace.span(seeds)
    while True:
        images = [current.basis] + [current.basis @ t for t in transposed]
        grown = Subspace.span(Matrix.vstack(field, images, width))
        if grown.dim == current.dim:
            return grown
        current = grown
