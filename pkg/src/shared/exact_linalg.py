"""Exact rational linear algebra over sparse rows"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging

log = logging.getLogger(__name__)

Rational = Fraction
Number = Union[int, Fraction]


class DimensionMismatchError(ValueError):
    """Raised when vectors or matrices of different ambient dimension are combined"""


def _clean(entries: Mapping[int, Number]) -> Dict[int, Fraction]:
    return {k: Fraction(v) for k, v in entries.items() if v != 0}


@dataclass(frozen=True)
class SparseVector:
    """Sparse vector with rational entries and a declared ambient dimension"""

    dim: int
    entries: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.entries))
        for index in self.entries:
            if not 0 <= index < self.dim:
                raise DimensionMismatchError(
                    f"Index {index} outside ambient dimension {self.dim}"
                )

    def __getitem__(self, index: int) -> Fraction:
        return self.entries.get(index, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "SparseVector") -> "SparseVector":
        _check_dims(self.dim, other.dim)
        return SparseVector(self.dim, add_scaled(self.entries, other.entries, 1))

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        _check_dims(self.dim, other.dim)
        return SparseVector(self.dim, add_scaled(self.entries, other.entries, -1))

    def scaled(self, c: Number) -> "SparseVector":
        return SparseVector(self.dim, {k: v * c for k, v in self.entries.items()})

    def dense(self) -> List[Fraction]:
        return [self[i] for i in range(self.dim)]

    @classmethod
    def from_dense(cls, values: Sequence[Number]) -> "SparseVector":
        return cls(len(values), {i: v for i, v in enumerate(values) if v != 0})


@dataclass(frozen=True)
class SparseMatrix:
    """List of sparse rows sharing a column count"""

    rows: Tuple[SparseVector, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            _check_dims(self.ncols, row.dim)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Number]], ncols: Optional[int] = None) -> "SparseMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(tuple(SparseVector(ncols, {j: v for j, v in enumerate(r) if v != 0}) for r in rows), ncols)

    def to_dense(self) -> List[List[Fraction]]:
        return [row.dense() for row in self.rows]

    def apply(self, vector: SparseVector) -> SparseVector:
        """Matrix-vector product"""
        _check_dims(self.ncols, vector.dim)
        out = {}
        for i, row in enumerate(self.rows):
            total = sum((c * vector.entries[j] for j, c in row.entries.items() if j in vector.entries), Fraction(0))
            if total:
                out[i] = total
        return SparseVector(self.nrows, out)


def _check_dims(expected: int, actual: int):
    if expected != actual:
        raise DimensionMismatchError(f"Dimension mismatch: {expected} != {actual}")


def add_scaled(v: Mapping[int, Number], w: Mapping[int, Number], c: Number) -> Dict[int, Number]:
    """Return v + c*w without zero entries"""
    out = dict(v)
    for k, x in w.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------


def _integer_row(entries: Mapping[int, Number]) -> Dict[int, int]:
    """Clear denominators and divide out the content"""
    denominator = 1
    for v in entries.values():
        d = Fraction(v).denominator
        denominator = denominator * d // gcd(denominator, d)
    row = {k: int(Fraction(v) * denominator) for k, v in entries.items() if v != 0}
    return _primitive(row)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    content = 0
    for v in row.values():
        content = gcd(content, v)
        if content == 1:
            return row
    if content > 1:
        return {k: v // content for k, v in row.items()}
    return row


def _eliminate(target: Dict[int, int], pivot_row: Dict[int, int], col: int) -> Dict[int, int]:
    """Fraction-free elimination of ``col`` from ``target`` using ``pivot_row``"""
    a = pivot_row[col]
    b = target[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {k: a * v for k, v in target.items()}
    for k, v in pivot_row.items():
        y = out.get(k, 0) - b * v
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return _primitive(out)


def _echelon(rows: Iterable[Mapping[int, Number]]) -> Tuple[List[Dict[int, int]], List[int]]:
    """Integer row-echelon form; pivot = first nonzero column, then smallest magnitude"""
    remaining = [r for r in (_integer_row(r) for r in rows) if r]
    echelon: List[Dict[int, int]] = []
    pivots: List[int] = []
    while remaining:
        col = min(min(r) for r in remaining)
        candidates = [i for i, r in enumerate(remaining) if col in r]
        best = min(candidates, key=lambda i: abs(remaining[i][col]))
        pivot_row = remaining.pop(best)
        reduced = []
        for r in remaining:
            if col in r:
                r = _eliminate(r, pivot_row, col)
            if r:
                reduced.append(r)
        remaining = reduced
        echelon.append(pivot_row)
        pivots.append(col)
    return echelon, pivots


def _rref_rows(rows: Iterable[Mapping[int, Number]]) -> Tuple[List[Dict[int, Fraction]], List[int]]:
    echelon, pivots = _echelon(rows)
    for i in range(len(echelon) - 1, -1, -1):
        col = pivots[i]
        for j in range(i):
            if col in echelon[j]:
                echelon[j] = _eliminate(echelon[j], echelon[i], col)
    normalized = []
    for row, col in zip(echelon, pivots):
        lead = row[col]
        normalized.append({k: Fraction(v, lead) for k, v in row.items()})
    return normalized, pivots


def rref(m: SparseMatrix) -> Tuple[SparseMatrix, List[int]]:
    """Reduced row-echelon form and pivot columns.

    Zero rows are dropped from the returned matrix, so its row count is the rank.
    """
    rows, pivots = _rref_rows(row.entries for row in m.rows)
    return SparseMatrix(tuple(SparseVector(m.ncols, r) for r in rows), m.ncols), pivots


def rank(m: SparseMatrix) -> int:
    return len(_echelon(row.entries for row in m.rows)[1])


def kernel_basis(m: SparseMatrix) -> List[SparseVector]:
    """Basis of the right null space, one vector per free column"""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        entries = {free: Fraction(1)}
        for row, col in zip(reduced.rows, pivots):
            value = row.entries.get(free)
            if value:
                entries[col] = -value
        basis.append(SparseVector(m.ncols, entries))
    return basis


def span_dim(vectors: Sequence[SparseVector]) -> int:
    """Dimension of the span; vectors must share their ambient dimension"""
    if not vectors:
        return 0
    dim = vectors[0].dim
    for v in vectors:
        _check_dims(dim, v.dim)
    return len(_echelon(v.entries for v in vectors)[1])


def solve(vectors: Sequence[SparseVector], target: SparseVector) -> Optional[List[Fraction]]:
    """Coefficients c with sum c_i v_i = target, or None when target is outside the span"""
    for v in vectors:
        _check_dims(target.dim, v.dim)
    width = len(vectors)
    columns: Dict[int, Dict[int, Fraction]] = {}
    for j, v in enumerate(vectors):
        for i, x in v.entries.items():
            columns.setdefault(i, {})[j] = x
    for i, x in target.entries.items():
        columns.setdefault(i, {})[width] = x
    rows, pivots = _rref_rows(columns[i] for i in sorted(columns))
    if width in pivots:
        return None
    coefficients = [Fraction(0)] * width
    for row, col in zip(rows, pivots):
        coefficients[col] = row.get(width, Fraction(0))
    return coefficients


class Subspace:
    """Incrementally maintained subspace in reduced row-echelon form.

    Rows are kept normalized (pivot entry 1, zero at every other pivot), so the
    coordinates of a member vector are its entries at the pivot columns.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: Dict[int, Dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def reduce(self, vector: Union[SparseVector, Mapping[int, Number]]) -> Dict[int, Fraction]:
        """Residual of ``vector`` after eliminating every pivot column"""
        entries = self._entries(vector)
        residual = dict(entries)
        for col in [k for k in entries if k in self._rows]:
            c = residual.get(col)
            if c:
                residual = add_scaled(residual, self._rows[col], -c)
        return residual

    def add(self, vector: Union[SparseVector, Mapping[int, Number]]) -> bool:
        """Add a vector; returns True if it enlarged the subspace"""
        residual = self.reduce(vector)
        if not residual:
            return False
        col = min(residual)
        lead = residual[col]
        row = {k: Fraction(v) / lead for k, v in residual.items()}
        for other in self._rows.values():
            c = other.get(col)
            if c:
                for k, v in row.items():
                    y = other.get(k, 0) - c * v
                    if y:
                        other[k] = y
                    else:
                        del other[k]
        self._rows[col] = row
        return True

    def extend(self, vectors: Iterable[Union[SparseVector, Mapping[int, Number]]]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def contains(self, vector: Union[SparseVector, Mapping[int, Number]]) -> bool:
        return not self.reduce(vector)

    def coordinates(self, vector: Union[SparseVector, Mapping[int, Number]]) -> List[Fraction]:
        """Coordinates with respect to ``basis()``; raises if the vector lies outside"""
        entries = self._entries(vector)
        if self.reduce(entries):
            raise ValueError("Vector is not contained in the subspace")
        return [Fraction(entries.get(p, 0)) for p in self.pivots]

    def basis(self) -> List[SparseVector]:
        return [SparseVector(self.dim, self._rows[p]) for p in self.pivots]

    def _entries(self, vector) -> Mapping[int, Number]:
        if isinstance(vector, SparseVector):
            _check_dims(self.dim, vector.dim)
            return vector.entries
        return vector


# ---------------------------------------------------------------------------
# Small dense helpers (Cartan matrices and changes of basis)
# ---------------------------------------------------------------------------

DenseMatrix = List[List[Fraction]]


def identity(size: int) -> DenseMatrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def mat_mul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> DenseMatrix:
    if a and len(a[0]) != len(b):
        raise DimensionMismatchError(f"Cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    width = len(b[0]) if b else 0
    return [
        [sum((Fraction(a[i][k]) * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(width)]
        for i in range(len(a))
    ]


def mat_vec(a: Sequence[Sequence[Number]], x: Sequence[Number]) -> List[Fraction]:
    return [sum((Fraction(row[k]) * x[k] for k in range(len(x))), Fraction(0)) for row in a]


def determinant(a: Sequence[Sequence[Number]]) -> Fraction:
    """Bareiss fraction-free determinant"""
    size = len(a)
    if size == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in a]
    sign = 1
    previous = Fraction(1)
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous
        previous = m[k][k]
    return sign * m[size - 1][size - 1]


def inverse(a: Sequence[Sequence[Number]]) -> DenseMatrix:
    """Exact inverse by Gauss-Jordan elimination; raises ValueError when singular"""
    size = len(a)
    augmented = [
        {**{j: Fraction(x) for j, x in enumerate(row) if x != 0}, **{size + i: Fraction(1)}}
        for i, row in enumerate(a)
    ]
    rows, pivots = _rref_rows(augmented)
    if pivots[:size] != list(range(size)) or len(rows) < size:
        raise ValueError("Matrix is singular")
    return [[rows[i].get(size + j, Fraction(0)) for j in range(size)] for i in range(size)]
