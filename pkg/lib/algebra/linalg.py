"""
Exact linear algebra over Q or Z/p and over polynomial rings.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .arith import QQ, GF
from .exceptions import CannotCompleteError, InputError
from .poly import Polynomial

logger = logging.getLogger(__name__)

SCALAR = 'scalar'
POLYNOMIAL = 'polynomial'


@dataclass(frozen=True)
class ExactMatrix:
    """
    Row-major matrix of field elements (``kind == 'scalar'``, ``domain`` a
    field) or of polynomials (``kind == 'polynomial'``, ``domain`` a ring).
    """

    rows: int
    cols: int
    entries: tuple
    kind: str = SCALAR
    domain: object = QQ

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError("matrices need at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows, field=QQ):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InputError("ragged or empty matrix")
        return cls(len(rows), len(rows[0]), tuple(field.convert(x) for r in rows for x in r), SCALAR, field)

    @classmethod
    def from_polynomial_rows(cls, rows, ring):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InputError("ragged or empty matrix")
        entries = tuple(x if isinstance(x, Polynomial) else ring.constant(x) for r in rows for x in r)
        return cls(len(rows), len(rows[0]), entries, POLYNOMIAL, ring)

    @classmethod
    def identity(cls, size, field=QQ):
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], field)

    @property
    def field(self):
        return self.domain if self.kind == SCALAR else self.domain.field

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return ExactMatrix(
            self.cols, self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
            self.kind, self.domain,
        )

    def with_columns(self, columns):
        """A copy with extra columns (each a sequence of ``rows`` entries) appended."""
        rows = self.to_rows()
        for column in columns:
            for i, x in enumerate(column):
                rows[i].append(x)
        if self.kind == SCALAR:
            return ExactMatrix.from_rows(rows, self.domain)
        return ExactMatrix.from_polynomial_rows(rows, self.domain)

    def apply(self, vector):
        """A·v for a scalar matrix."""
        field = self.field
        vector = [field.convert(x) for x in vector]
        if len(vector) != self.cols:
            raise InputError("vector length does not match the column count")
        out = []
        for i in range(self.rows):
            total = field.zero
            for a, x in zip(self.row(i), vector):
                total = field.add(total, field.mul(a, x))
            out.append(total)
        return tuple(out)

    def reduce_mod(self, p):
        """The same scalar matrix over GF(p)."""
        if self.kind != SCALAR:
            raise InputError("only scalar matrices reduce modulo a prime")
        target = GF(p)
        return ExactMatrix(self.rows, self.cols, tuple(target.convert(x) for x in self.entries), SCALAR, target)

    def evaluate(self, point):
        """Scalar matrix obtained by evaluating every polynomial entry at ``point``."""
        if self.kind != POLYNOMIAL:
            raise InputError("only polynomial matrices can be evaluated")
        values = tuple(f.evaluate(point) for f in self.entries)
        return ExactMatrix(self.rows, self.cols, values, SCALAR, self.domain.field)


def _require_scalar(matrix):
    if matrix.kind != SCALAR:
        raise InputError("operation needs a scalar matrix")


def _integer_rows(matrix):
    """Rows scaled to integers, and the product of the scale factors."""
    rows = []
    scale = 1
    for i in range(matrix.rows):
        row = [Fraction(x) for x in matrix.row(i)]
        factor = lcm(*(x.denominator for x in row))
        scale *= factor
        rows.append([int(x * factor) for x in row])
    return rows, scale


def _bareiss(rows, ncols):
    """
    Fraction-free elimination on integer rows (mutated). Returns the rank,
    the last pivot and the sign of the row permutation.
    """
    rank, previous, sign = 0, 1, 1
    nrows = len(rows)
    for c in range(ncols):
        if rank == nrows:
            break
        pivot = next((i for i in range(rank, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != rank:
            rows[pivot], rows[rank] = rows[rank], rows[pivot]
            sign = -sign
        p = rows[rank][c]
        for i in range(rank + 1, nrows):
            a = rows[i][c]
            for j in range(c + 1, ncols):
                rows[i][j] = (p * rows[i][j] - a * rows[rank][j]) // previous
            rows[i][c] = 0
        previous = p
        rank += 1
    return rank, previous, sign


def echelon_form(matrix):
    """Reduced row echelon form over the matrix field: (rows, pivot columns)."""
    field = matrix.field
    rows = matrix.to_rows()
    pivots = []
    r = 0
    for c in range(matrix.cols):
        pivot = next((i for i in range(r, matrix.rows) if not field.is_zero(rows[i][c])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        for i in range(matrix.rows):
            if i != r and not field.is_zero(rows[i][c]):
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == matrix.rows:
            break
    return rows, pivots


def rank(matrix):
    _require_scalar(matrix)
    if matrix.field.characteristic == 0:
        rows, _ = _integer_rows(matrix)
        return _bareiss(rows, matrix.cols)[0]
    return len(echelon_form(matrix)[1])


def _polynomial_determinant(matrix):
    ring = matrix.domain
    n = matrix.rows
    memo = {}

    def expand(start, columns):
        if start == n:
            return ring.one()
        found = memo.get((start, columns))
        if found is not None:
            return found
        total = ring.zero()
        for position, c in enumerate(columns):
            a = matrix.entry(start, c)
            if not a:
                continue
            minor = expand(start + 1, columns[:position] + columns[position + 1:])
            term = a * minor
            total = total - term if position % 2 else total + term
        memo[(start, columns)] = total
        return total

    return expand(0, tuple(range(n)))


def determinant(matrix):
    """Bareiss for scalar matrices, memoized cofactor expansion for polynomial ones."""
    if matrix.rows != matrix.cols:
        raise InputError("determinant of a non-square matrix")
    if matrix.kind == POLYNOMIAL:
        return _polynomial_determinant(matrix)
    field = matrix.field
    if field.characteristic == 0:
        rows, scale = _integer_rows(matrix)
        r, last, sign = _bareiss(rows, matrix.cols)
        if r < matrix.rows:
            return field.zero
        return Fraction(sign * last, scale)
    rows = matrix.to_rows()
    det = field.one
    for c in range(matrix.cols):
        pivot = next((i for i in range(c, matrix.rows) if not field.is_zero(rows[i][c])), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            rows[pivot], rows[c] = rows[c], rows[pivot]
            det = field.neg(det)
        p = rows[c][c]
        det = field.mul(det, p)
        inv = field.inv(p)
        for i in range(c + 1, matrix.rows):
            factor = field.mul(rows[i][c], inv)
            if not field.is_zero(factor):
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
    return det


def kernel_basis(matrix):
    """
    Basis of the right null space, one vector per free column in increasing
    column order; each vector is scaled so its first nonzero entry is 1.
    """
    _require_scalar(matrix)
    field = matrix.field
    rows, pivots = echelon_form(matrix)
    basis = []
    for free in range(matrix.cols):
        if free in pivots:
            continue
        vector = [field.zero] * matrix.cols
        vector[free] = field.one
        for r, c in enumerate(pivots):
            vector[c] = field.neg(rows[r][free])
        lead = next(x for x in vector if not field.is_zero(x))
        inv = field.inv(lead)
        basis.append(tuple(field.mul(x, inv) for x in vector))
    return basis


def complete_to_invertible(matrix):
    """
    Extend a full-column-rank matrix with rows >= cols to a square invertible
    matrix by appending standard basis columns in index order, keeping each one
    that raises the rank.

    Raises:
        CannotCompleteError: when the matrix is rank deficient
    """
    _require_scalar(matrix)
    if matrix.rows < matrix.cols:
        raise InputError("completion needs at least as many rows as columns")
    current = rank(matrix)
    if current < matrix.cols:
        raise CannotCompleteError(f"rank {current} < {matrix.cols} columns")
    completed = matrix
    for i in range(matrix.rows):
        if completed.cols == matrix.rows:
            break
        unit = [int(k == i) for k in range(matrix.rows)]
        candidate = completed.with_columns([unit])
        if rank(candidate) > current:
            completed, current = candidate, current + 1
    logger.debug("completed a %dx%d matrix with %d columns", matrix.rows, matrix.cols, completed.cols - matrix.cols)
    return completed


def _submatrix(matrix, rows, cols):
    entries = tuple(matrix.entry(i, j) for i in rows for j in cols)
    return ExactMatrix(len(rows), len(cols), entries, matrix.kind, matrix.domain)


def minors(matrix, size):
    """All size x size minors: row subsets outer, column subsets inner, both lexicographic."""
    if size < 1 or size > min(matrix.rows, matrix.cols):
        raise InputError(f"no {size}x{size} minors in a {matrix.rows}x{matrix.cols} matrix")
    return [
        determinant(_submatrix(matrix, rows, cols))
        for rows in combinations(range(matrix.rows), size)
        for cols in combinations(range(matrix.cols), size)
    ]


def jacobian(generators, ring=None):
    """Polynomial matrix of partial derivatives: one row per generator, one column per variable."""
    generators = list(generators)
    ring = ring or generators[0].ring
    return ExactMatrix.from_polynomial_rows(
        [[g.derivative(name) for name in ring.variables] for g in generators], ring
    )
