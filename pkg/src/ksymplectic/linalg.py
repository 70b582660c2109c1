"""Exact rational matrices and the lattice of linear subspaces.

Scalars are :class:`fractions.Fraction`; a vector is a tuple of fractions.
A :class:`Subspace` stores the reduced row-echelon form of a spanning set,
so two subspaces are equal exactly when their stored bases are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, SchemaError

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(x)


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}") from exc


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def _common_denominator(values: Iterable) -> int:
    d = 1
    for x in values:
        q = x.denominator
        if q != 1:
            d = d * q // gcd(d, q)
    return d


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


class RationalMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data", "_sparse")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionError("ragged matrix rows")
            if cols is not None and cols != width:
                raise DimensionError(f"expected {cols} columns, got {width}")
        else:
            width = cols if cols is not None else 0
        self._data = rows
        self.rows = len(rows)
        self.cols = width
        self._sparse = None

    @classmethod
    def _trusted(cls, rows: tuple, cols: int) -> RationalMatrix:
        """Wrap a tuple of equal-length tuples of Fractions without checks."""
        m = cls.__new__(cls)
        m._data, m.rows, m.cols, m._sparse = rows, len(rows), cols, None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([unit_vector(n, i) for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> RationalMatrix:
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls(zip(*columns))

    @classmethod
    def block_diagonal(cls, a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
        top = [row + (ZERO,) * b.cols for row in a]
        bottom = [(ZERO,) * a.cols + row for row in b]
        return cls(top + bottom, cols=a.cols + b.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self._data for x in row)

    def __iter__(self):
        return iter(self._data)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._data[i][j]
        return self._data[idx]

    def _sparse_rows(self) -> tuple:
        """``(d, rows)``: self = rows / d with rows of nonzero (column, integer) pairs.

        Built once; products then run in integer arithmetic.
        """
        if self._sparse is None:
            d = _common_denominator(self.entries)
            self._sparse = (d, tuple(
                tuple((j, int(a * d)) for j, a in enumerate(r) if a) for r in self._data
            ))
        return self._sparse

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix(self.columns(), cols=self.rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self._data)
        return f"RationalMatrix([{body}])"

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self, other)], cols=self.cols
        )

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self, other)], cols=self.cols
        )

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix([[-a for a in r] for r in self], cols=self.cols)

    def scale(self, c) -> RationalMatrix:
        c = to_fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self], cols=self.cols)

    def __matmul__(self, other):
        d, rows = self._sparse_rows()
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            e = _common_denominator(other.entries)
            cols = [[int(x * e) for x in c] for c in other.columns()]
            de = d * e
            return RationalMatrix._trusted(tuple(
                tuple(Fraction(sum(a * c[j] for j, a in r), de) for c in cols) for r in rows
            ), other.cols)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        e = _common_denominator(v)
        iv = [int(x * e) for x in v]
        de = d * e
        return tuple(Fraction(sum(a * iv[j] for j, a in r), de) for r in rows)

    def is_skew(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i, self.cols)
        )

    def rank(self) -> int:
        return rref(self)[2]

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> RationalMatrix:
        if self.rows != self.cols:
            raise DimensionError("only square matrices are invertible")
        n = self.rows
        aug = RationalMatrix([r + unit_vector(n, i) for i, r in enumerate(self)])
        reduced, pivots, _ = rref(aug)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return RationalMatrix([row[n:] for row in reduced], cols=n)

    def to_json(self) -> list:
        return [[format_rational(x) for x in row] for row in self]

    @classmethod
    def from_json(cls, doc) -> RationalMatrix:
        if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
            raise SchemaError("matrix must be a JSON array of arrays")
        try:
            return cls([[parse_rational(x) for x in row] for row in doc])
        except DimensionError as exc:
            raise SchemaError(str(exc)) from exc


def _integer_row(row) -> list[int]:
    den = 1
    for x in row:
        if x.denominator != 1:
            den = den * x.denominator // gcd(den, x.denominator)
    return [x.numerator * (den // x.denominator) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int], int]:
    """Reduced row-echelon form, pivot columns and rank of ``m``.

    Elimination runs fraction-free on integer rows (each scaled to primitive
    form); pivots are normalised to 1 only at the end.
    """
    rows = [_integer_row(r) for r in m]
    n_rows, n_cols = m.rows, m.cols
    pivots = []
    piv_r = 0
    for c in range(n_cols):
        if piv_r == n_rows:
            break
        for i in range(piv_r, n_rows):
            if rows[i][c]:
                break
        else:
            continue
        rows[piv_r], rows[i] = rows[i], rows[piv_r]
        prow = rows[piv_r]
        p = prow[c]
        for i in range(n_rows):
            f = rows[i][c]
            if i != piv_r and f:
                g = gcd(p, f)
                a, b = p // g, f // g
                rows[i] = _primitive([a * x - b * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        piv_r += 1
    out = []
    for i, row in enumerate(rows):
        if i < piv_r:
            p = row[pivots[i]]
            out.append(tuple(Fraction(x, p) if x else ZERO for x in row))
        else:
            out.append((ZERO,) * n_cols)
    return RationalMatrix._trusted(tuple(out), n_cols), pivots, len(pivots)


class Subspace:
    """A linear subspace of Q^N held by its canonical (RREF) row basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = tuple(vector(v) for v in vectors)
        if any(len(v) != ambient_dim for v in vecs):
            raise DimensionError(f"generators must have length {ambient_dim}")
        reduced, pivots, rank = rref(RationalMatrix._trusted(vecs, ambient_dim))
        self.ambient_dim = ambient_dim
        self.basis = RationalMatrix._trusted(reduced._data[:rank], ambient_dim)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def span_units(cls, n: int, indices: Iterable[int]) -> Subspace:
        """Span of the canonical basis vectors with the given 0-based indices."""
        return cls(n, [unit_vector(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def vectors(self) -> list[Vector]:
        return list(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace({self.ambient_dim}, {[list(map(str, v)) for v in self.basis]})"

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __contains__(self, v) -> bool:
        return membership(v, self)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersection(self, other)

    def __le__(self, other: Subspace) -> bool:
        return contains(other, self)

    def __ge__(self, other: Subspace) -> bool:
        return contains(self, other)

    def annihilator(self) -> Subspace:
        """Linear forms (as coefficient vectors) vanishing on this subspace."""
        return kernel(self.basis)

    def to_json(self) -> dict:
        return {"ambient": self.ambient_dim, "basis": self.basis.to_json()}

    @classmethod
    def from_json(cls, doc) -> Subspace:
        if not isinstance(doc, dict) or "ambient" not in doc or "basis" not in doc:
            raise SchemaError("subspace must be an object with 'ambient' and 'basis'")
        n = doc["ambient"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise SchemaError("'ambient' must be a non-negative integer")
        basis = doc["basis"]
        if not isinstance(basis, list) or not all(isinstance(r, list) for r in basis):
            raise SchemaError("'basis' must be an array of arrays")
        rows = [[parse_rational(x) for x in r] for r in basis]
        try:
            return cls(n, rows)
        except DimensionError as exc:
            raise SchemaError(str(exc)) from exc


def kernel(m: RationalMatrix) -> Subspace:
    """Right null space ``{v : m v = 0}``."""
    reduced, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        basis.append(v)
    return Subspace(m.cols, basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    return Subspace(a.ambient_dim, a.vectors() + b.vectors())


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    constraints = a.annihilator().vectors() + b.annihilator().vectors()
    return kernel(RationalMatrix(constraints, cols=a.ambient_dim))


def membership(v: Sequence, a: Subspace) -> bool:
    v = vector(v)
    if len(v) != a.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    # with an RREF basis, v is in the span iff v == sum_i v[p_i] * row_i;
    # checked on integer scalings (basis = rows / d, v = iv / e)
    d, rows = a.basis._sparse_rows()
    e = _common_denominator(v)
    iv = [int(x * e) for x in v]
    acc = [0] * len(v)
    for row, p in zip(rows, a.pivots):
        c = iv[p]
        if c:
            for j, x in row:
                acc[j] += c * x
    return all(x == d * y for x, y in zip(acc, iv))


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is a subspace of ``a``."""
    a._check(b)
    return all(membership(v, a) for v in b.basis)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._check(b)
    return a == b
