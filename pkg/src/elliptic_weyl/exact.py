"""Small dense exact linear algebra over the rationals.

Only what the reflection representation needs: multiply, apply, compare.
Entries are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"exact entries must be int or Fraction, got {type(x).__name__}")
    return Fraction(x)


class ExactVector:
    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        self.coords = tuple(_as_rational(c) for c in coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ExactVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other: ExactVector) -> ExactVector:
        _check_len(self, other)
        return ExactVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: ExactVector) -> ExactVector:
        _check_len(self, other)
        return ExactVector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> ExactVector:
        return ExactVector(-a for a in self.coords)

    def __rmul__(self, scalar) -> ExactVector:
        s = _as_rational(scalar)
        return ExactVector(s * a for a in self.coords)

    def __repr__(self):
        return f"ExactVector({[str(c) for c in self.coords]})"

    @classmethod
    def zero(cls, dim: int) -> ExactVector:
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim: int, k: int) -> ExactVector:
        v = [0] * dim
        v[k] = 1
        return cls(v)


def _check_len(a: ExactVector, b: ExactVector):
    if len(a) != len(b):
        raise ValueError(f"vector length mismatch: {len(a)} != {len(b)}")


class ExactMatrix:
    """Square matrix stored row-major as a flat tuple of Fractions."""

    __slots__ = ("dim", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        dim = len(rows)
        if dim == 0:
            raise ValueError("matrix dimension must be positive")
        flat = []
        for row in rows:
            if len(row) != dim:
                raise ValueError("matrix must be square")
            flat.extend(_as_rational(x) for x in row)
        self.dim = dim
        self.entries = tuple(flat)

    @classmethod
    def _from_flat(cls, dim: int, flat) -> ExactMatrix:
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.entries = tuple(flat)
        return obj

    @classmethod
    def identity(cls, dim: int) -> ExactMatrix:
        return cls._from_flat(dim, (Fraction(int(r == c)) for r in range(dim) for c in range(dim)))

    @classmethod
    def from_columns(cls, columns: Sequence[ExactVector]) -> ExactMatrix:
        dim = len(columns)
        return cls([[columns[c][r] for c in range(dim)] for r in range(dim)])

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.dim + c]

    def rows(self) -> list[list[Fraction]]:
        d = self.dim
        return [list(self.entries[r * d:(r + 1) * d]) for r in range(d)]

    def column(self, c: int) -> ExactVector:
        return ExactVector(self.entries[r * self.dim + c] for r in range(self.dim))

    def to_int_rows(self) -> list[list[int]]:
        """Integer rows; raises ``ValueError`` if any entry is not an integer."""
        out = []
        for row in self.rows():
            if any(x.denominator != 1 for x in row):
                raise ValueError(f"matrix has non-integer entries: {row}")
            out.append([int(x) for x in row])
        return out

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            return mat_mul(self, other)
        if isinstance(other, ExactVector):
            return mat_apply(self, other)
        return NotImplemented

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        _check_dims(self, other)
        return ExactMatrix._from_flat(self.dim, (a - b for a, b in zip(self.entries, other.entries)))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        _check_dims(self, other)
        return ExactMatrix._from_flat(self.dim, (a + b for a, b in zip(self.entries, other.entries)))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return mat_eq(self, other)

    def __hash__(self):
        return hash((self.dim, self.entries))

    def __repr__(self):
        return f"ExactMatrix({[[str(x) for x in row] for row in self.rows()]})"


def _check_dims(a: ExactMatrix, b: ExactMatrix):
    if a.dim != b.dim:
        raise ValueError(f"matrix dimension mismatch: {a.dim} != {b.dim}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_dims(a, b)
    d = a.dim
    A, B = a.entries, b.entries
    out = []
    for r in range(d):
        row = A[r * d:(r + 1) * d]
        for c in range(d):
            out.append(sum((row[k] * B[k * d + c] for k in range(d) if row[k]), Fraction(0)))
    return ExactMatrix._from_flat(d, out)


def mat_apply(m: ExactMatrix, v: ExactVector) -> ExactVector:
    if m.dim != len(v):
        raise ValueError(f"dimension mismatch: matrix {m.dim} vs vector {len(v)}")
    d = m.dim
    E = m.entries
    return ExactVector(sum((E[r * d + k] * v[k] for k in range(d)), Fraction(0)) for r in range(d))


def mat_eq(a: ExactMatrix, b: ExactMatrix) -> bool:
    _check_dims(a, b)
    return a.entries == b.entries


def mat_pow(m: ExactMatrix, k: int, inverse: ExactMatrix | None = None) -> ExactMatrix:
    """``m**k``; negative ``k`` needs the caller to supply ``inverse``."""
    if k < 0:
        if inverse is None:
            raise ValueError("negative power requires an explicit inverse")
        m, k = inverse, -k
    out = ExactMatrix.identity(m.dim)
    base = m
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out
