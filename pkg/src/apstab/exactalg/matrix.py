"""Sparse exact matrices.

Rows are stored as sorted tuples of ``(column, value)`` pairs with zero
entries dropped.  Values are Python ints (arbitrary precision), or
``Fraction`` over the rationals, or residues in ``[0, p)`` over a prime
field.  No floating point is accepted anywhere.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .domains import ZZ, CoefficientDomain

DENSE_THRESHOLD = 64


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "domain", "_rows", "_hash")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[Mapping[int, object]] | None = None,
                 domain: CoefficientDomain = ZZ):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        self.domain = domain
        self._hash = None
        built = []
        if rows is None:
            built = [()] * nrows
        else:
            for r in rows:
                entries = []
                for j, v in r.items():
                    if not 0 <= j < ncols:
                        raise IndexError(f"column {j} out of range for {ncols} columns")
                    v = domain.normalize(v)
                    if v:
                        entries.append((j, v))
                entries.sort()
                built.append(tuple(entries))
            if len(built) != nrows:
                raise ValueError(f"expected {nrows} rows, got {len(built)}")
        self._rows = tuple(built)

    # construction -----------------------------------------------------

    @classmethod
    def from_entries(cls, nrows, ncols, entries: Mapping[tuple[int, int], object],
                     domain: CoefficientDomain = ZZ) -> "ExactMatrix":
        rows = [dict() for _ in range(nrows)]
        for (i, j), v in entries.items():
            if not 0 <= i < nrows:
                raise IndexError(f"row {i} out of range for {nrows} rows")
            rows[i][j] = rows[i].get(j, 0) + v
        return cls(nrows, ncols, rows, domain)

    @classmethod
    def from_dense(cls, data, domain: CoefficientDomain = ZZ, ncols: int | None = None) -> "ExactMatrix":
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged dense matrix")
        return cls(len(data), ncols, ({j: v for j, v in enumerate(r) if v} for r in data), domain)

    @classmethod
    def zeros(cls, nrows, ncols, domain=ZZ):
        return cls(nrows, ncols, None, domain)

    @classmethod
    def identity(cls, n, domain=ZZ):
        return cls(n, n, ({i: 1} for i in range(n)), domain)

    # access -----------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i) -> tuple:
        return self._rows[i]

    def rows(self):
        return self._rows

    def row_dicts(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return all(not r for r in self._rows)

    def __getitem__(self, ij):
        i, j = ij
        for c, v in self._rows[i]:
            if c == j:
                return v
        return 0

    def entries(self):
        for i, r in enumerate(self._rows):
            for j, v in r:
                yield i, j, v

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def to_csr(self):
        """Return ``(indptr, indices, data)`` as numpy int64 arrays.

        Only valid when every entry fits in a signed 64-bit integer; raises
        ``OverflowError`` otherwise.
        """
        import numpy as np

        n = self.nnz()
        indptr = np.zeros(self.nrows + 1, dtype=np.int64)
        indices = np.empty(n, dtype=np.int64)
        data = np.empty(n, dtype=np.int64)
        k = 0
        for i, r in enumerate(self._rows):
            for j, v in r:
                if not isinstance(v, int) or not -(1 << 62) < v < (1 << 62):
                    raise OverflowError("entry does not fit the machine kernel")
                indices[k] = j
                data[k] = v
                k += 1
            indptr[i + 1] = k
        return indptr, indices, data

    # algebra ----------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        cols = [dict() for _ in range(self.ncols)]
        for i, j, v in self.entries():
            cols[j][i] = v
        return ExactMatrix(self.ncols, self.nrows, cols, self.domain)

    T = property(transpose)

    def over(self, domain: CoefficientDomain) -> "ExactMatrix":
        """The same matrix with entries mapped into ``domain``."""
        return ExactMatrix(self.nrows, self.ncols, (dict(r) for r in self._rows), domain)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        domain = self.domain if self.domain == other.domain else _common(self.domain, other.domain)
        orows = other._rows
        out = []
        for r in self._rows:
            acc = {}
            for k, a in r:
                for j, b in orows[k]:
                    acc[j] = acc.get(j, 0) + a * b
            out.append(acc)
        return ExactMatrix(self.nrows, other.ncols, out, domain)

    def __mul__(self, scalar):
        return ExactMatrix(self.nrows, self.ncols,
                           ({j: v * scalar for j, v in r} for r in self._rows), self.domain)

    __rmul__ = __mul__

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = []
        for r, s in zip(self._rows, other._rows):
            acc = dict(r)
            for j, v in s:
                acc[j] = acc.get(j, 0) + v
            out.append(acc)
        return ExactMatrix(self.nrows, self.ncols, out, self.domain)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self._rows))
        return self._hash

    def __repr__(self):
        if self.nrows * self.ncols <= DENSE_THRESHOLD:
            return f"ExactMatrix({self.to_dense()}, domain={self.domain})"
        return f"<ExactMatrix {self.nrows}x{self.ncols} nnz={self.nnz()} over {self.domain}>"


def _common(a: CoefficientDomain, b: CoefficientDomain) -> CoefficientDomain:
    if a == ZZ:
        return b
    if b == ZZ:
        return a
    raise ValueError(f"cannot combine matrices over {a} and {b}")
