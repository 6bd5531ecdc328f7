"""Partitions, self-conjugate partitions and Schur functor dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(x for x in self.parts if x)
        if any(a < b for a, b in zip(p, p[1:])) or any(x < 0 for x in p):
            raise ValueError(f"{self.parts} is not a partition")
        object.__setattr__(self, "parts", p)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    @property
    def is_self_conjugate(self) -> bool:
        return self.conjugate == self

    @property
    def diagonal(self) -> int:
        """``max{i : lambda_i >= i}``, the length of the main diagonal."""
        return sum(1 for i, x in enumerate(self.parts, 1) if x >= i)

    def cells(self):
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j

    def hook(self, i, j) -> int:
        return self.parts[i] - j + self.conjugate.parts[j] - i - 1

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int, max_part: int | None = None):
    """All partitions of n, largest parts first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield Partition((k,) + rest.parts)


def self_conjugate_partitions(n: int, diagonal: int | None = None):
    for lam in partitions(n):
        if lam.is_self_conjugate and (diagonal is None or lam.diagonal == diagonal):
            yield lam


def schur_dim(lam: Partition, m: int) -> int:
    """``dim S_lambda(k^m)`` by the hook-content formula (zero when rows > m)."""
    if lam.rows > m:
        return 0
    num = Fraction(1)
    for i, j in lam.cells():
        num *= Fraction(m + j - i, lam.hook(i, j))
    assert num.denominator == 1
    return num.numerator


def partition_formula_dim(m: int, n: int, d: int) -> int:
    """Sum of ``dim S_lambda(k^m)`` over self-conjugate ``|lambda| = n`` with diagonal ``n - 2d``."""
    diag = n - 2 * d
    if diag < 0:
        return 0
    return sum(schur_dim(lam, m) for lam in self_conjugate_partitions(n, diag))
