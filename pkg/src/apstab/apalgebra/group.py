"""Finite abelian groups as products of cyclic groups."""

from __future__ import annotations

import itertools
import re
from functools import cached_property


class FiniteAbelianGroup:
    """``Z/m_1 x ... x Z/m_r`` with elements as residue tuples.

    Elements are enumerated in lexicographic order, so index 0 is always
    the identity (written sigma in the literature).
    """

    def __init__(self, orders=()):
        orders = tuple(int(m) for m in orders)
        for m in orders:
            if m <= 0:
                raise ValueError("only finite abelian groups are supported (cyclic orders must be >= 1)")
        self.orders = tuple(m for m in orders if m > 1)

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(*(range(m) for m in self.orders)))

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _table(self):
        els = self.elements
        return tuple(tuple(self._index[self._add(a, b)] for b in els) for a in els)

    def _add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def __len__(self):
        return len(self.elements)

    order = property(__len__)

    @property
    def identity(self) -> tuple[int, ...]:
        return self.elements[0]

    def index(self, e) -> int:
        e = tuple(e)
        try:
            return self._index[e]
        except KeyError:
            raise ValueError(f"{e} is not an element of {self}") from None

    def op(self, a: int, b: int) -> int:
        """Product of elements given by index."""
        return self._table[a][b]

    def inverse(self, a: int) -> int:
        return self.index(tuple((-x) % m for x, m in zip(self.elements[a], self.orders)))

    def product(self, idxs) -> int:
        out = 0
        for i in idxs:
            out = self._table[out][i]
        return out

    def element_str(self, a: int) -> str:
        return "(" + ",".join(str(x) for x in self.elements[a]) + ")"

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return f"FiniteAbelianGroup({self.orders})"

    def __str__(self):
        return "x".join(f"Z{m}" for m in self.orders) or "1"


def parse_group(text: str) -> FiniteAbelianGroup:
    """Parse ``1``, ``Z2``, ``Z/3``, ``Z2xZ2`` and similar."""
    t = text.replace(" ", "")
    if t in ("1", "", "trivial"):
        return FiniteAbelianGroup(())
    parts = re.split(r"[x*]", t)
    orders = []
    for p in parts:
        m = re.fullmatch(r"(?:Z/?|C)(\d+)", p)
        if not m:
            if p in ("Z",):
                raise ValueError("infinite groups are not supported; P must be finite")
            raise ValueError(f"cannot parse group factor {p!r}")
        orders.append(int(m.group(1)))
    if any(o == 0 for o in orders):
        raise ValueError("infinite groups are not supported; P must be finite")
    return FiniteAbelianGroup(orders)
