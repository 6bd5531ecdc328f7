"""The graded algebra A_P = k[P] / (rho rho' - sigma (rho * rho')).

In grading n >= 1 the algebra has basis ``<n, rho>`` (the normal form
``sigma^(n-1) rho``), one element per group element; grading 0 is
spanned by the unit.  We write basis elements as pairs ``(n, i)`` with
``i`` an element index, and the unit as ``(0, None)``.
"""

from __future__ import annotations

from collections import Counter

from ..exactalg import CoefficientDomain, UnsupportedDomainError
from .group import FiniteAbelianGroup

UNIT = (0, None)


class APAlgebra:
    def __init__(self, group: FiniteAbelianGroup, field: CoefficientDomain):
        self.group = group
        self.field = field

    def require_field(self):
        if not self.field.is_field:
            raise UnsupportedDomainError(f"Tor over A_P needs a field, not {self.field}")

    def dim(self, n: int) -> int:
        if n < 0:
            return 0
        return 1 if n == 0 else len(self.group)

    def basis(self, n: int):
        if n == 0:
            return [UNIT]
        return [(n, i) for i in range(len(self.group))]

    def multiply(self, a, b):
        """Product of two basis elements, again a basis element."""
        if a[0] == 0:
            return b
        if b[0] == 0:
            return a
        return (a[0] + b[0], self.group.op(a[1], b[1]))

    def multiply_elements(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, u in x.items():
            for b, v in y.items():
                c = self.multiply(a, b)
                out[c] = self.field.normalize(out.get(c, 0) + u * v)
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        return f"APAlgebra(P={self.group}, k={self.field})"


def ap_multiply(group: FiniteAbelianGroup, a, b):
    """``(n, rho) . (m, rho') = (n + m, rho * rho')`` for n, m >= 1 (element indices)."""
    n, r = a
    m, s = b
    if n < 1 or m < 1:
        raise ValueError("both factors must have grading >= 1")
    return (n + m, group.op(r, s))


def rewrite_monomial(group: FiniteAbelianGroup, factors, rng=None):
    """Reduce a monomial of k[P] (a multiset of element indices) to normal form.

    Applies single relations ``rho rho' -> sigma (rho * rho')`` to a pair of
    non-identity factors until at most one remains, choosing the pair at
    random when ``rng`` is given.  Returns ``(degree, element)``.
    """
    c = Counter(factors)
    total = sum(c.values())
    if total == 0:
        return UNIT
    while True:
        others = sorted(e for e in c.elements() if e != 0)
        if len(others) <= 1:
            break
        if rng is None:
            i, j = 0, 1
        else:
            i, j = rng.sample(range(len(others)), 2)
        a, b = others[i], others[j]
        c[a] -= 1
        c[b] -= 1
        c[0] += 1
        c[group.op(a, b)] += 1
        c = +c
    others = [e for e in c.elements() if e != 0]
    return (total, others[0] if others else 0)
