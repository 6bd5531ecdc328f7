"""Rank, reduced row echelon form and kernels over exact domains."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import kernels
from .domains import PRIME_FIELD, CoefficientDomain, UnsupportedDomainError
from .matrix import ExactMatrix


def _integer_rows(m: ExactMatrix) -> list[dict]:
    out = []
    for r in m.rows():
        den = 1
        for _, v in r:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append({j: int(v * den) for j, v in r})
    return out


def rank(m: ExactMatrix, domain: CoefficientDomain | None = None, backend: str | None = None) -> int:
    """Exact rank of ``m`` over ``domain`` (default: the matrix's own domain).

    Over Z this is the rank over Q.  The longer dimension is streamed
    through the kernel so pivot rows stay short.
    """
    domain = domain or m.domain
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.ncols > m.nrows:
        m = m.transpose()
    if domain.kind == PRIME_FIELD:
        if m.domain.kind == PRIME_FIELD and m.domain.p != domain.p:
            raise UnsupportedDomainError(f"matrix over {m.domain} has no rank over {domain}")
        p = domain.p
        rows = []
        for r in m.rows():
            row = {}
            for j, v in r:
                row[j] = domain.normalize(v)
            rows.append(row)
        return kernels.rank_mod_p(rows, m.ncols, p, backend)
    if m.domain.kind == PRIME_FIELD:
        raise UnsupportedDomainError(f"matrix over {m.domain} has no rank over {domain}")
    return kernels.rank_integer(_integer_rows(m), m.ncols, backend)


def rref(rows: list[list], domain: CoefficientDomain):
    """Reduced row echelon form of a dense matrix over a field.

    Returns ``(reduced_nonzero_rows, pivot_columns)``.
    """
    if not domain.is_field:
        raise UnsupportedDomainError("rref needs a field")
    ncols = len(rows[0]) if rows else 0
    a = [[domain.normalize(v) for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = domain.inverse(a[r][c])
        a[r] = [domain.normalize(v * inv) for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [domain.normalize(x - f * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: list[list], ncols: int, domain: CoefficientDomain) -> list[list]:
    """Basis of ``{x : A x = 0}`` over a field, one vector per free column."""
    red, pivots = rref(rows, domain) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for r, c in zip(red, pivots):
            x[c] = domain.normalize(-r[f])
        basis.append(x)
    return basis
