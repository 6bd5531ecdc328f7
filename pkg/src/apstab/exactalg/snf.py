"""Smith normal form over the integers."""

from __future__ import annotations

from dataclasses import dataclass

from .domains import INTEGERS, ZZ, UnsupportedDomainError
from .matrix import ExactMatrix


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]
    U: ExactMatrix | None = None
    V: ExactMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    def diagonal(self, nrows: int, ncols: int) -> ExactMatrix:
        return ExactMatrix.from_entries(
            nrows, ncols, {(i, i): d for i, d in enumerate(self.invariant_factors)})


def smith_normal_form(m: ExactMatrix, transforms: bool = False) -> SmithForm:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    With ``transforms=True`` also returns unimodular ``U`` and ``V`` such
    that ``U @ m @ V`` is the diagonal form.  Without transforms, unit
    pivots are first eliminated sparsely and only the remaining core is
    handled densely.
    """
    if m.domain.kind != INTEGERS:
        raise UnsupportedDomainError(f"Smith normal form needs integer entries, not {m.domain}")
    if transforms:
        a = m.to_dense()
        factors, U, V = _snf_dense(a, m.nrows, m.ncols, True)
        return SmithForm(tuple(factors), ExactMatrix.from_dense(U, ncols=m.nrows),
                         ExactMatrix.from_dense(V, ncols=m.ncols))
    ones, core, ncols = _eliminate_unit_pivots(m.row_dicts(), m.ncols)
    factors = [1] * ones
    if core:
        used = sorted({j for r in core for j in r})
        index = {j: k for k, j in enumerate(used)}
        dense = [[0] * len(used) for _ in core]
        for i, r in enumerate(core):
            for j, v in r.items():
                dense[i][index[j]] = v
        f, _, _ = _snf_dense(dense, len(core), len(used), False)
        factors.extend(f)
        factors.sort()
    return SmithForm(tuple(factors))


def _eliminate_unit_pivots(rows, ncols):
    """Repeatedly pivot on entries equal to +-1.

    A unit pivot at (i, j) contributes an invariant factor 1; clearing
    column j by row operations and then row i by column operations removes
    both without touching the rest of the matrix.
    """
    rows = [r for r in rows if r]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for j in r:
            cols.setdefault(j, set()).add(i)
    alive = set(range(len(rows)))
    ones = 0
    changed = True
    while changed:
        changed = False
        # sparsest rows first limits fill-in
        for i in sorted(alive, key=lambda k: len(rows[k])):
            if i not in alive:
                continue
            r = rows[i]
            j = next((c for c, v in sorted(r.items(), key=lambda cv: len(cols[cv[0]]))
                      if v in (1, -1)), None)
            if j is None:
                continue
            u = r[j]
            for k in list(cols[j]):
                if k == i:
                    continue
                rk = rows[k]
                f = rk[j] * u  # u == 1/u
                for c, v in r.items():
                    nv = rk.get(c, 0) - f * v
                    if nv:
                        if c not in rk:
                            cols[c].add(k)
                        rk[c] = nv
                    else:
                        if c in rk:
                            del rk[c]
                            cols[c].discard(k)
                if not rk:
                    alive.discard(k)
            for c in r:
                cols[c].discard(i)
            alive.discard(i)
            ones += 1
            changed = True
    core = [rows[i] for i in sorted(alive) if rows[i]]
    return ones, core, ncols


def _snf_dense(a, m, n, track):
    a = [list(r) for r in a]
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if track:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        if track:
            for r in V:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, f):  # row_dst += f * row_src
        ra, rs = a[dst], a[src]
        for c in range(n):
            if rs[c]:
                ra[c] += f * rs[c]
        if track:
            ua, us = U[dst], U[src]
            for c in range(m):
                if us[c]:
                    ua[c] += f * us[c]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for r in a:
            if r[src]:
                r[dst] += f * r[src]
        if track:
            for r in V:
                if r[src]:
                    r[dst] += f * r[src]

    factors = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            ri = a[i]
            for j in range(t, n):
                v = ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # smallest leftover in the pivot cross becomes the new pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            if cand:
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(a[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            if track:
                U[t] = [-v for v in U[t]]
        factors.append(a[t][t])
        t += 1
    return factors, U, V


def abelian_invariants(m: ExactMatrix) -> tuple[int, tuple[int, ...]]:
    """``(free_rank, torsion)`` of the cokernel of ``m`` (relations as rows)."""
    snf = smith_normal_form(m if m.domain == ZZ else m.over(ZZ))
    return m.ncols - snf.rank, snf.torsion
