"""Tor over A_P through the reduced bar complex.

``B_d = I^{(x)d} (x) M`` with differential

    d(a_1|...|a_d|x) = sum_{i=1}^{d-1} (-1)^i a_1|...|a_i a_{i+1}|...|x
                       + (-1)^d a_1|...|a_{d-1}|a_d x

(the face ``eps(a_1) a_2|...`` vanishes on the augmentation ideal).  The
complex is graded by total grading n, and each slice is finite.  For the
trivial module the slices split further by the total P-weight
``rho_1 * ... * rho_d``, which the differential preserves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from ..exactalg import ExactMatrix, FreeChainComplex, rank
from .algebra import APAlgebra
from .module import GradedModulePresentation, RealizedModule


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for cut in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cut + (total,)
        out.append(tuple(bounds[i + 1] - bounds[i] for i in range(parts)))
    return tuple(out)


@dataclass(frozen=True)
class HNumber:
    """``max{n : Tor_{n,d} != 0}`` inside the window ``n <= window`` (None = -infinity)."""

    value: int | None
    window: int

    @property
    def at_window_edge(self) -> bool:
        return self.value is not None and self.value >= self.window

    def __str__(self):
        return "-inf" if self.value is None else str(self.value)


@dataclass
class TorTable:
    field: object
    N: int
    D: int
    dims: dict = field(default_factory=dict)

    def __getitem__(self, nd) -> int:
        n, d = nd
        if not (0 <= n <= self.N and 0 <= d <= self.D):
            raise KeyError(f"({n}, {d}) outside the computed window N={self.N}, D={self.D}")
        return self.dims.get((n, d), 0)

    def nonzero(self):
        return sorted(k for k, v in self.dims.items() if v)

    def as_rows(self):
        return [[self[n, d] for n in range(self.N + 1)] for d in range(self.D + 1)]


def h_number(t: TorTable, d: int) -> HNumber:
    vals = [n for n in range(t.N + 1) if t[n, d]]
    return HNumber(max(vals) if vals else None, t.N)


# ---------------------------------------------------------------- trivial module

def trivial_bar_blocks(alg: APAlgebra, n: int, d: int):
    """Basis of ``B_d(n)`` for M = k, split by P-weight: ``{weight: [(comp, rhos), ...]}``."""
    G = alg.group
    blocks: dict[int, list] = {}
    for comp in compositions(n, d):
        for rhos in itertools.product(range(len(G)), repeat=d):
            blocks.setdefault(G.product(rhos), []).append((comp, rhos))
    return blocks


def _trivial_boundary(alg: APAlgebra, src: list, tgt: list) -> ExactMatrix:
    G = alg.group
    index = {b: k for k, b in enumerate(tgt)}
    cols = []
    for comp, rhos in src:
        col: dict[int, int] = {}
        for i in range(1, len(comp)):
            c = comp[:i - 1] + (comp[i - 1] + comp[i],) + comp[i + 1:]
            r = rhos[:i - 1] + (G.op(rhos[i - 1], rhos[i]),) + rhos[i + 1:]
            k = index[(c, r)]
            col[k] = col.get(k, 0) + (-1) ** i
        cols.append(col)
    return ExactMatrix(len(src), len(tgt), cols, alg.field).transpose()


def trivial_bar_complex(alg: APAlgebra, n: int, weight: int | None = None) -> FreeChainComplex:
    """Grading-n slice of the bar complex for Tor(k, k), optionally one weight block."""
    bases = {}
    for d in range(0, n + 1):
        if n == 0 and d == 0:
            bases[0] = [((), ())]
            continue
        blocks = trivial_bar_blocks(alg, n, d)
        if weight is None:
            bases[d] = [b for w in sorted(blocks) for b in blocks[w]]
        else:
            bases[d] = blocks.get(weight, [])
    dims = {d: len(b) for d, b in bases.items()}
    bnd = {d: _trivial_boundary(alg, bases[d], bases[d - 1]) for d in range(1, n + 1)}
    return FreeChainComplex(dims, bnd, alg.field, validate=False, name=f"bar(k,k) n={n}")


def bar_tor_trivial(alg: APAlgebra, N: int, D: int | None = None, backend=None) -> TorTable:
    """``dim Tor^A_{n,d}(k, k)`` for ``n <= N``, ``d <= D``."""
    alg.require_field()
    D = N if D is None else D
    table = TorTable(alg.field, N, D)
    table.dims[(0, 0)] = 1
    for n in range(1, N + 1):
        ranks = {}
        dims = {}
        for d in range(1, min(n, D + 1) + 1):
            blocks = trivial_bar_blocks(alg, n, d)
            lower = trivial_bar_blocks(alg, n, d - 1) if d > 1 else {}
            dims[d] = sum(len(b) for b in blocks.values())
            r = 0
            if d > 1:
                for w, src in sorted(blocks.items()):
                    tgt = lower.get(w, [])
                    if src and tgt:
                        r += rank(_trivial_boundary(alg, src, tgt), backend=backend)
            ranks[d] = r
        for d in range(1, min(n, D) + 1):
            table.dims[(n, d)] = dims[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return table


# ---------------------------------------------------------------- general module

class _ModuleBar:
    def __init__(self, M: RealizedModule):
        self.M = M
        self.alg = M.alg
        self._act_cache = {}

    def act_columns(self, k, rho, m):
        key = (k, rho, m)
        if key not in self._act_cache:
            mat = self.M.act_basis_element(k, rho, m)
            cols = [dict() for _ in range(mat.ncols)]
            for i, j, v in mat.entries():
                cols[j][i] = v
            self._act_cache[key] = cols
        return self._act_cache[key]

    def basis(self, n, d):
        P = len(self.alg.group)
        out = []
        for s in range(d, n + 1):
            m = n - s
            dm = self.M.dims[m]
            if dm == 0:
                continue
            for comp in compositions(s, d):
                for rhos in itertools.product(range(P), repeat=d):
                    for j in range(dm):
                        out.append((comp, rhos, m, j))
        return out

    def boundary(self, src, tgt) -> ExactMatrix:
        G = self.alg.group
        index = {b: k for k, b in enumerate(tgt)}
        cols = []
        for comp, rhos, m, j in src:
            d = len(comp)
            col: dict = {}
            for i in range(1, d):
                c = comp[:i - 1] + (comp[i - 1] + comp[i],) + comp[i + 1:]
                r = rhos[:i - 1] + (G.op(rhos[i - 1], rhos[i]),) + rhos[i + 1:]
                k = index[(c, r, m, j)]
                col[k] = col.get(k, 0) + (-1) ** i
            sign = (-1) ** d
            img = self.act_columns(comp[-1], rhos[-1], m)[j]
            mm = m + comp[-1]
            for t, v in img.items():
                k = index[(comp[:-1], rhos[:-1], mm, t)]
                col[k] = col.get(k, 0) + sign * v
            cols.append(col)
        return ExactMatrix(len(src), len(tgt), cols, self.alg.field).transpose()


def module_bar_complex(M: RealizedModule, n: int, dmax: int | None = None) -> FreeChainComplex:
    """Grading-n slice ``B_0(n) <- ... <- B_dmax(n)`` for ``Tor(k, M)``."""
    dmax = n if dmax is None else min(dmax, n)
    if n > M.N:
        raise ValueError(f"module realized only up to grading {M.N}")
    bar = _ModuleBar(M)
    bases = {d: bar.basis(n, d) for d in range(dmax + 1)}
    dims = {d: len(b) for d, b in bases.items()}
    bnd = {d: bar.boundary(bases[d], bases[d - 1]) for d in range(1, dmax + 1)}
    return FreeChainComplex(dims, bnd, M.field, validate=False, name=f"bar(k,M) n={n}")


def bar_tor_module(alg: APAlgebra, pres: GradedModulePresentation | RealizedModule, N: int,
                   D: int, backend=None) -> TorTable:
    """``dim Tor^A_{n,d}(k, M)`` for ``n <= N``, ``d <= D``."""
    alg.require_field()
    M = pres if isinstance(pres, RealizedModule) else RealizedModule(pres, alg, N)
    if M.N < N:
        raise ValueError(f"module realized only up to grading {M.N}")
    bar = _ModuleBar(M)
    table = TorTable(alg.field, N, D)
    for n in range(N + 1):
        top = min(D + 1, n)
        bases = {d: bar.basis(n, d) for d in range(top + 1)}
        ranks = {}
        for d in range(1, top + 1):
            if bases[d] and bases[d - 1]:
                ranks[d] = rank(bar.boundary(bases[d], bases[d - 1]), backend=backend)
        for d in range(min(D, n) + 1):
            table.dims[(n, d)] = len(bases[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return table
