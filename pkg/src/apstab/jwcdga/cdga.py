"""The cdga ``Sym(V[1,0]) (x) Lambda(Sym^2 V [2,1])`` and the D' complex.

Basis conventions (fixed so boundary matrices are reproducible):

* symmetric monomials are exponent vectors, listed in lex order;
* wedge factors are index pairs ``(a, b)``, ``a <= b`` (Sym^2) or arbitrary
  ordered pairs (the ``W (x) W`` factors of D'), each wedge sorted
  increasingly at construction;
* ``d(s (x) w_1 ^ ... ^ w_k) = sum_i (-1)^(i-1) (s . w_i) (x) w_1 ^ .. w_i-hat .. ^ w_k``
  where ``s . w_i`` multiplies the pair into the symmetric part (or is
  zero for D' factors involving the identity element).

The homological degree of a basis element is its wedge length k, and
its grading is ``deg(s) + 2k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from ..exactalg import QQ, ExactMatrix, FreeChainComplex, HomologyResult, ResourceError, homology
from ..exactalg.chain import group_string

DEFAULT_CAP = 200_000


def sym_monomials(m: int, degree: int):
    """Exponent vectors of length m and total degree ``degree``, lex order (largest first)."""
    if m == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in sym_monomials(m - 1, degree - first):
            out.append((first,) + rest)
    return out


def _add_pair(s, pair):
    s = list(s)
    s[pair[0]] += 1
    s[pair[1]] += 1
    return tuple(s)


class _Slice:
    """Shared machinery: basis per degree and the boundary matrices."""

    kind = "slice"

    def __init__(self, nvars: int, n: int, pairs: list[tuple[int, int]], closed):
        self.nvars = nvars
        self.n = n
        self.pairs = pairs
        self._closed = closed  # pair index -> True when d(pair) = 0
        self.bases: dict[int, list] = {}
        for k in range(n // 2 + 1):
            i = n - 2 * k
            mons = sym_monomials(nvars, i)
            if not mons:
                self.bases[k] = []
                continue
            wedges = list(itertools.combinations(range(len(pairs)), k))
            self.bases[k] = [(s, w) for w in wedges for s in mons]
        self.degrees = sorted(self.bases)

    def multiset(self, elem) -> tuple:
        raise NotImplementedError

    def image(self, elem):
        s, w = elem
        out = []
        for pos, pi in enumerate(w):
            if self._closed(pi):
                continue
            sign = 1 if pos % 2 == 0 else -1
            out.append(((_add_pair(s, self.pairs[pi]), w[:pos] + w[pos + 1:]), sign))
        return out

    def complex(self, elements=None, name=None) -> FreeChainComplex:
        """The chain complex on the given basis subset (default: the whole slice)."""
        if elements is None:
            bases = self.bases
        else:
            bases = {k: [] for k in self.degrees}
            for e in elements:
                bases[len(e[1])].append(e)
        dims = {k: len(b) for k, b in bases.items()}
        bnd = {}
        for k in self.degrees:
            if k == 0:
                continue
            index = {e: i for i, e in enumerate(bases.get(k - 1, []))}
            cols = []
            for e in bases[k]:
                col = {}
                for t, sgn in self.image(e):
                    j = index[t]
                    col[j] = col.get(j, 0) + sgn
                cols.append(col)
            bnd[k] = ExactMatrix(len(bases[k]), len(index), cols).transpose()
        return FreeChainComplex(dims, bnd, validate=False, name=name or self.kind)

    def blocks(self):
        groups: dict[tuple, list] = {}
        for k in self.degrees:
            for e in self.bases[k]:
                groups.setdefault(self.multiset(e), []).append(e)
        return [MultisetBlock(mu, self.complex(groups[mu], name=f"{self.kind} block {mu}"))
                for mu in sorted(groups)]

    def size(self) -> int:
        return sum(len(b) for b in self.bases.values())


@dataclass(frozen=True)
class MultisetBlock:
    multiset: tuple  # exponent vector: multiplicity of each generator index
    complex: FreeChainComplex

    @property
    def squarefree(self) -> bool:
        return all(x <= 1 for x in self.multiset)

    def size(self) -> int:
        return self.complex.size()


class JWComplexSlice(_Slice):
    """Grading-n slice of the cdga with ``dim V = m``."""

    kind = "JW"

    def __init__(self, m: int, n: int):
        if m < 0 or n < 0:
            raise ValueError("need m >= 0 and n >= 0")
        self.m = m
        pairs = [(a, b) for a in range(m) for b in range(a, m)]
        super().__init__(m, n, pairs, lambda pi: False)

    def multiset(self, elem):
        s, w = elem
        for pi in w:
            s = _add_pair(s, self.pairs[pi])
        return s


class DPrimeComplexSlice(_Slice):
    """Grading-n slice of ``Sym(V[1,0]) (x) Lambda(W (x) W [2,1])`` for a finite group P.

    ``W = k{P}`` and ``V = k{P - sigma}``; variable ``v`` of V is group
    element ``v + 1`` (element 0 is the identity).  A wedge factor
    ``rho (x) rho'`` maps to ``rho . rho'`` when neither is the identity and to
    zero otherwise.
    """

    kind = "D'"

    def __init__(self, group, n: int):
        self.group = group
        q = len(group)
        pairs = [(a, b) for a in range(q) for b in range(q)]
        self._wpairs = pairs
        # symmetric-part variables are the non-identity elements, shifted down by one
        shifted = [(a - 1, b - 1) for a, b in pairs]
        super().__init__(q - 1, n, shifted, lambda pi: pairs[pi][0] == 0 or pairs[pi][1] == 0)

    def multiset(self, elem):
        # V-indices moved by the differential, plus the untouched closed factors
        s, w = elem
        closed = []
        for pi in w:
            if self._closed(pi):
                closed.append(pi)
            else:
                s = _add_pair(s, self.pairs[pi])
        return (s, tuple(closed))


def build_jw_slice(m: int, n: int) -> JWComplexSlice:
    return JWComplexSlice(m, n)


def block_decompose(slice_: _Slice) -> list[MultisetBlock]:
    return slice_.blocks()


def _merge_torsion(lists) -> tuple[int, ...]:
    """Invariant factors of a direct sum of cyclic groups ``Z/t``."""
    primes: dict[int, list[int]] = {}
    for t in (t for l in lists for t in l):
        x, p = t, 2
        while x > 1:
            if p * p > x:
                p = x
            e = 1
            while x % p == 0:
                x //= p
                e *= p
            if e > 1:
                primes.setdefault(p, []).append(e)
            p += 1
    if not primes:
        return ()
    length = max(len(v) for v in primes.values())
    factors = [1] * length
    for p, pw in primes.items():
        pw = sorted(pw, reverse=True)
        for i, e in enumerate(pw):
            factors[length - 1 - i] *= e
    return tuple(f for f in factors if f > 1)


def sum_homologies(results, domain) -> HomologyResult:
    free: dict[int, int] = {}
    tors: dict[int, list] = {}
    for r in results:
        for d, v in r.free.items():
            free[d] = free.get(d, 0) + v
        for d, t in r.torsion.items():
            tors.setdefault(d, []).append(t)
    torsion = {d: _merge_torsion(v) for d, v in tors.items() if _merge_torsion(v)}
    return HomologyResult(domain, free, torsion)


def _blocks_homology(blocks, domain, cap, threads=1):
    for b in blocks:
        if cap is not None and b.size() > cap:
            raise ResourceError(b.complex.name, b.size(), cap)

    def one(b):
        return homology(b.complex, domain)

    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(one, blocks))
    else:
        results = [one(b) for b in blocks]
    return sum_homologies(results, domain)


def jw_homology(m: int, n: int, domain=QQ, cap: int | None = DEFAULT_CAP, squarefree_only: bool = False,
                threads: int = 1) -> HomologyResult:
    """``H_{n,*}`` of the JW cdga, computed block by block and summed.

    With ``squarefree_only`` only the block of the multiset ``{1..n}``
    (requires ``m >= n``) is computed.
    """
    s = JWComplexSlice(m, n)
    if squarefree_only:
        if m < n:
            raise ValueError("the squarefree block needs m >= n")
        mu = tuple([1] * n + [0] * (m - n))
        elements = [e for k in s.degrees for e in s.bases[k] if s.multiset(e) == mu]
        blocks = [MultisetBlock(mu, s.complex(elements, name=f"JW block {mu}"))]
    else:
        blocks = s.blocks()
    return _blocks_homology(blocks, domain, cap, threads)


def squarefree_block(m: int, n: int) -> MultisetBlock:
    s = JWComplexSlice(m, n)
    mu = tuple([1] * n + [0] * (m - n))
    elements = [e for k in s.degrees for e in s.bases[k] if s.multiset(e) == mu]
    return MultisetBlock(mu, s.complex(elements, name=f"JW block {mu}"))


def build_dprime_slice(group, n: int) -> DPrimeComplexSlice:
    return DPrimeComplexSlice(group, n)


def dprime_homology(group, n: int, domain=QQ, cap: int | None = DEFAULT_CAP, threads: int = 1):
    s = DPrimeComplexSlice(group, n)
    return _blocks_homology(s.blocks(), domain, cap, threads)


def closed_generator_count(order: int) -> int:
    """Differential-closed wedge generators of D': pairs involving sigma plus Lambda^2 V."""
    return 2 * order - 1 + comb(order - 1, 2)


@dataclass
class TensorDecompositionReport:
    order: int
    generators: int
    lhs: dict  # (n, d) -> dim H(D')
    rhs: dict  # (n, d) -> convolution

    @property
    def agrees(self) -> bool:
        return self.lhs == self.rhs

    def mismatches(self):
        return sorted(k for k in self.lhs if self.lhs[k] != self.rhs.get(k))


def verify_tensor_decomposition(group, n_max: int, domain=QQ) -> TensorDecompositionReport:
    """Compare ``dim H(D')`` with ``H(C; V = k{P - sigma}) (x) Lambda[g generators in (2,1)]``."""
    if domain.characteristic:
        raise ValueError("the tensor decomposition is a characteristic-zero statement")
    q = len(group)
    g = closed_generator_count(q)
    c = {}
    for n in range(n_max + 1):
        h = jw_homology(q - 1, n, domain)
        for d in h.free:
            c[(n, d)] = h.dim(d)
    lhs = {}
    rhs = {}
    for n in range(n_max + 1):
        h = dprime_homology(group, n, domain)
        for d in range(n // 2 + 1):
            lhs[(n, d)] = h.dim(d)
            rhs[(n, d)] = sum(comb(g, k) * c.get((n - 2 * k, d - k), 0) for k in range(0, min(d, n // 2) + 1))
    return TensorDecompositionReport(q, g, lhs, rhs)


def homology_table(res: HomologyResult) -> dict:
    return {d: group_string(res.dim(d), res.torsion_at(d)) for d in sorted(res.free)}
