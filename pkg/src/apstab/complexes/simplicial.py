"""Finite simplicial complexes given by facets, with reduced simplicial chains."""

from __future__ import annotations

import itertools
from functools import cached_property

from ..exactalg import ZZ, ExactMatrix, FreeChainComplex, HomologyResult, homology


class SimplicialComplex:
    """Downward closure of a list of facets over hashable, sortable vertex labels.

    Non-maximal facets in the input are dropped, so ``facets`` is always
    the set of maximal simplices, each a sorted tuple.
    """

    def __init__(self, facets, vertices=None, name: str = ""):
        fs = {tuple(sorted(set(f), key=_key)) for f in facets}
        if any(len(f) != len(set(f)) for f in fs):
            raise ValueError("repeated vertex in a facet")
        maximal = [f for f in fs if not any(len(g) > len(f) and set(f) <= set(g) for g in fs)]
        self.facets = tuple(sorted(maximal, key=lambda f: (len(f), [_key(v) for v in f])))
        verts = {v for f in self.facets for v in f}
        if vertices is not None:
            verts |= set(vertices)
        self.vertices = tuple(sorted(verts, key=_key))
        self.name = name
        # isolated vertices passed separately are simplices too
        extra = [(v,) for v in self.vertices if not any(v in f for f in self.facets)]
        if extra:
            self.facets = tuple(sorted(self.facets + tuple(extra), key=lambda f: (len(f), [_key(v) for v in f])))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def simplices(self) -> dict[int, list[tuple]]:
        """All faces by dimension (the empty face at -1), each sorted."""
        faces: dict[int, set] = {-1: {()}}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                faces.setdefault(k - 1, set()).update(itertools.combinations(f, k))
        return {d: sorted(s, key=lambda t: [_key(v) for v in t]) for d, s in sorted(faces.items())}

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices[d]) for d in range(self.dimension + 1))

    def size(self) -> int:
        return sum(len(s) for d, s in self.simplices.items() if d >= 0)

    def chain_complex(self, reduced: bool = True) -> FreeChainComplex:
        """Simplicial chains; the reduced version has ``C_{-1} = Z`` (the empty face)."""
        faces = self.simplices
        degs = [d for d in faces if reduced or d >= 0]
        dims = {d: len(faces[d]) for d in degs}
        bnd = {}
        for d in degs:
            if d - 1 not in dims:
                continue
            index = {f: i for i, f in enumerate(faces[d - 1])}
            cols = []
            for f in faces[d]:
                cols.append({index[f[:i] + f[i + 1:]]: (-1) ** i for i in range(len(f))})
            bnd[d] = ExactMatrix(len(faces[d]), len(index), cols).transpose()
        return FreeChainComplex(dims, bnd, ZZ, validate=False, name=self.name or "simplicial complex")

    def homology(self, domain=ZZ, reduced: bool = True, cap: int | None = None) -> HomologyResult:
        return homology(self.chain_complex(reduced), domain, cap=cap)

    def face_poset(self):
        from .poset import FinitePoset

        faces = [f for d, fs in self.simplices.items() if d >= 0 for f in fs]
        rel = {(a, b) for a in faces for b in faces if set(a) <= set(b)}
        return FinitePoset(faces, rel)

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """Chains of faces, built directly from flags inside each facet."""
        chains = set()
        for f in self.facets:
            for perm in itertools.permutations(f):
                chains.add(tuple(tuple(sorted(perm[:k], key=_key)) for k in range(1, len(f) + 1)))
        return SimplicialComplex(chains, name=f"sd({self.name})" if self.name else "sd")

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


def _key(v):
    # mixed-type labels sort by type name first so repr-order stays deterministic
    return (type(v).__name__, v)


def matching_complex(n: int) -> SimplicialComplex:
    """Partial matchings of ``{1..n}``: vertices are edges, simplices disjoint edge sets."""
    if n < 2:
        raise ValueError("matching complex needs n >= 2")
    edges = list(itertools.combinations(range(1, n + 1), 2))
    facets = []

    def extend(start_vertices, current):
        free = [v for v in range(1, n + 1) if v not in start_vertices]
        if len(free) < 2:
            facets.append(tuple(current))
            return
        a = free[0]
        # either a stays unmatched, or it is matched to some later vertex
        extend(start_vertices | {a}, current)
        for b in free[1:]:
            extend(start_vertices | {a, b}, current + [(a, b)])

    extend(frozenset(), [])
    facets = [f for f in facets if f]
    return SimplicialComplex(facets, vertices=edges, name=f"M({n})")


def simplex(vertices) -> SimplicialComplex:
    return SimplicialComplex([tuple(vertices)])


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """The boundary of the k-simplex on ``0..k``: a (k-1)-sphere."""
    return SimplicialComplex(itertools.combinations(range(k + 1), k))
