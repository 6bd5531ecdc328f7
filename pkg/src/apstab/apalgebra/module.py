"""Finitely presented graded A_P-modules, realized grading by grading.

Text format (one statement per line, ``#`` starts a comment)::

    gen <label> <grading>
    rel <grading> <term> (+|-) <term> ...

A term is ``[coeff*][(r1,...,rk)*]label``: the coefficient defaults to 1
and the residue tuple names the group element rho, standing for the
basis element ``<n - g, rho>`` of A(n - g) where ``g`` is the generator's
grading.  The residue tuple is omitted exactly when ``n == g`` (the unit
of A).  Example: ``rel 2 (1)*X - (0)*X'`` is ``lambda.X - sigma.X'`` over
A_{Z/2}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactalg import ExactMatrix, rank, rref
from .algebra import APAlgebra
from .group import FiniteAbelianGroup


class PresentationError(ValueError):
    """Structurally invalid presentation (unknown generator, bad grading, ...)."""


@dataclass(frozen=True)
class Relation:
    grading: int
    # (label, residue tuple or None) -> coefficient
    terms: tuple[tuple[tuple[str, tuple | None], object], ...]

    @classmethod
    def make(cls, grading, terms: dict):
        return cls(grading, tuple(terms.items()))


@dataclass(frozen=True)
class GradedModulePresentation:
    generators: tuple[tuple[str, int], ...]
    relations: tuple[Relation, ...] = ()
    name: str = ""

    def __post_init__(self):
        labels = [g for g, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise PresentationError("generator labels must be unique")
        for g, n in self.generators:
            if n < 0:
                raise PresentationError(f"generator {g} has negative grading")
        for r in self.relations:
            for (label, elem), _ in r.terms:
                g = self.grading_of(label)
                if r.grading < g:
                    raise PresentationError(
                        f"relation in grading {r.grading} uses {label} of grading {g}")
                if elem is None and r.grading > g:
                    raise PresentationError(
                        f"term {label} in a grading-{r.grading} relation needs a residue tuple "
                        f"({label} has grading {g})")
                if elem is not None and r.grading == g:
                    raise PresentationError(
                        f"term {label} in a grading-{g} relation takes no residue tuple")

    def grading_of(self, label) -> int:
        for g, n in self.generators:
            if g == label:
                return n
        raise PresentationError(f"relation references unknown generator {label!r}")

    @property
    def max_generator_grading(self) -> int:
        return max((n for _, n in self.generators), default=-1)

    @property
    def max_relation_grading(self) -> int:
        return max((r.grading for r in self.relations), default=-1)

    def to_text(self) -> str:
        lines = [f"gen {g} {n}" for g, n in self.generators]
        for r in self.relations:
            parts = []
            for (label, elem), c in r.terms:
                sign = "-" if c < 0 else "+"
                c = abs(c)
                t = "" if c == 1 else f"{c}*"
                if elem is not None:
                    t += "(" + ",".join(str(x) for x in elem) + ")*"
                parts.append(f"{sign} {t}{label}")
            body = " ".join(parts)
            if body.startswith("+ "):
                body = body[2:]
            lines.append(f"rel {r.grading} {body}")
        return "\n".join(lines) + "\n"


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?(?:\(([^)]*)\)\s*\*\s*)?([A-Za-z_][\w']*)\s*")


def parse_presentation(text: str, name: str = "") -> GradedModulePresentation:
    gens = []
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "gen":
            parts = rest.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise PresentationError(f"line {lineno}: expected 'gen <label> <grading>'")
            gens.append((parts[0], int(parts[1])))
        elif head == "rel":
            grading, _, body = rest.strip().partition(" ")
            if not grading.isdigit():
                raise PresentationError(f"line {lineno}: expected 'rel <grading> <terms>'")
            terms: dict = {}
            pos = 0
            body = body.strip()
            first = True
            while pos < len(body):
                m = _TERM.match(body, pos)
                if not m or m.end() == pos or (not first and m.group(1) is None):
                    raise PresentationError(f"line {lineno}: cannot parse term at {body[pos:]!r}")
                first = False
                sign = -1 if m.group(1) == "-" else 1
                coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
                if coeff.denominator == 1:
                    coeff = coeff.numerator
                elem = None
                if m.group(3) is not None:
                    s = m.group(3).strip()
                    elem = tuple(int(x) for x in s.split(",")) if s else ()
                key = (m.group(4), elem)
                terms[key] = terms.get(key, 0) + sign * coeff
                pos = m.end()
            if not terms:
                raise PresentationError(f"line {lineno}: empty relation")
            rels.append(Relation.make(int(grading), terms))
        else:
            raise PresentationError(f"line {lineno}: unknown statement {head!r}")
    return GradedModulePresentation(tuple(gens), tuple(rels), name)


class RealizedModule:
    """Finite-dimensional slices ``M(0..N)`` of a presented module.

    ``M(n)`` is the free module in grading n modulo the A-span of the
    relations, with basis the non-pivot columns of the reduced relation
    matrix.  ``act[i][n]`` is the matrix (acting on column vectors)
    of multiplication by ``<1, rho_i>`` from ``M(n)`` to ``M(n + 1)``.
    """

    def __init__(self, pres: GradedModulePresentation, alg: APAlgebra, N: int):
        alg.require_field()
        self.pres = pres
        self.alg = alg
        self.field = alg.field
        self.group = alg.group
        self.N = N
        G = self.group
        gens = pres.generators
        gidx = {g: i for i, (g, _) in enumerate(gens)}
        # resolve relation terms to (generator index, element index or None)
        self._rels = []
        for r in pres.relations:
            terms = {}
            for (label, elem), c in r.terms:
                if label not in gidx:
                    raise PresentationError(f"relation references unknown generator {label!r}")
                g = gens[gidx[label]][1]
                if r.grading < g:
                    raise PresentationError(
                        f"relation in grading {r.grading} involves generator {label} of grading {g}")
                if (elem is None) != (r.grading == g):
                    raise PresentationError(
                        f"term {label} in grading {r.grading}: group element required iff grading exceeds {g}")
                e = None if elem is None else G.index(self._pad(elem))
                c = self.field.normalize(c)
                if c:
                    key = (gidx[label], e)
                    terms[key] = self.field.normalize(terms.get(key, 0) + c)
            self._rels.append((r.grading, {k: v for k, v in terms.items() if v}))

        self.free_basis: list[list[tuple[int, int | None]]] = []
        self._free_index: list[dict] = []
        for n in range(N + 2):
            b = []
            for i, (_, g) in enumerate(gens):
                if n == g:
                    b.append((i, None))
                elif n > g:
                    b.extend((i, e) for e in range(len(G)))
            self.free_basis.append(b)
            self._free_index.append({x: k for k, x in enumerate(b)})

        self._reduced = []   # (rref rows, pivot columns) of the relation span
        self.basis = []      # free-basis columns forming a basis of M(n)
        for n in range(N + 2):
            rows = []
            for rg, terms in self._rels:
                if rg > n:
                    continue
                mults = [None] if rg == n else list(range(len(G)))
                for rho in mults:
                    v = [0] * len(self.free_basis[n])
                    for (i, e), c in terms.items():
                        key = (i, self._mult(e, rho))
                        k = self._free_index[n][key]
                        v[k] = self.field.normalize(v[k] + c)
                    if any(v):
                        rows.append(v)
            red, piv = rref(rows, self.field) if rows else ([], [])
            self._reduced.append((red, piv))
            pset = set(piv)
            self.basis.append([k for k in range(len(self.free_basis[n])) if k not in pset])

        self.dims = [len(self.basis[n]) for n in range(N + 1)]
        self.act = [[self._action_matrix(rho, n) for n in range(N + 1)] for rho in range(len(G))]

    def _pad(self, elem):
        # accept () for the identity of any group
        if len(elem) == 0 and self.group.orders:
            return self.group.identity
        return elem

    def _mult(self, e, rho):
        """Free-basis element ``e`` (None = unit) times ``<1, rho>`` (None = 1)."""
        if rho is None:
            return e
        if e is None:
            return rho
        return self.group.op(e, rho)

    def reduce(self, n: int, v: list) -> list:
        """Coordinates in the basis of M(n) of a free-module vector in grading n."""
        red, piv = self._reduced[n]
        v = list(v)
        for row, c in zip(red, piv):
            f = v[c]
            if f:
                v = [self.field.normalize(x - f * y) for x, y in zip(v, row)]
        return [v[k] for k in self.basis[n]]

    def _action_matrix(self, rho: int, n: int) -> ExactMatrix:
        entries = {}
        for j, k in enumerate(self.basis[n]):
            i, e = self.free_basis[n][k]
            v = [0] * len(self.free_basis[n + 1])
            v[self._free_index[n + 1][(i, self._mult(e, rho))]] = 1
            for r, x in enumerate(self.reduce(n + 1, v)):
                if x:
                    entries[(r, j)] = x
        return ExactMatrix.from_entries(len(self.basis[n + 1]), len(self.basis[n]), entries, self.field)

    def act_basis_element(self, k: int, rho: int, m: int) -> ExactMatrix:
        """Matrix of ``<k, rho> = sigma^(k-1) rho`` acting ``M(m) -> M(m + k)``."""
        mat = self.act[rho][m]
        for step in range(1, k):
            mat = self.act[0][m + step] @ mat
        return mat

    def check_relations(self) -> bool:
        """``act(p) act(p') == act(sigma) act(p * p')`` on every grading in the window."""
        G = self.group
        for n in range(self.N - 1):
            for a in range(len(G)):
                for b in range(len(G)):
                    lhs = self.act[a][n + 1] @ self.act[b][n]
                    rhs = self.act[0][n + 1] @ self.act[G.op(a, b)][n]
                    if lhs != rhs:
                        return False
        return True

    def summed_action_rank(self, n: int) -> int:
        """Rank of ``sum_p act(p): M(n-1)^P -> M(n)``."""
        if n < 1 or self.dims[n] == 0:
            return 0
        width = self.dims[n - 1]
        entries = {}
        for p in range(len(self.group)):
            for i, j, v in self.act[p][n - 1].entries():
                entries[(i, p * width + j)] = v
        m = ExactMatrix.from_entries(self.dims[n], width * len(self.group), entries, self.field)
        return rank(m)


def free_module(label: str = "X", grading: int = 0) -> GradedModulePresentation:
    """A itself (one free generator)."""
    return GradedModulePresentation(((label, grading),), (), name="A")


def quotient_by_element(group: FiniteAbelianGroup, rho: int = 0, label: str = "X") -> GradedModulePresentation:
    """``A / rho`` : one generator in grading 0 and the relation ``rho . X``."""
    elem = group.elements[rho]
    return GradedModulePresentation(((label, 0),), (Relation.make(1, {(label, elem): 1}),),
                                    name=f"A/{group.element_str(rho)}")


def direct_sum(*presentations: GradedModulePresentation) -> GradedModulePresentation:
    gens = []
    rels = []
    for k, p in enumerate(presentations):
        rename = {g: f"{g}_{k}" for g, _ in p.generators}
        gens.extend((rename[g], n) for g, n in p.generators)
        for r in p.relations:
            rels.append(Relation(r.grading, tuple(((rename[l], e), c) for (l, e), c in r.terms)))
    return GradedModulePresentation(tuple(gens), tuple(rels),
                                    name=" + ".join(p.name or "M" for p in presentations))


def example_module() -> GradedModulePresentation:
    """Abelianizations of GL over Z[sqrt(-5)] as a graded A_{Z/2}-module over F_2.

    Generators X, X' in grading 1 and U, T, B, C, C', D' in grading 2;
    relations lambda.X = sigma.X', lambda.X' = sigma.X, and the six
    grading-2 generators are killed by sigma and lambda.
    """
    sigma, lam = (0,), (1,)
    gens = (("X", 1), ("X'", 1), ("U", 2), ("T", 2), ("B", 2), ("C", 2), ("C'", 2), ("D'", 2))
    rels = [Relation.make(2, {("X", lam): 1, ("X'", sigma): -1}),
            Relation.make(2, {("X'", lam): 1, ("X", sigma): -1})]
    for g in ("U", "T", "B", "C", "C'", "D'"):
        rels.append(Relation.make(3, {(g, sigma): 1}))
        rels.append(Relation.make(3, {(g, lam): 1}))
    return GradedModulePresentation(gens, tuple(rels), name="GL(Z[sqrt-5])^ab")
