"""Finite posets and their order complexes."""

from __future__ import annotations

from functools import cached_property

from .simplicial import SimplicialComplex


class PosetError(ValueError):
    pass


class FinitePoset:
    """Elements plus a relation ``{(x, y) : x <= y}``.

    The relation is closed under reflexivity on input (diagonal pairs may
    be omitted) and then validated: antisymmetry and transitivity must
    already hold.
    """

    def __init__(self, elements, relation, name: str = "", validate: bool = True):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise PosetError("duplicate poset elements")
        self._index = {x: i for i, x in enumerate(self.elements)}
        rel = set()
        for a, b in relation:
            if a not in self._index or b not in self._index:
                raise PosetError(f"relation ({a!r}, {b!r}) mentions an unknown element")
            rel.add((a, b))
        rel.update((x, x) for x in self.elements)
        self.relation = frozenset(rel)
        self.name = name
        if validate:
            self.validate()

    def validate(self):
        up = self.up_sets
        for a, b in self.relation:
            if a != b and (b, a) in self.relation:
                raise PosetError(f"antisymmetry fails for {a!r}, {b!r}")
        for a in self.elements:
            for b in up[a]:
                if not up[b] <= up[a]:
                    raise PosetError(f"transitivity fails through {a!r} <= {b!r}")

    @cached_property
    def up_sets(self) -> dict:
        up = {x: set() for x in self.elements}
        for a, b in self.relation:
            up[a].add(b)
        return {x: frozenset(s) for x, s in up.items()}

    def le(self, a, b) -> bool:
        return (a, b) in self.relation

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.relation

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def maximal_elements(self):
        return [x for x in self.elements if len(self.up_sets[x]) == 1]

    def minimal_elements(self):
        return [x for x in self.elements if not any(self.lt(y, x) for y in self.elements)]

    def terminal(self):
        """The greatest element, or None."""
        for x in self.elements:
            if all(self.le(y, x) for y in self.elements):
                return x
        return None

    def subposet(self, keep, name: str = "") -> "FinitePoset":
        keep = [x for x in self.elements if x in set(keep)]
        ks = set(keep)
        rel = {(a, b) for a, b in self.relation if a in ks and b in ks}
        return FinitePoset(keep, rel, name=name, validate=False)

    def chains(self):
        """All non-empty chains as tuples, ordered bottom to top."""
        order = self._linear_extension()
        pos = {x: i for i, x in enumerate(order)}
        out = []

        def grow(chain):
            out.append(tuple(chain))
            top = chain[-1]
            for y in self.up_sets[top]:
                if y != top and pos[y] > pos[top]:
                    grow(chain + [y])

        for x in order:
            grow([x])
        return out

    def maximal_chains(self):
        out = []

        def grow(chain):
            nxt = [y for y in self.up_sets[chain[-1]] if y != chain[-1]]
            if not nxt:
                out.append(tuple(chain))
                return
            for y in nxt:
                # only cover relations, so each maximal chain is produced once
                if not any(self.lt(y2, y) for y2 in nxt if y2 != y):
                    grow(chain + [y])

        for x in self.minimal_elements():
            grow([x])
        return out

    def _linear_extension(self):
        below = {x: sum(1 for y in self.elements if self.lt(y, x)) for x in self.elements}
        return sorted(self.elements, key=lambda x: (below[x], self._index[x]))

    def __repr__(self):
        return f"FinitePoset({len(self.elements)} elements)"


def order_complex(p: FinitePoset) -> SimplicialComplex:
    """Simplices are the chains of ``p``; facets are the maximal chains."""
    facets = p.maximal_chains()
    return SimplicialComplex(facets, vertices=p.elements, name=f"|{p.name}|" if p.name else "")


def x_poset(m: int, group) -> FinitePoset:
    """``{1..m} x P`` with ``(r, a) < (r', b)`` iff ``r < r'``.

    Elements are ``(r, g)`` with ``g`` an element index of the group.
    """
    if m < 1:
        raise ValueError("x_poset needs m >= 1")
    elems = [(r, g) for r in range(1, m + 1) for g in range(len(group))]
    rel = {(a, b) for a in elems for b in elems if a[0] < b[0]}
    return FinitePoset(elems, rel, name=f"X_{m}")


def chain_poset(p: FinitePoset) -> FinitePoset:
    """Non-empty chains of ``p`` ordered by reverse inclusion (``c <= c'`` iff ``c' ⊆ c``)."""
    chains = p.chains()
    sets = {c: frozenset(c) for c in chains}
    rel = {(a, b) for a in chains for b in chains if sets[b] <= sets[a]}
    return FinitePoset(chains, rel, name=f"sd {p.name}" if p.name else "", validate=False)
