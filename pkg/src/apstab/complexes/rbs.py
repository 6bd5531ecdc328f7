"""The combinatorial RBS poset and its dictionary with chains in ``X_{n-1}(P)``.

An RBS list for ``(n, rho)`` is a tuple ``((n_1, g_1), ..., (n_k, g_k))``
with every ``n_i >= 1``, ``sum n_i = n`` and ``g_1 * ... * g_k = rho``.
Each pair stands for an isomorphism class (rank, class in P).  Merging
consecutive blocks adds ranks and multiplies classes; ``x <= y`` when y is
a merge of x.
"""

from __future__ import annotations

import itertools

from ..apalgebra.bar import compositions
from .poset import FinitePoset


def rbs_lists(n: int, rho: int, group) -> list[tuple]:
    if n < 1:
        raise ValueError("RBS lists need n >= 1")
    out = []
    q = len(group)
    for k in range(1, n + 1):
        for comp in compositions(n, k):
            for head in itertools.product(range(q), repeat=k - 1):
                # the last class is forced by the product condition
                last = group.op(group.inverse(group.product(head)), rho)
                out.append(tuple(zip(comp, head + (last,))))
    return out


def is_rbs_list(x, n: int, rho: int, group) -> bool:
    return (len(x) > 0 and all(r >= 1 for r, _ in x) and sum(r for r, _ in x) == n
            and group.product(g for _, g in x) == rho)


def merge(x: tuple, cuts, group) -> tuple:
    """Coarsen ``x`` keeping only the cut positions in ``cuts`` (subset of ``1..len(x)-1``)."""
    bounds = [0] + sorted(cuts) + [len(x)]
    out = []
    for a, b in zip(bounds, bounds[1:]):
        block = x[a:b]
        out.append((sum(r for r, _ in block), group.product(g for _, g in block)))
    return tuple(out)


def partial_sums(x: tuple, group) -> tuple:
    """``((r_1, c_1), ..., (r_{k-1}, c_{k-1}))`` with the full sum dropped."""
    out = []
    r, c = 0, 0
    for rank, g in x[:-1]:
        r += rank
        c = group.op(c, g)
        out.append((r, c))
    return tuple(out)


def rbs_le(x: tuple, y: tuple, group) -> bool:
    return set(partial_sums(y, group)) <= set(partial_sums(x, group)) and \
        sum(r for r, _ in x) == sum(r for r, _ in y) and \
        group.product(g for _, g in x) == group.product(g for _, g in y)


def rbs_poset(n: int, rho: int, group) -> FinitePoset:
    elems = rbs_lists(n, rho, group)
    chains = {x: frozenset(partial_sums(x, group)) for x in elems}
    rel = {(x, y) for x in elems for y in elems if chains[y] <= chains[x]}
    return FinitePoset(elems, rel, name=f"RBS({n},{rho})")


def boundary_rbs(n: int, rho: int, group) -> FinitePoset:
    """``rbs_poset`` without its terminal one-element list (empty for n = 1)."""
    full = rbs_poset(n, rho, group)
    top = ((n, rho),)
    return full.subposet([x for x in full.elements if x != top], name=f"dRBS({n},{rho})")


def rbs_to_sdx(x: tuple, group) -> tuple:
    """The chain of partial sums of ``x``, a chain in ``X_{n-1}(P)``."""
    if len(x) < 2:
        raise ValueError("the one-element list has no chain image")
    return partial_sums(x, group)


def sdx_to_rbs(chain, n: int, rho: int, group) -> tuple:
    """Inverse of ``rbs_to_sdx``: successive differences of a chain in ``X_{n-1}(P)``."""
    chain = tuple(chain)
    if not chain:
        raise ValueError("empty chain")
    ranks = [r for r, _ in chain]
    if any(a >= b for a, b in zip(ranks, ranks[1:])) or ranks[0] < 1 or ranks[-1] > n - 1:
        raise ValueError(f"{chain} is not a chain in X_{n - 1}")
    out = []
    pr, pc = 0, 0
    for r, c in chain:
        out.append((r - pr, group.op(c, group.inverse(pc))))
        pr, pc = r, c
    out.append((n - pr, group.op(rho, group.inverse(pc))))
    return tuple(out)
