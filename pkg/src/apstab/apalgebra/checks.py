"""Checks of the regularity lemma and of summed stabilization surjectivity."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import APAlgebra
from .bar import HNumber, TorTable, bar_tor_module, h_number
from .module import GradedModulePresentation, RealizedModule, Relation

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass
class RegularityReport:
    window: int
    h: dict[int, HNumber]
    status: dict[int, str]
    violations: dict[int, list[int]] = field(default_factory=dict)
    table: TorTable | None = None

    @property
    def ok(self) -> bool:
        return all(s == HOLDS for s in self.status.values())

    @property
    def overall(self) -> str:
        if any(s == FAILS for s in self.status.values()):
            return FAILS
        if any(s == INCONCLUSIVE for s in self.status.values()):
            return INCONCLUSIVE
        return HOLDS


def verify_regularity_lemma(pres: GradedModulePresentation, alg: APAlgebra, d_max: int = 3,
                            N: int = 10, backend=None) -> RegularityReport:
    """Check ``h_d(M) <= d - 1 + h_1(M)`` for ``2 <= d <= d_max`` inside ``n <= N``.

    ``h_1`` is exact once the window covers every relation grading (Tor_1
    is a quotient of the relations).  A degree is inconclusive when the
    window does not reach past the claimed bound, or when ``h_1`` itself
    is not certified; it is never reported as holding in that case.
    """
    table = bar_tor_module(alg, pres, N, d_max, backend=backend)
    h = {d: h_number(table, d) for d in range(d_max + 1)}
    h1_certain = pres.max_relation_grading <= N
    status = {}
    violations = {}
    for d in range(2, d_max + 1):
        h1 = h[1].value
        bound = -1 if h1 is None else d - 1 + h1
        bad = [n for n in range(max(bound + 1, 0), N + 1) if table[n, d]]
        if bad and h1_certain:
            status[d] = FAILS
            violations[d] = bad
        elif not h1_certain or bound >= N:
            status[d] = INCONCLUSIVE
        else:
            status[d] = HOLDS
    return RegularityReport(N, h, status, violations, table)


@dataclass
class SurjectivityReport:
    d: int
    window: int
    surjective: dict[int, bool]
    tor0_vanishes: dict[int, bool]

    @property
    def ok(self) -> bool:
        return all(self.surjective.values())

    @property
    def consistent(self) -> bool:
        return self.surjective == self.tor0_vanishes


def verify_stabilization_surjectivity(pres: GradedModulePresentation, alg: APAlgebra, d: int,
                                      N: int) -> SurjectivityReport:
    """Is ``sum_p <1,p> : M(n-1)^P -> M(n)`` onto for every ``2d < n <= N``?

    Cross-checked against the bar complex: the map is onto exactly when
    ``Tor_{n,0}(k, M) = 0``.
    """
    M = RealizedModule(pres, alg, N)
    table = bar_tor_module(alg, M, N, 0)
    surj = {}
    tor0 = {}
    for n in range(2 * d + 1, N + 1):
        surj[n] = M.summed_action_rank(n) == M.dims[n]
        tor0[n] = table[n, 0] == 0
    return SurjectivityReport(d, N, surj, tor0)


def random_presentation(rng: random.Random, alg: APAlgebra, max_gens: int = 3, max_rels: int = 4,
                        max_grading: int = 3) -> GradedModulePresentation:
    """A random small presentation: gradings in ``[0, max_grading]``, field coefficients."""
    G = alg.group
    field_ = alg.field
    ngens = rng.randint(1, max_gens)
    gens = tuple((f"g{i}", rng.randint(0, max_grading)) for i in range(ngens))
    lo = min(g for _, g in gens)
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        n = rng.randint(lo, max_grading)
        avail = [(l, g) for l, g in gens if g <= n]
        terms = {}
        for _ in range(rng.randint(1, 3)):
            label, g = rng.choice(avail)
            elem = None if g == n else G.elements[rng.randrange(len(G))]
            c = rng.randint(1, field_.p - 1) if field_.p else rng.choice([-2, -1, 1, 2])
            terms[(label, elem)] = terms.get((label, elem), 0) + c
        rels.append(Relation.make(n, terms))
    return GradedModulePresentation(gens, tuple(rels), name="random")
