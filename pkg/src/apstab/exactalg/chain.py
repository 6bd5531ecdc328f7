"""Free chain complexes and their homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .domains import INTEGERS, ZZ, CoefficientDomain, UnsupportedDomainError
from .linalg import rank
from .matrix import ExactMatrix
from .snf import smith_normal_form


class ResourceError(RuntimeError):
    """A computation exceeded the configured basis-size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} basis elements exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class FreeChainComplex:
    """Free modules ``C_d`` of rank ``dims[d]`` with ``boundaries[d]: C_d -> C_{d-1}``.

    Boundary matrices act on column vectors, so ``boundaries[d]`` has shape
    ``(dims[d-1], dims[d])``.  Missing boundaries are zero.  ``domain`` is
    where the entries live (Z for complexes defined integrally); the
    condition d o d = 0 is checked there at construction.
    """

    def __init__(self, dims: Mapping[int, int], boundaries: Mapping[int, ExactMatrix] | None = None,
                 domain: CoefficientDomain = ZZ, validate: bool = True, name: str = ""):
        self.dims = {d: n for d, n in dims.items()}
        self.domain = domain
        self.name = name
        self.boundaries: dict[int, ExactMatrix] = {}
        for d, m in (boundaries or {}).items():
            src = self.dims.get(d, 0)
            tgt = self.dims.get(d - 1, 0)
            if m.shape != (tgt, src):
                raise ValueError(f"boundary {d} has shape {m.shape}, expected {(tgt, src)}")
            if m.domain != domain:
                m = m.over(domain)
            self.boundaries[d] = m
        if validate:
            self.validate()

    @property
    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def boundary(self, d: int) -> ExactMatrix:
        m = self.boundaries.get(d)
        if m is None:
            return ExactMatrix.zeros(self.dims.get(d - 1, 0), self.dims.get(d, 0), self.domain)
        return m

    def size(self) -> int:
        return sum(self.dims.values())

    def validate(self):
        for d, m in self.boundaries.items():
            nxt = self.boundaries.get(d + 1)
            if nxt is not None and not (m @ nxt).is_zero():
                raise ValueError(f"boundary {d} o boundary {d + 1} is not zero")

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in self.dims.items())


@dataclass(frozen=True)
class HomologyResult:
    """Per-degree homology: a dimension over a field, or ``Z^r + torsion`` over Z."""

    domain: CoefficientDomain
    free: Mapping[int, int]
    torsion: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def dim(self, d: int) -> int:
        return self.free.get(d, 0)

    rank = dim

    def torsion_at(self, d: int) -> tuple[int, ...]:
        return tuple(self.torsion.get(d, ()))

    def is_zero(self, d: int) -> bool:
        return self.dim(d) == 0 and not self.torsion_at(d)

    def is_zero_everywhere(self) -> bool:
        return all(self.is_zero(d) for d in self.free)

    def group_str(self, d: int) -> str:
        return group_string(self.dim(d), self.torsion_at(d))

    def as_dict(self) -> dict:
        out = {}
        for d in sorted(self.free):
            if self.domain.kind == INTEGERS:
                out[str(d)] = {"rank": self.dim(d), "torsion": list(self.torsion_at(d))}
            else:
                out[str(d)] = self.dim(d)
        return out

    def __str__(self):
        return ", ".join(f"H_{d} = {self.group_str(d)}" for d in sorted(self.free))


def group_string(free: int, torsion=()) -> str:
    """Canonical text for ``Z^free + Z/t1 + ...``, e.g. ``Z/2 + Z/6 + Z^2``."""
    parts = [f"Z/{t}" for t in torsion]
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append(f"Z^{free}")
    return " + ".join(parts) if parts else "0"


def homology(c: FreeChainComplex, domain: CoefficientDomain | None = None,
             cap: int | None = None, backend: str | None = None) -> HomologyResult:
    """Homology of ``c`` with coefficients in ``domain``.

    Over a field: ``dim C_d - rank d_d - rank d_{d+1}``.  Over Z the free
    rank is the same count over Q and the torsion comes from the Smith
    form of ``d_{d+1}``.
    """
    domain = domain or c.domain
    if cap is not None and c.size() > cap:
        raise ResourceError(c.name or "chain complex", c.size(), cap)
    if c.domain.kind != INTEGERS and domain != c.domain:
        raise UnsupportedDomainError(f"complex over {c.domain} cannot be taken over {domain}")
    ranks: dict[int, int] = {}
    tors: dict[int, tuple[int, ...]] = {}
    for d in c.degrees:
        m = c.boundaries.get(d)
        if m is None or m.is_zero():
            ranks[d] = 0
            continue
        if domain.kind == INTEGERS:
            snf = smith_normal_form(m)
            ranks[d] = snf.rank
            tors[d - 1] = snf.torsion
        else:
            ranks[d] = rank(m, domain, backend)
    free = {}
    torsion = {}
    for d in c.degrees:
        free[d] = c.dims[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if tors.get(d):
            torsion[d] = tors[d]
    return HomologyResult(domain, free, torsion)
