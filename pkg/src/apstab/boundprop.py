"""Support bounds propagated through the bar spectral-sequence chart.

Entry ``(s, t)`` of a table bounds ``h_s`` of the t-th homology of the
cell algebra, i.e. the largest grading in which that Tor group can be
non-zero.  ``None`` stands for -infinity (empty support).

Row 0 comes from axioms.  Row t >= 1 is filled in two steps:

* columns 0 and 1 receive the targets of differentials ``d^r``, ``r >= 2``,
  from column ``s + r`` of row ``t - r + 1``; convergence to zero forces
  these to be hit, so ``h_s(t) <= max_r h_{s+r}(t-r+1)``;
* columns ``s >= 2`` follow from the regularity estimates applied to
  ``h_0(t)`` and ``h_1(t)``.
"""

from __future__ import annotations

from dataclasses import dataclass


def bmax(*xs):
    vals = [x for x in xs if x is not None]
    return max(vals) if vals else None


def badd(x, k: int):
    return None if x is None else x + k


@dataclass(frozen=True)
class Flags:
    axiom3: bool = False
    axiom4: bool = False

    def __post_init__(self):
        if self.axiom4 and not self.axiom3:
            raise ValueError("axiom4 is only used together with axiom3")

    @property
    def label(self) -> str:
        if self.axiom4:
            return "III+IV"
        return "III" if self.axiom3 else "none"

    @classmethod
    def parse(cls, text: str) -> "Flags":
        t = text.strip().lower().replace(" ", "")
        table = {"": cls(), "none": cls(), "iii": cls(True), "3": cls(True),
                 "iii+iv": cls(True, True), "3+4": cls(True, True), "34": cls(True, True)}
        if t not in table:
            raise ValueError(f"unknown flag set {text!r}; use none, III or III+IV")
        return table[t]


ALL_FLAGS = (Flags(), Flags(True), Flags(True, True))


def row_zero(flags: Flags, s: int):
    if s < 0:
        raise ValueError("s must be >= 0")
    if s == 0:
        return 0
    if s == 1:
        return None
    if s == 2:
        return 2 if flags.axiom3 else 3
    if s == 3:
        return 3 if flags.axiom4 else 4
    return s + 1


def lemma_estimates(flags: Flags, h0, h1, d: int):
    """Tightest regularity estimate for ``h_d`` from ``h_0`` and ``h_1``."""
    if d < 2:
        raise ValueError("estimates apply to d >= 2 only")
    m = bmax(h0, badd(h1, -1))
    if flags.axiom4 and d <= 3:
        return badd(m, d)
    if flags.axiom3 and d == 2:
        return badd(m, 2)
    if d == 2:
        return bmax(badd(h0, 3), badd(h1, 1))
    return badd(m, d + 1)


@dataclass
class BoundTable:
    flags: Flags
    t_max: int
    s_max: int
    rows: list  # rows[t][s], s in 0..s_max

    def __getitem__(self, st):
        s, t = st
        return self.rows[t][s]

    def entry_str(self, s: int, t: int) -> str:
        v = self[s, t]
        if v is None:
            return "-inf"
        if t == 0 and s == 0:
            return "0"
        return f"<={v}"

    def render(self) -> str:
        """Aligned text, highest row first, like a spectral-sequence chart."""
        cells = [[self.entry_str(s, t) for s in range(self.s_max + 1)] for t in range(self.t_max + 1)]
        width = max(len(c) for row in cells for c in row)
        lines = []
        for t in range(self.t_max, -1, -1):
            lines.append(f"{t:>3} | " + " ".join(c.rjust(width) for c in cells[t]))
        lines.append("    +-" + "-" * ((width + 1) * (self.s_max + 1)))
        lines.append("      " + " ".join(str(s).rjust(width) for s in range(self.s_max + 1)))
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"flags": self.flags.label, "t_max": self.t_max, "s_max": self.s_max,
                "rows": [[self[s, t] for s in range(self.s_max + 1)] for t in range(self.t_max + 1)]}


def propagate(flags: Flags, t_max: int, s_max: int) -> BoundTable:
    if t_max < 0 or s_max < 0:
        raise ValueError("t_max and s_max must be >= 0")
    # columns 0, 1 of row t read row-0 columns up to t + 2, so work wider
    width = max(s_max, 1) + t_max + 3
    rows = [[row_zero(flags, s) for s in range(width + 1)]]
    for t in range(1, t_max + 1):
        row = [None] * (width + 1)
        for s in (0, 1):
            row[s] = bmax(*(rows[t - r + 1][s + r] for r in range(2, t + 2) if s + r <= width))
        for s in range(2, width + 1):
            row[s] = lemma_estimates(flags, row[0], row[1], s)
        rows.append(row)
    return BoundTable(flags, t_max, s_max, [r[:s_max + 1] for r in rows])


def closed_forms(flags: Flags):
    """``{s: f(t)}`` upper bounds valid for ``t >= 1``; ``"s>=k"`` keys cover tails."""
    if flags.axiom4:
        return {0: lambda t: 2 * t, 1: lambda t: 2 * t + 1}
    if flags.axiom3:
        return {0: lambda t: 3 * t - 1, 1: lambda t: 3 * t + 1, 2: lambda t: 3 * t + 2,
                "s>=3": lambda t, s: 3 * t + 1 + s}
    return {0: lambda t: 3 * t, 1: lambda t: 3 * t + 1, "s>=2": lambda t, s: 3 * t + 1 + s}


@dataclass
class ClosedFormReport:
    flags: Flags
    t_max: int
    violations: list  # (s, t, value, bound)
    equality: dict  # s -> list of t with value == bound

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_closed_forms(flags: Flags, t_max: int, s_max: int = 6) -> ClosedFormReport:
    table = propagate(flags, t_max, s_max)
    forms = closed_forms(flags)
    violations = []
    equality: dict = {}
    for key, f in forms.items():
        if isinstance(key, int):
            cols = [(key, lambda t, f=f, s=key: f(t))]
        else:
            lo = int(key[3:])
            cols = [(s, lambda t, f=f, s=s: f(t, s)) for s in range(lo, s_max + 1)]
        for s, bound in cols:
            for t in range(1, t_max + 1):
                v, b = table[s, t], bound(t)
                if v is not None and v > b:
                    violations.append((s, t, v, b))
                if v == b:
                    equality.setdefault(s, []).append(t)
    return ClosedFormReport(flags, t_max, violations, equality)
