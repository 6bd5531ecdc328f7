"""The acceptance suite as data: each criterion yields a list of named checks.

A check records an ``anchor`` (what is being checked), the expected value,
the value obtained and whether they agree.  Values are plain JSON types so
reports serialize deterministically.  The CLI and the test suite both run
these functions; nothing here prints.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import __version__
from .apalgebra import (APAlgebra, bar_tor_module, bar_tor_trivial, example_module, h_number,
                        parse_group, quotient_by_element, random_presentation, verify_regularity_lemma,
                        verify_stabilization_surjectivity)
from .boundprop import Flags, propagate, verify_closed_forms
from .complexes import (boundary_rbs, chain_poset, matching_complex, order_complex, rbs_poset,
                        rbs_to_sdx, sdx_to_rbs, x_poset)
from .exactalg import GF, QQ, ZZ
from .grouppres import (FGT_E_ACTION, SWAN_E_ACTION, abelianize, builtin_fgt_sl, builtin_swan_sl2,
                        derive_conjugation_action, gl_extension, verify_relators)
from .jwcdga import dprime_homology, jw_homology, partition_formula_dim

SCHEMA_VERSION = 1
DEFAULT_CAP = 200_000


@dataclass
class RunConfig:
    seed: int = 0
    cap: int | None = DEFAULT_CAP
    threads: int = 1
    random_presentations: int = 50

    def as_dict(self) -> dict:
        # thread count changes scheduling only, never results, so it stays out of reports
        return {"seed": self.seed, "cap": self.cap, "random_presentations": self.random_presentations}


@dataclass
class Check:
    anchor: str
    expected: object
    got: object
    passed: bool

    def as_dict(self) -> dict:
        return {"anchor": self.anchor, "expected": self.expected, "got": self.got, "pass": self.passed}


def check(anchor, expected, got, passed=None) -> Check:
    return Check(anchor, expected, got, expected == got if passed is None else bool(passed))


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary_line(self) -> str:
        bad = sum(not c.passed for c in self.checks)
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f" ({bad} failing)"
        return f"criterion {self.number:>2} {status}: {self.title} [{len(self.checks)} checks]{extra}"


# --------------------------------------------------------------------- 1

KOSZUL_GROUPS = ("1", "Z2", "Z3", "Z2xZ2")
KOSZUL_FIELDS = (QQ, GF(2), GF(3))


def criterion_koszul(cfg: RunConfig, n_max: int = 6) -> list[Check]:
    out = []
    for g in KOSZUL_GROUPS:
        G = parse_group(g)
        for k in KOSZUL_FIELDS:
            t = bar_tor_trivial(APAlgebra(G, k), n_max)
            off = [[n, d] for n, d in t.nonzero() if n != d]
            diag = [t[n, n] for n in range(n_max + 1)]
            q = len(G)
            want = [1] + [q * (q - 1) ** (n - 1) for n in range(1, n_max + 1)]
            out.append(check(f"Koszul P={g} k={k} off-diagonal Tor", [], off))
            out.append(check(f"Koszul P={g} k={k} diagonal Tor dims", want, diag))
    return out


# --------------------------------------------------------------------- 2

def criterion_regularity(cfg: RunConfig, N: int = 10) -> list[Check]:
    out = []
    z2 = parse_group("Z2")
    alg = APAlgebra(z2, GF(2))
    named = [("example module over A_Z2, F2", example_module(), alg),
             ("A/sigma over A_Z2, F2", quotient_by_element(z2, 0), alg),
             ("A/sigma over A_Z3, F3", quotient_by_element(parse_group("Z3"), 0),
              APAlgebra(parse_group("Z3"), GF(3)))]
    for label, pres, a in named:
        rep = verify_regularity_lemma(pres, a, d_max=3, N=N)
        out.append(check(f"regularity d=2,3: {label}", {"2": "holds", "3": "holds"},
                         {str(d): s for d, s in sorted(rep.status.items())}))
    rng = random.Random(cfg.seed)
    algebras = [APAlgebra(parse_group(g), GF(p)) for g in ("1", "Z2") for p in (2, 3)]
    statuses = []
    for i in range(cfg.random_presentations):
        a = algebras[i % len(algebras)]
        pres = random_presentation(rng, a, max_gens=3, max_rels=4, max_grading=3)
        rep = verify_regularity_lemma(pres, a, d_max=3, N=N)
        statuses.append(rep.overall)
    bad = [i for i, s in enumerate(statuses) if s != "holds"]
    out.append(check(f"regularity d=2,3: {cfg.random_presentations} random presentations (seed {cfg.seed})",
                     [], bad))
    return out


# --------------------------------------------------------------------- 3

def criterion_example(cfg: RunConfig, N: int = 8) -> list[Check]:
    alg = APAlgebra(parse_group("Z2"), GF(2))
    pres = example_module()
    t = bar_tor_module(alg, pres, N, 1)
    gen = [n for n in range(3, N + 1) if t[n, 0]]
    rel = [n for n in range(4, N + 1) if t[n, 1]]
    surj = verify_stabilization_surjectivity(pres, alg, d=1, N=4)
    return [
        check("example module: Tor_0 vanishes in gradings > 2", [], gen),
        check("example module: Tor_1 vanishes in gradings > 3", [], rel),
        check("example module: h_0 = 2, h_1 = 3", [2, 3], [h_number(t, 0).value, h_number(t, 1).value]),
        check("example module: summed stabilization onto gradings 3, 4", {"3": True, "4": True},
              {str(n): v for n, v in sorted(surj.surjective.items())}),
        check("example module: surjectivity agrees with Tor_0", True, surj.consistent),
    ]


# --------------------------------------------------------------------- 4

# the three charts, rows t = 1..3 (or just t = 1), columns s = 0..4
CHART_ROWS = {
    Flags(): {0: [0, None, 3, 4, 5, 6], 1: [3, 4, 6, 7, 8]},
    Flags(True): {0: [0, None, 2, 4, 5, 6], 1: [2, 4, 5, 7, 8], 2: [5, 7, 8, 10, 11], 3: [8, 10, 11, 13, 14]},
    Flags(True, True): {0: [0, None, 2, 3, 5, 6], 1: [2, 3, 4, 5, 7], 2: [4, 5, 6, 7, 9], 3: [6, 7, 8, 9, 11]},
}
# entries (s, t) visible in the charts where the closed form for s in {0, 1} is attained
CHART_EQUALITY = {
    Flags(): [(0, 1), (1, 1)],
    Flags(True): [(0, 1), (1, 1), (0, 2), (1, 2), (0, 3), (1, 3)],
    Flags(True, True): [(0, 1), (1, 1), (0, 2), (1, 2), (0, 3), (1, 3)],
}


def criterion_bounds(cfg: RunConfig, t_max: int = 50) -> list[Check]:
    out = []
    for flags, rows in CHART_ROWS.items():
        table = propagate(flags, max(rows), 5)
        for t, want in rows.items():
            got = [table[s, t] for s in range(len(want))]
            out.append(check(f"bound chart flags={flags.label} row {t}", want, got))
        rep = verify_closed_forms(flags, t_max)
        out.append(check(f"closed forms flags={flags.label} t<={t_max}", [], [list(v) for v in rep.violations]))
        eq = [[s, t] for s, t in CHART_EQUALITY[flags] if t in rep.equality.get(s, [])]
        out.append(check(f"closed forms flags={flags.label} attained at chart entries",
                         [list(x) for x in CHART_EQUALITY[flags]], eq))
    return out


# --------------------------------------------------------------------- 5

def _below_sqrt_line(n: int, d: int) -> bool:
    """``d < (n - sqrt(n)) / 2``, decided exactly."""
    k = n - 2 * d
    return k > 0 and k * k > n


def criterion_schur(cfg: RunConfig, m_max: int = 3, n_max: int = 8) -> list[Check]:
    mismatch, vanish_bad = [], []
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            h = jw_homology(m, n, QQ, cap=cfg.cap, threads=cfg.threads)
            for d in range(n // 2 + 1):
                brute, formula = h.dim(d), partition_formula_dim(m, n, d)
                if brute != formula:
                    mismatch.append([m, n, d, brute, formula])
                if (_below_sqrt_line(n, d) or 2 * d < n - m) and brute:
                    vanish_bad.append([m, n, d, brute])
    out = [check(f"JW homology = partition formula, m<={m_max}, n<={n_max}", [], mismatch),
           check("JW vanishing below both lines", [], vanish_bad)]
    for n, d, m in ((4, 1, 2), (9, 3, 3)):
        dim = jw_homology(m, n, QQ, cap=cfg.cap, threads=cfg.threads).dim(d)
        out.append(check(f"JW H_{{{n},{d}}} nonzero at m={m}", True, dim > 0))
    return out


# --------------------------------------------------------------------- 6

def criterion_char3(cfg: RunConfig) -> list[Check]:
    h = matching_complex(7).homology(ZZ, cap=cfg.cap)
    got = {"rank": h.dim(1), "torsion": list(h.torsion_at(1))}
    f3 = jw_homology(7, 7, GF(3), cap=cfg.cap, squarefree_only=True, threads=cfg.threads).dim(2)
    q = jw_homology(7, 7, QQ, cap=cfg.cap, threads=cfg.threads).dim(2)
    return [check("reduced H_1(M(7); Z) = Z/3", {"rank": 0, "torsion": [3]}, got),
            check("H_{7,2}(JW, m=7; F3) nonzero on the squarefree block", True, f3 > 0),
            check("H_{7,2}(JW, m=7; Q) = 0", 0, q)]


# --------------------------------------------------------------------- 7

def criterion_dprime(cfg: RunConfig, n_max: int = 6) -> list[Check]:
    out = []
    for g in ("1", "Z2", "Z3"):
        G = parse_group(g)
        q = len(G)
        bad = []
        for n in range(n_max + 1):
            h = dprime_homology(G, n, QQ, cap=cfg.cap, threads=cfg.threads)
            for d in range(n // 2 + 1):
                if (2 * d < n - q + 1 or _below_sqrt_line(n, d)) and h.dim(d):
                    bad.append([n, d, h.dim(d)])
        out.append(check(f"D' vanishing P={g}, n<={n_max}", [], bad))
        if q >= 2:
            dim = dprime_homology(G, 4, QQ, cap=cfg.cap).dim(1)
            out.append(check(f"D' H_{{4,1}} nonzero P={g}", True, dim > 0))
    return out


# --------------------------------------------------------------------- 8

def criterion_rbs(cfg: RunConfig, n_max: int = 4) -> list[Check]:
    contract_bad, bij_bad, order_bad, x_bad = [], [], [], []
    for g in ("1", "Z2", "Z3"):
        G = parse_group(g)
        for n in range(1, n_max + 1):
            for rho in range(len(G)):
                R = rbs_poset(n, rho, G)
                if not order_complex(R).homology(ZZ, cap=cfg.cap).is_zero_everywhere():
                    contract_bad.append([g, n, rho])
                if n < 2:
                    continue
                B = boundary_rbs(n, rho, G)
                sd = chain_poset(x_poset(n - 1, G))
                image = {x: rbs_to_sdx(x, G) for x in B.elements}
                ok = (len(set(image.values())) == len(B) == len(sd)
                      and set(image.values()) == {tuple(c) for c in sd.elements}
                      and all(sdx_to_rbs(c, n, rho, G) == x for x, c in image.items()))
                if not ok:
                    bij_bad.append([g, n, rho])
                    continue
                for x in B.elements:
                    for y in B.elements:
                        if B.le(x, y) != sd.le(image[x], image[y]):
                            order_bad.append([g, n, rho])
                            break
                    else:
                        continue
                    break
        for m in range(1, 4):
            h = order_complex(x_poset(m, G)).homology(ZZ, cap=cfg.cap)
            want = {str(d): (len(G) - 1) ** m if d == m - 1 else 0 for d in range(-1, m)}
            got = {str(d): h.dim(d) for d in range(-1, m)}
            if want != got or any(h.torsion_at(d) for d in range(-1, m)):
                x_bad.append([g, m])
    return [check(f"RBS posets contractible, n<={n_max}, |P|<=3", [], contract_bad),
            check("rbs_to_sdx bijective with inverse", [], bij_bad),
            check("rbs_to_sdx order isomorphism", [], order_bad),
            check("X_m(P) homology Z^((|P|-1)^m) in degree m-1, m<=3", [], x_bad)]


# --------------------------------------------------------------------- 9

def criterion_groups(cfg: RunConfig) -> list[Check]:
    swan, fgt = builtin_swan_sl2(), builtin_fgt_sl()
    out = [check("abelianization SL_2(O)", "Z/2 + Z/6 + Z^2", str(abelianize(swan.presentation))),
           check("abelianization GL_2(O)", "Z/2 + Z/2 + Z/2 + Z/2 + Z/2",
                 str(abelianize(gl_extension(swan, SWAN_E_ACTION)))),
           check("abelianization SL(O+l)", "Z/3 + Z^2", str(abelianize(fgt.presentation))),
           check("abelianization GL(O+l)", "Z/2 + Z/2 + Z/2", str(abelianize(gl_extension(fgt, FGT_E_ACTION))))]
    for label, mp, act in (("SL_2(O)", swan, SWAN_E_ACTION), ("SL(O+l)", fgt, FGT_E_ACTION)):
        rep = verify_relators(mp.presentation, mp.matrices)
        out.append(check(f"relators of {label} hold for the matrices", [], [r.label for r in rep.failures]))
        out.append(check(f"generators of {label} have determinant 1", True,
                         all(d == 1 for d in rep.determinants.values())))
        cert = derive_conjugation_action(mp.presentation, mp.matrices, act)
        out.append(check(f"E-conjugation certificates for {label}", [],
                         [c.generator for c in cert.certificates if not c.ok]))
    return out


CRITERIA = {
    1: ("Koszulness of A_P", criterion_koszul),
    2: ("regularity lemma", criterion_regularity),
    3: ("example module generation and presentation degrees", criterion_example),
    4: ("bound charts and closed forms", criterion_bounds),
    5: ("JW homology versus the partition formula", criterion_schur),
    6: ("characteristic-3 torsion", criterion_char3),
    7: ("D' vanishing and nonvanishing", criterion_dprime),
    8: ("RBS combinatorics", criterion_rbs),
    9: ("abelianization table", criterion_groups),
}


def run_criterion(number: int, cfg: RunConfig | None = None) -> CriterionResult:
    cfg = cfg or RunConfig()
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    checks = fn(cfg)
    return CriterionResult(number, title, checks, time.perf_counter() - start)


def verify_all(cfg: RunConfig | None = None, numbers=None, progress=None) -> list[CriterionResult]:
    cfg = cfg or RunConfig()
    out = []
    for k in numbers or sorted(CRITERIA):
        res = run_criterion(k, cfg)
        if progress:
            progress(res)
        out.append(res)
    return out


def report(command: str, cfg: RunConfig, results, checks) -> dict:
    """The common JSON document shape (timings excluded so output is reproducible)."""
    return {"schema_version": SCHEMA_VERSION, "version": __version__, "command": command,
            "config": cfg.as_dict(), "results": results, "checks": [c.as_dict() for c in checks]}


__all__ = ["CRITERIA", "Check", "CriterionResult", "RunConfig", "check", "report", "run_criterion",
           "verify_all"]
