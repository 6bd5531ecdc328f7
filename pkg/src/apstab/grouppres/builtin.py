"""The two rank-2 presentations over Z[sqrt(-5)], their matrices, and the E-extension.

``SL_2(O)`` (Swan) and ``SL(O + l)`` for the ideal ``l = (2, 1 + w)`` are
given by generators, relations and explicit matrices; ``E = diag(-1, 1)``
acts on both by conjugation, and adjoining E gives the corresponding GL.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .quadratic import W, Matrix2, evaluate
from .words import AbelianGroupResult, GroupPresentation, Word, abelianize, parse_presentation

SWAN_TEXT = """\
gens: J T U A B C
J^2
central: J
T U = U T
A^2 = J
B^2 = J
(T A)^3 = J
(A B)^2 = J
(A U B U^-1)^2 = J
A C A = J T C T^-1
U B U^-1 C B = J T C T^-1
"""

FGT_TEXT = """\
gens: J A V C D
J^2
central: J
A V = V A
C D = D C
(A C^-1)^2 = J
(D V^-1)^3
(C D^-1 V A^-1)^3
"""

HALF = Fraction(1, 2)

SWAN_MATRICES = {
    "J": Matrix2(-1, 0, 0, -1),
    "T": Matrix2(1, 1, 0, 1),
    "U": Matrix2(1, W, 0, 1),
    "A": Matrix2(0, -1, 1, 0),
    "B": Matrix2(-W, 2, 2, W),
    "C": Matrix2(-W - 4, -2 * W, 2 * W, W - 4),
}

FGT_MATRICES = {
    "J": Matrix2(-1, 0, 0, -1),
    "A": Matrix2(1, 1, 0, 1),
    "V": Matrix2(1, (1 + W) * HALF, 0, 1),
    "C": Matrix2(1, 0, 2, 1),
    "D": Matrix2(1, 0, 1 - W, 1),
}

E_MATRIX = Matrix2(-1, 0, 0, 1)

# images under conjugation by E; those not printed alongside the presentations
# are certified by derive_conjugation_action before use
SWAN_E_ACTION = {"J": "J", "T": "T^-1", "U": "U^-1", "A": "A^-1", "B": "J U B U^-1", "C": "T C^-1 T^-1"}
FGT_E_ACTION = {"J": "J", "A": "A^-1", "V": "V^-1", "C": "C^-1", "D": "D^-1"}


@dataclass(frozen=True)
class MatrixGroupPresentation:
    presentation: GroupPresentation
    matrices: dict = field(hash=False)  # generator name -> Matrix2

    def assignment(self):
        return [self.matrices[g] for g in self.presentation.generators]


def builtin_swan_sl2() -> MatrixGroupPresentation:
    return MatrixGroupPresentation(parse_presentation(SWAN_TEXT, "SL_2(O)"), dict(SWAN_MATRICES))


def builtin_fgt_sl() -> MatrixGroupPresentation:
    return MatrixGroupPresentation(parse_presentation(FGT_TEXT, "SL(O+l)"), dict(FGT_MATRICES))


@dataclass
class RelatorCheck:
    label: str
    value: Matrix2
    ok: bool


@dataclass
class RelatorReport:
    relators: list
    determinants: dict  # generator -> det

    @property
    def failures(self):
        return [r for r in self.relators if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures and all(d == 1 for d in self.determinants.values())


def verify_relators(p: GroupPresentation, matrices: dict) -> RelatorReport:
    missing = [g for g in p.generators if g not in matrices]
    if missing:
        raise ValueError(f"no matrix for generators {missing}")
    assign = [matrices[g] for g in p.generators]
    checks = []
    for label, w in zip(p.labels, p.relators):
        v = evaluate(w, assign)
        checks.append(RelatorCheck(label, v, v == Matrix2.identity()))
    dets = {g: matrices[g].det() for g in p.generators}
    return RelatorReport(checks, dets)


@dataclass
class ActionCertificate:
    generator: str
    image: str
    conjugate: Matrix2
    word_matrix: Matrix2

    @property
    def ok(self) -> bool:
        return self.conjugate == self.word_matrix


@dataclass
class ActionReport:
    certificates: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.certificates)

    def action(self, p: GroupPresentation) -> dict:
        return {c.generator: p.word(c.image) for c in self.certificates}


def derive_conjugation_action(p: GroupPresentation, matrices: dict, candidates: dict,
                              e: Matrix2 = E_MATRIX) -> ActionReport:
    """Certify ``e M(g) e^-1 = M(candidate(g))`` for every generator g."""
    missing = [g for g in p.generators if g not in candidates]
    if missing:
        raise ValueError(f"no candidate image for generators {missing}")
    assign = [matrices[g] for g in p.generators]
    einv = e.inverse()
    certs = []
    for g in p.generators:
        conj = e @ matrices[g] @ einv
        certs.append(ActionCertificate(g, candidates[g], conj, evaluate(p.word(candidates[g]), assign)))
    return ActionReport(certs)


def semidirect_z2(p: GroupPresentation, phi: dict, e_square: Word = Word(), name: str = "e") -> GroupPresentation:
    """Adjoin ``e`` with ``e^2 = e_square`` and ``e g e^-1 = phi(g)``."""
    missing = [g for g in p.generators if g not in phi]
    if missing:
        raise ValueError(f"phi is missing generators {missing}")
    if name in p.generators:
        raise ValueError(f"generator name {name!r} already used")
    k = len(p.generators)
    e = Word.gen(k)
    rels = list(p.relators) + [e * e * e_square.inverse()]
    labels = list(p.labels) + [f"{name}^2"]
    for i, g in enumerate(p.generators):
        img = phi[g] if isinstance(phi[g], Word) else p.word(phi[g])
        rels.append(e * Word.gen(i) * e.inverse() * img.inverse())
        labels.append(f"{name} {g} {name}^-1 = {img.to_text(p.generators)}")
    return GroupPresentation(p.generators + (name,), tuple(rels), tuple(labels), f"{p.name} x| Z/2")


def gl_extension(mp: MatrixGroupPresentation, candidates: dict) -> GroupPresentation:
    """The E-extension, refusing to build it unless every image is matrix-certified."""
    rep = derive_conjugation_action(mp.presentation, mp.matrices, candidates)
    bad = [c.generator for c in rep.certificates if not c.ok]
    if bad:
        raise ValueError(f"conjugation images fail the matrix check for {bad}")
    if E_MATRIX @ E_MATRIX != Matrix2.identity():
        raise ValueError("E does not square to the identity")
    return semidirect_z2(mp.presentation, rep.action(mp.presentation), Word(), "E")


@dataclass(frozen=True)
class TableEntry:
    rank: int
    column: str  # "O^n" or "O^(n-1)+l"
    group: str
    source: str  # "computed" or "paper"


def paper_table(n_max: int = 4) -> list[TableEntry]:
    """Abelianizations of GL of rank-n projectives over Z[sqrt(-5)].

    Rank 1 is the unit group {+-1}.  Rank 2 is computed from the
    presentations.  Higher ranks are not computable here and are quoted.
    """
    out = []
    swan = gl_extension(builtin_swan_sl2(), SWAN_E_ACTION)
    fgt = gl_extension(builtin_fgt_sl(), FGT_E_ACTION)
    for n in range(1, n_max + 1):
        if n == 1:
            # GL of a rank-one projective is O^x = {+-1}
            units = str(AbelianGroupResult(0, (2,)))
            out += [TableEntry(1, "O^n", units, "computed"), TableEntry(1, "O^(n-1)+l", units, "computed")]
        elif n == 2:
            out += [TableEntry(2, "O^n", str(abelianize(swan)), "computed"),
                    TableEntry(2, "O^(n-1)+l", str(abelianize(fgt)), "computed")]
        else:
            out += [TableEntry(n, "O^n", "Z/2", "paper"), TableEntry(n, "O^(n-1)+l", "Z/2", "paper")]
    return out
