"""Words in free groups, group presentations, and their text format.

Grammar of the presentation format (``#`` starts a comment)::

    file     := "gens:" NAME+ NEWLINE (line NEWLINE)*
    line     := "central:" NAME+          # each listed generator commutes with all others
              | word ["=" word]           # relator, or relation lhs * rhs^-1
    word     := "1" | factor+
    factor   := atom ["^" INT]
    atom     := NAME | "(" word ")" | "[" word "," word "]"

``[a, b]`` is the commutator ``a b a^-1 b^-1``.  Factors are separated by
whitespace or ``*``; when every generator name is a single character,
juxtaposed letters such as ``TA`` are split into ``T A``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..exactalg import ExactMatrix
from ..exactalg.chain import group_string
from ..exactalg.snf import abelian_invariants


class PresentationSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    """Freely reduced word: a tuple of ``(generator index, nonzero exponent)``."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def gen(cls, i: int, e: int = 1) -> "Word":
        return cls(((i, e),))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        out = Word()
        for _ in range(k):
            out = out * self
        return out

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def cyclic_reduction(self) -> "Word":
        letters = list(self.letters)
        while len(letters) >= 2 and letters[0][0] == letters[-1][0]:
            g, e = letters[0][0], letters[0][1] + letters[-1][1]
            letters = letters[1:-1]
            if e:
                letters = [(g, e)] + letters
        return Word(tuple(letters))

    def exponent_sums(self, ngens: int) -> list[int]:
        v = [0] * ngens
        for g, e in self.letters:
            v[g] += e
        return v

    def to_text(self, names) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.letters)


def _reduce(letters) -> tuple:
    out: list[tuple[int, int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e))
    return tuple(out)


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class AbelianGroupResult:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        return group_string(self.free_rank, self.torsion)

    def as_dict(self):
        return {"rank": self.free_rank, "torsion": list(self.torsion), "group": str(self)}


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    labels: tuple[str, ...] = ()  # human-readable origin of each relator
    name: str = ""

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        n = len(self.generators)
        for w in self.relators:
            if any(not 0 <= g < n for g, _ in w.letters):
                raise ValueError("relator uses an unknown generator index")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(w.to_text(self.generators) for w in self.relators))
        elif len(self.labels) != len(self.relators):
            raise ValueError("one label per relator")

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def relation_matrix(self) -> ExactMatrix:
        n = len(self.generators)
        return ExactMatrix.from_dense([w.exponent_sums(n) for w in self.relators], ncols=n)

    def abelianize(self) -> AbelianGroupResult:
        return abelianize(self)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [w.to_text(self.generators) for w in self.relators]
        return "\n".join(lines) + "\n"


def abelianize(p: GroupPresentation) -> AbelianGroupResult:
    n = len(p.generators)
    if not p.relators:
        return AbelianGroupResult(n, ())
    free, torsion = abelian_invariants(p.relation_matrix())
    return AbelianGroupResult(free, tuple(torsion))


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<int>-?\d+)|(?P<sym>[()\[\],^*=]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PresentationSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


class _Parser:
    def __init__(self, text: str, names):
        self.text = text
        self.names = list(names)
        self.single = all(len(x) == 1 for x in self.names)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if tok[0] is None or (sym is not None and tok[1] != sym):
            raise PresentationSyntaxError(f"expected {sym or 'a token'} in {self.text!r}")
        self.i += 1
        return tok

    def word(self) -> Word:
        w = Word()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                continue
            if kind == "int" and val == "1":
                self.take()
                continue
            if kind == "name" or (kind == "sym" and val in "(["):
                w = w * self.factor()
                continue
            return w

    def factor(self) -> Word:
        kind, val = self.take()
        if kind == "name":
            atom = self.name(val)
        elif val == "(":
            atom = self.word()
            self.take(")")
        elif val == "[":
            a = self.word()
            self.take(",")
            b = self.word()
            self.take("]")
            atom = commutator(a, b)
        else:
            raise PresentationSyntaxError(f"unexpected {val!r} in {self.text!r}")
        if self.peek() == ("sym", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise PresentationSyntaxError(f"exponent must be an integer in {self.text!r}")
            atom = atom ** int(val)
        return atom

    def name(self, val: str) -> Word:
        if val in self.names:
            return Word.gen(self.names.index(val))
        if self.single and all(c in self.names for c in val):
            w = Word()
            for c in val:
                w = w * Word.gen(self.names.index(c))
            return w
        raise PresentationSyntaxError(f"unknown generator {val!r}")

    def relator(self) -> Word:
        lhs = self.word()
        if self.peek() == ("sym", "="):
            self.take()
            rhs = self.word()
            lhs = lhs * rhs.inverse()
        if self.i != len(self.toks):
            raise PresentationSyntaxError(f"trailing input in {self.text!r}")
        return lhs


def parse_word(text: str, names) -> Word:
    p = _Parser(text, names)
    w = p.word()
    if p.i != len(p.toks):
        raise PresentationSyntaxError(f"trailing input in {text!r}")
    return w


def parse_relator(text: str, names) -> Word:
    return _Parser(text, names).relator()


def parse_presentation(text: str, name: str = "") -> GroupPresentation:
    gens = None
    rels: list[Word] = []
    labels: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if gens is None:
            if not line.startswith("gens:"):
                raise PresentationSyntaxError(f"line {lineno}: the first line must be 'gens: ...'")
            gens = tuple(line[5:].split())
            if not gens:
                raise PresentationSyntaxError("no generators")
            continue
        try:
            if line.startswith("central:"):
                for c in line[8:].split():
                    for g in gens:
                        if g != c:
                            rels.append(commutator(parse_word(c, gens), parse_word(g, gens)))
                            labels.append(f"[{c},{g}]")
                continue
            rels.append(parse_relator(line, gens))
            labels.append(line)
        except PresentationSyntaxError as e:
            raise PresentationSyntaxError(f"line {lineno}: {e}") from None
    if gens is None:
        raise PresentationSyntaxError("empty presentation")
    return GroupPresentation(gens, tuple(rels), tuple(labels), name)
