"""Exact arithmetic in Q(w), w^2 = -5, and 2x2 matrices over it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

D = -5  # w^2


def _q(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not exact")
    return Fraction(x)


@dataclass(frozen=True)
class QuadInt:
    """``a + b w`` with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))

    @classmethod
    def lift(cls, x) -> "QuadInt":
        return x if isinstance(x, QuadInt) else cls(x, 0)

    def __add__(self, o):
        o = QuadInt.lift(o)
        return QuadInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-QuadInt.lift(o))

    def __rsub__(self, o):
        return QuadInt.lift(o) - self

    def __mul__(self, o):
        o = QuadInt.lift(o)
        return QuadInt(self.a * o.a + D * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadInt(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - D * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadInt(c.a / n, c.b / n)

    def __truediv__(self, o):
        return self * QuadInt.lift(o).inverse()

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = QuadInt(o)
        return isinstance(o, QuadInt) and self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __str__(self):
        def frac(x):
            return str(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        if self.b == 0:
            return frac(self.a)
        bw = "w" if self.b == 1 else "-w" if self.b == -1 else f"{frac(self.b)}w"
        if self.a == 0:
            return bw
        return f"{frac(self.a)}{'' if bw.startswith('-') else '+'}{bw}"

    __repr__ = __str__


W = QuadInt(0, 1)


@dataclass(frozen=True)
class Matrix2:
    a: QuadInt
    b: QuadInt
    c: QuadInt
    d: QuadInt

    def __post_init__(self):
        for f in "abcd":
            object.__setattr__(self, f, QuadInt.lift(getattr(self, f)))

    @classmethod
    def of(cls, rows) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                       self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def det(self) -> QuadInt:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Matrix2":
        k = self.det().inverse()
        return Matrix2(self.d * k, -self.b * k, -self.c * k, self.a * k)

    def __pow__(self, n: int) -> "Matrix2":
        base = self if n >= 0 else self.inverse()
        out = Matrix2.identity()
        for _ in range(abs(n)):
            out = out @ base
        return out

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def evaluate(word, assignment) -> Matrix2:
    """Matrix of a word, given one Matrix2 per generator index."""
    out = Matrix2.identity()
    for g, e in word.letters:
        out = out @ (assignment[g] ** e)
    return out
