"""Plain-text interchange for simplicial complexes and posets.

Complex files hold one facet per line as whitespace-separated vertex
labels.  Poset files hold ``element LABEL`` lines and ``le A B`` lines
(``A <= B``; reflexive pairs may be omitted).  Labels are tokens without
whitespace; integer-looking labels become ints and comma-joined labels
(``1,2``) become tuples, which is how matching-complex edges are written.  ``#`` starts a comment.
"""

from __future__ import annotations

from .poset import FinitePoset
from .simplicial import SimplicialComplex


def _label(tok: str):
    if "," in tok:
        return tuple(_label(t) for t in tok.split(","))
    try:
        return int(tok)
    except ValueError:
        return tok


def _token(v) -> str:
    if isinstance(v, tuple):
        return ",".join(_token(x) for x in v)
    return str(v)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def complex_to_text(c: SimplicialComplex) -> str:
    return "".join(" ".join(_token(v) for v in f) + "\n" for f in c.facets)


def parse_complex(text: str, name: str = "") -> SimplicialComplex:
    facets = []
    for lineno, line in _lines(text):
        toks = line.split()
        if len(set(toks)) != len(toks):
            raise ValueError(f"line {lineno}: repeated vertex")
        facets.append(tuple(_label(t) for t in toks))
    return SimplicialComplex(facets, name=name)


def poset_to_text(p: FinitePoset) -> str:
    label = {x: str(i) for i, x in enumerate(p.elements)}
    out = [f"element {label[x]}" for x in p.elements]
    out += [f"le {label[a]} {label[b]}" for a, b in sorted(p.relation, key=lambda ab: (p.elements.index(ab[0]), p.elements.index(ab[1]))) if a != b]
    return "\n".join(out) + "\n"


def parse_poset(text: str, name: str = "") -> FinitePoset:
    elems = []
    rel = []
    for lineno, line in _lines(text):
        toks = line.split()
        if toks[0] == "element" and len(toks) == 2:
            elems.append(_label(toks[1]))
        elif toks[0] == "le" and len(toks) == 3:
            rel.append((_label(toks[1]), _label(toks[2])))
        else:
            raise ValueError(f"line {lineno}: expected 'element X' or 'le A B', got {line!r}")
    return FinitePoset(elems, rel, name=name)
