import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apstab.grouppres import (E_MATRIX, FGT_E_ACTION, SWAN_E_ACTION, GroupPresentation, Matrix2,
                              PresentationSyntaxError, QuadInt, W, Word, abelianize, builtin_fgt_sl,
                              builtin_swan_sl2, commutator, derive_conjugation_action, evaluate,
                              gl_extension, paper_table, parse_presentation, parse_word, semidirect_z2,
                              verify_relators)


def ab(text):
    return str(abelianize(parse_presentation(text)))


# --- words ------------------------------------------------------------------------------

def test_free_reduction():
    a, b = Word.gen(0), Word.gen(1)
    assert (a * b * b.inverse() * a.inverse()).is_identity()
    assert len(a ** 3 * a ** -2) == 1
    assert (a * b) ** -1 == b.inverse() * a.inverse()
    assert commutator(a, b).exponent_sums(2) == [0, 0]
    assert (b * a * b.inverse()).cyclic_reduction() == a


def test_parse_word_forms():
    names = ["a", "b"]
    assert parse_word("ab", names) == parse_word("a * b", names) == parse_word("a b", names)
    assert parse_word("(ab)^-2", names) == (Word.gen(0) * Word.gen(1)) ** -2
    assert parse_word("[a,b]", names) == commutator(Word.gen(0), Word.gen(1))
    assert parse_word("1", names).is_identity()


def test_parser_errors():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("a^2\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens: a\nb^2\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens: a\na^x\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens: a\n(a\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens: a\na $ a\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("")
    with pytest.raises(ValueError):
        GroupPresentation(("a", "a"), ())


# --- abelianization ------------------------------------------------------------------------

def test_small_groups():
    assert ab("gens: a\na^2\n") == "Z/2"
    assert ab("gens: a b\n") == "Z^2"
    assert ab("gens: a b\n[a,b]\n") == "Z^2"
    assert ab("gens: a b\na^2\nb^3\n") == "Z/6"
    assert ab("gens: a b\na^4\nb^6\n") == "Z/2 + Z/12"
    # S_3 = <s, t | s^2, t^3, (st)^2> has abelianization Z/2
    assert ab("gens: s t\ns^2\nt^3\n(s t)^2\n") == "Z/2"
    assert ab("gens: x y\nx = y\n") == "Z"


def test_central_expansion():
    p = parse_presentation("gens: J a b\ncentral: J\n")
    assert len(p.relators) == 2
    assert p.labels == ("[J,a]", "[J,b]")


def _random_word(rng, n, length):
    return Word(tuple((rng.randrange(n), rng.choice([-1, 1])) for _ in range(length)))


@given(st.integers(0, 10 ** 6))
def test_abelianization_invariant_under_relator_moves(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    rels = [_random_word(rng, n, rng.randint(1, 6)) for _ in range(rng.randint(1, 4))]
    gens = tuple("abc"[:n])
    base = abelianize(GroupPresentation(gens, tuple(rels)))
    moved = []
    for w in rels:
        # conjugate, invert, cyclically permute and insert a cancelling pair
        g = _random_word(rng, n, 2)
        v = g * w * g.inverse()
        if rng.random() < 0.5:
            v = v.inverse()
        k = rng.randrange(len(v.letters) + 1) if v.letters else 0
        v = Word(v.letters[k:] + v.letters[:k])
        x = Word.gen(rng.randrange(n))
        v = x * x.inverse() * v
        moved.append(v)
    assert abelianize(GroupPresentation(gens, tuple(moved))) == base


def test_semidirect_with_trivial_action_adds_z2():
    p = parse_presentation("gens: a\na^3\n")
    q = semidirect_z2(p, {"a": "a"})
    assert str(abelianize(q)) == "Z/6"
    # inversion on Z/3: the dihedral group of order 6
    assert str(abelianize(semidirect_z2(p, {"a": "a^-1"}))) == "Z/2"
    with pytest.raises(ValueError):
        semidirect_z2(p, {})
    with pytest.raises(ValueError):
        semidirect_z2(p, {"a": "a"}, name="a")


# --- Z[sqrt(-5)] ------------------------------------------------------------------------

def test_quadint_arithmetic():
    assert W * W == QuadInt(-5, 0)
    x = QuadInt(1, 1)
    assert x * x.conjugate() == QuadInt(6, 0) and x.norm() == 6
    assert x * x.inverse() == QuadInt(1, 0)
    assert (1 + W) * Fraction(1, 2) == QuadInt(Fraction(1, 2), Fraction(1, 2))
    assert 3 - W == QuadInt(3, -1)


@given(st.tuples(*[st.integers(-4, 4)] * 4), st.tuples(*[st.integers(-4, 4)] * 4))
def test_quadint_field_laws(u, v):
    a, b = QuadInt(u[0], u[1]), QuadInt(u[2], u[3])
    c, d = QuadInt(v[0], v[1]), QuadInt(v[2], v[3])
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).norm() == a.norm() * b.norm()
    m, n = Matrix2(a, b, c, d), Matrix2(d, c, b, a)
    assert (m @ n).det() == m.det() * n.det()


def test_matrix_words():
    t = Matrix2(1, 1, 0, 1)
    assert t ** 3 == Matrix2(1, 3, 0, 1)
    assert t ** -1 == Matrix2(1, -1, 0, 1)
    assert evaluate(parse_word("a b a^-1", ["a", "b"]), [t, E_MATRIX]) == t @ E_MATRIX @ t.inverse()
    assert E_MATRIX.det() == -1 and E_MATRIX @ E_MATRIX == Matrix2.identity()


# --- the rank-2 presentations -----------------------------------------------------------

@pytest.mark.parametrize("build", [builtin_swan_sl2, builtin_fgt_sl])
def test_relators_hold_for_matrices(build):
    mp = build()
    rep = verify_relators(mp.presentation, mp.matrices)
    assert rep.ok, [r.label for r in rep.failures]


def test_corrupted_relator_is_detected():
    mp = builtin_swan_sl2()
    p = mp.presentation
    bad = GroupPresentation(p.generators, p.relators[:-1] + (p.relators[-1] * p.word("T"),),
                            p.labels)
    rep = verify_relators(bad, mp.matrices)
    assert not rep.ok and [r.label for r in rep.failures] == [p.labels[-1]]
    wrong = dict(mp.matrices, T=Matrix2(1, 2, 0, 1))
    assert not verify_relators(p, wrong).ok


def test_sl_abelianizations():
    assert str(abelianize(builtin_swan_sl2().presentation)) == "Z/2 + Z/6 + Z^2"
    assert str(abelianize(builtin_fgt_sl().presentation)) == "Z/3 + Z^2"
    assert len(builtin_swan_sl2().presentation.relators) == 14


@pytest.mark.parametrize("build,action", [(builtin_swan_sl2, SWAN_E_ACTION), (builtin_fgt_sl, FGT_E_ACTION)])
def test_conjugation_action_is_certified(build, action):
    mp = build()
    rep = derive_conjugation_action(mp.presentation, mp.matrices, action)
    assert rep.ok


def test_wrong_action_is_rejected():
    mp = builtin_swan_sl2()
    wrong = dict(SWAN_E_ACTION, B="B")
    assert not derive_conjugation_action(mp.presentation, mp.matrices, wrong).ok
    with pytest.raises(ValueError):
        gl_extension(mp, wrong)


def test_gl_abelianizations():
    assert str(abelianize(gl_extension(builtin_swan_sl2(), SWAN_E_ACTION))) == "Z/2 + Z/2 + Z/2 + Z/2 + Z/2"
    assert str(abelianize(gl_extension(builtin_fgt_sl(), FGT_E_ACTION))) == "Z/2 + Z/2 + Z/2"


def test_table():
    rows = paper_table(4)
    assert len(rows) == 8
    assert {(r.rank, r.source) for r in rows} == {(1, "computed"), (2, "computed"), (3, "paper"), (4, "paper")}
    assert all(r.group == "Z/2" for r in rows if r.rank != 2)
