import random

import pytest
from hypothesis import given, strategies as st

from apstab.apalgebra import (UNIT, APAlgebra, FiniteAbelianGroup, GradedModulePresentation,
                              PresentationError, RealizedModule, Relation, ap_multiply, bar_tor_module,
                              bar_tor_trivial, compositions, direct_sum, example_module, free_module,
                              h_number, module_bar_complex, parse_group, parse_presentation,
                              quotient_by_element, random_presentation, rewrite_monomial,
                              trivial_bar_complex, verify_regularity_lemma,
                              verify_stabilization_surjectivity)
from apstab.apalgebra.checks import FAILS, HOLDS, INCONCLUSIVE
from apstab.exactalg import GF, QQ, ZZ, UnsupportedDomainError, homology

GROUPS = ["1", "Z2", "Z3", "Z2xZ2"]


# --- groups and the algebra ---------------------------------------------------

def test_parse_group():
    assert len(parse_group("1")) == 1
    assert len(parse_group("Z/3")) == 3
    g = parse_group("Z2xZ2")
    assert len(g) == 4 and g.elements[0] == (0, 0)
    assert len(parse_group("Z1xZ5")) == 5
    for bad in ("Z", "Zinf", "Z0", "Q"):
        with pytest.raises(ValueError):
            parse_group(bad)


@pytest.mark.parametrize("spec", GROUPS + ["Z4", "Z2xZ3"])
def test_group_axioms(spec):
    g = parse_group(spec)
    n = len(g)
    for a in range(n):
        assert g.op(0, a) == a
        assert g.op(a, g.inverse(a)) == 0
        for b in range(n):
            assert g.op(a, b) == g.op(b, a)
            for c in range(n):
                assert g.op(g.op(a, b), c) == g.op(a, g.op(b, c))


@pytest.mark.parametrize("spec", GROUPS)
def test_dimensions(spec):
    alg = APAlgebra(parse_group(spec), QQ)
    assert [alg.dim(n) for n in range(4)] == [1] + [len(alg.group)] * 3
    assert alg.basis(0) == [UNIT]


@given(st.sampled_from(GROUPS), st.lists(st.integers(0, 3), min_size=1, max_size=7), st.integers(0, 10 ** 6))
def test_rewriting_is_confluent(spec, raw, seed):
    """Any order of single-relation rewrites gives the normal form ``<n, product>``."""
    g = parse_group(spec)
    factors = [x % len(g) for x in raw]
    nf = rewrite_monomial(g, factors)
    assert nf == (len(factors), g.product(factors))
    assert rewrite_monomial(g, factors, random.Random(seed)) == nf


@given(st.sampled_from(GROUPS), st.integers(1, 4), st.integers(1, 4), st.integers(0, 3), st.integers(0, 3))
def test_multiplication_matches_rewriting(spec, n, m, r, s):
    g = parse_group(spec)
    r, s = r % len(g), s % len(g)
    # <n, r> = sigma^(n-1) r as a monomial
    lhs = ap_multiply(g, (n, r), (m, s))
    rhs = rewrite_monomial(g, [0] * (n - 1) + [r] + [0] * (m - 1) + [s])
    assert lhs == rhs


def test_multiplication_needs_positive_gradings():
    with pytest.raises(ValueError):
        ap_multiply(parse_group("Z2"), (0, 0), (1, 1))


def test_multiply_elements_over_field():
    alg = APAlgebra(parse_group("Z2"), GF(2))
    x = {(1, 0): 1, (1, 1): 1}
    # (sigma + lambda)^2 = 2 sigma^2 + 2 sigma lambda = 0 in characteristic 2
    assert alg.multiply_elements(x, x) == {}
    alg3 = APAlgebra(parse_group("Z2"), QQ)
    assert alg3.multiply_elements(x, x) == {(2, 0): 2, (2, 1): 2}


# --- Koszulness ----------------------------------------------------------------

def koszul_dual_dims(q, n_max):
    """Coefficients of 1 / H_A(-t) with H_A(t) = (1 + (q - 1) t) / (1 - t)."""
    # 1/H_A(-t) = (1 + t) / (1 - (q - 1) t)
    out = [1]
    for n in range(1, n_max + 1):
        out.append((q - 1) ** n + (q - 1) ** (n - 1))
    return out


@pytest.mark.parametrize("spec", GROUPS)
@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_koszul(spec, field):
    g = parse_group(spec)
    t = bar_tor_trivial(APAlgebra(g, field), 5)
    assert all(n == d for n, d in t.nonzero())
    assert [t[n, n] for n in range(6)] == koszul_dual_dims(len(g), 5)


def test_trivial_bar_complex_is_a_complex():
    alg = APAlgebra(parse_group("Z3"), QQ)
    c = trivial_bar_complex(alg, 4)
    c.validate()
    h = homology(c, QQ)
    assert [h.dim(d) for d in range(5)] == [0, 0, 0, 0, 3 * 2 ** 3]


def test_weight_blocks_partition_the_bar_complex():
    alg = APAlgebra(parse_group("Z2xZ2"), GF(2))
    whole = trivial_bar_complex(alg, 3)
    blocks = [trivial_bar_complex(alg, 3, w) for w in range(4)]
    for d in range(4):
        assert sum(b.dims[d] for b in blocks) == whole.dims[d]


def test_tor_needs_field():
    with pytest.raises(UnsupportedDomainError):
        bar_tor_trivial(APAlgebra(parse_group("Z2"), ZZ), 3)


def test_compositions():
    assert compositions(4, 2) == ((1, 3), (2, 2), (3, 1))
    assert len(compositions(7, 3)) == 15
    assert compositions(0, 0) == ((),)


# --- modules ---------------------------------------------------------------------

def test_example_module_dimensions():
    alg = APAlgebra(parse_group("Z2"), GF(2))
    M = RealizedModule(example_module(), alg, 8)
    assert M.dims == [0, 2, 8, 2, 2, 2, 2, 2, 2]
    assert M.check_relations()


@pytest.mark.parametrize("spec", GROUPS)
def test_quotient_by_sigma(spec):
    g = parse_group(spec)
    M = RealizedModule(quotient_by_element(g, 0), APAlgebra(g, QQ), 5)
    # sigma A(n-1) = A(n) for n >= 2, so only gradings 0 and 1 survive
    assert M.dims == [1, len(g) - 1, 0, 0, 0, 0]


def test_free_module_tor():
    alg = APAlgebra(parse_group("Z3"), GF(3))
    t = bar_tor_module(alg, free_module("X", 1), 5, 2)
    assert t.nonzero() == [(1, 0)]


def test_presentation_text_roundtrip():
    pres = example_module()
    again = parse_presentation(pres.to_text())
    assert again.generators == pres.generators
    alg = APAlgebra(parse_group("Z2"), GF(2))
    assert RealizedModule(again, alg, 5).dims == RealizedModule(pres, alg, 5).dims


def test_presentation_parse_errors():
    with pytest.raises(PresentationError):
        parse_presentation("gen X 1\nrel 2 (1)*Y\n")
    with pytest.raises(PresentationError):
        parse_presentation("gen X 2\nrel 1 X\n")
    with pytest.raises(PresentationError):
        parse_presentation("gen X -1\n")
    with pytest.raises(PresentationError):
        parse_presentation("generator X 1\n")


def test_parsed_relation_matches_builtin():
    text = "gen X 0\nrel 1 (0)*X\n"
    g = parse_group("Z2")
    alg = APAlgebra(g, QQ)
    assert RealizedModule(parse_presentation(text), alg, 4).dims == \
        RealizedModule(quotient_by_element(g, 0), alg, 4).dims


def test_module_bar_complex_squares_to_zero():
    alg = APAlgebra(parse_group("Z2"), GF(2))
    M = RealizedModule(example_module(), alg, 5)
    for n in range(6):
        module_bar_complex(M, n).validate()


def test_direct_sum_adds_tor():
    g = parse_group("Z2")
    alg = APAlgebra(g, GF(2))
    a, b = quotient_by_element(g, 0), quotient_by_element(g, 1)
    ta, tb = bar_tor_module(alg, a, 5, 2), bar_tor_module(alg, b, 5, 2)
    ts = bar_tor_module(alg, direct_sum(a, b), 5, 2)
    for n in range(6):
        for d in range(3):
            assert ts[n, d] == ta[n, d] + tb[n, d]


# --- Tor of specific modules, regularity and surjectivity --------------------------

def test_example_module_tor():
    alg = APAlgebra(parse_group("Z2"), GF(2))
    t = bar_tor_module(alg, example_module(), 8, 3)
    assert t.as_rows()[0] == [0, 2, 6, 0, 0, 0, 0, 0, 0]
    assert t.as_rows()[1] == [0, 0, 2, 12, 0, 0, 0, 0, 0]
    assert [h_number(t, d).value for d in range(4)] == [2, 3, 4, 5]


def test_quotient_tor_and_h_numbers():
    g = parse_group("Z2")
    t = bar_tor_module(APAlgebra(g, GF(2)), quotient_by_element(g, 0), 6, 3)
    assert t.nonzero() == [(0, 0), (1, 1)]
    assert h_number(t, 0).value == 0
    assert h_number(t, 2).value is None
    assert str(h_number(t, 2)) == "-inf"


def test_regularity_lemma_on_named_modules():
    g = parse_group("Z2")
    alg = APAlgebra(g, GF(2))
    for pres in (example_module(), quotient_by_element(g, 0), quotient_by_element(g, 1)):
        rep = verify_regularity_lemma(pres, alg, d_max=3, N=8)
        assert rep.overall == HOLDS, rep.status


def test_regularity_lemma_inconclusive_window():
    g = parse_group("Z2")
    alg = APAlgebra(g, GF(2))
    pres = GradedModulePresentation((("X", 0),), (Relation.make(5, {("X", (1,)): 1}),))
    rep = verify_regularity_lemma(pres, alg, d_max=2, N=4)
    assert rep.overall == INCONCLUSIVE
    assert rep.overall != FAILS


@pytest.mark.parametrize("seed", range(6))
def test_regularity_lemma_random(seed):
    rng = random.Random(seed)
    for spec, p in (("1", 2), ("Z2", 2), ("Z2", 3)):
        alg = APAlgebra(parse_group(spec), GF(p))
        pres = random_presentation(rng, alg)
        assert verify_regularity_lemma(pres, alg, d_max=3, N=8).overall == HOLDS


def test_stabilization_surjectivity():
    alg = APAlgebra(parse_group("Z2"), GF(2))
    rep = verify_stabilization_surjectivity(example_module(), alg, d=1, N=6)
    assert rep.ok and rep.consistent
    assert sorted(rep.surjective) == [3, 4, 5, 6]
    # a generator in grading 3 breaks surjectivity onto grading 3
    extra = direct_sum(example_module(), free_module("Y", 3))
    rep = verify_stabilization_surjectivity(extra, alg, d=1, N=5)
    assert rep.surjective[3] is False and rep.consistent


def test_random_presentations_respect_bounds():
    rng = random.Random(5)
    alg = APAlgebra(parse_group("Z3"), GF(3))
    for _ in range(30):
        p = random_presentation(rng, alg, max_gens=3, max_rels=4, max_grading=3)
        assert 1 <= len(p.generators) <= 3
        assert len(p.relations) <= 4
        assert p.max_generator_grading <= 3
        assert all(r.grading <= 3 for r in p.relations)
