import itertools

import pytest
from hypothesis import given, strategies as st

from apstab.apalgebra import parse_group
from apstab.complexes import (FinitePoset, PosetError, SimplicialComplex, boundary_of_simplex,
                              boundary_rbs, chain_poset, complex_to_text, is_rbs_list, matching_complex,
                              merge, order_complex, parse_complex, parse_poset, partial_sums, poset_to_text,
                              rbs_le, rbs_lists, rbs_poset, rbs_to_sdx, sdx_to_rbs, simplex, x_poset)
from apstab.exactalg import GF, QQ, ZZ


def brute_matchings(n):
    """All non-empty matchings of K_n, as sets of edges."""
    edges = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for k in range(1, n // 2 + 1):
        for es in itertools.combinations(edges, k):
            if len({v for e in es for v in e}) == 2 * k:
                out.append(es)
    return out


# --- simplicial complexes --------------------------------------------------------------

def test_facets_are_maximal():
    c = SimplicialComplex([(1, 2, 3), (1, 2), (4,)])
    assert sorted(c.facets) == [(1, 2, 3), (4,)]
    assert c.dimension == 2
    assert c.f_vector() == (4, 3, 1)


@pytest.mark.parametrize("k", range(1, 5))
def test_spheres_and_balls(k):
    s = boundary_of_simplex(k).homology(ZZ)
    assert [s.dim(d) for d in range(-1, k)] == [0] * k + [1]
    assert simplex(range(k + 1)).homology(ZZ).is_zero_everywhere()


def test_unreduced_homology_of_points():
    c = SimplicialComplex([], vertices=[1, 2, 3])
    assert c.homology(QQ, reduced=False).dim(0) == 3
    assert c.homology(QQ).dim(0) == 2


@pytest.mark.parametrize("n", range(2, 8))
def test_matching_complex_faces(n):
    c = matching_complex(n)
    faces = {tuple(sorted(f)) for d, fs in c.simplices.items() if d >= 0 for f in fs}
    assert faces == {tuple(sorted(m)) for m in brute_matchings(n)}


def test_matching_complex_homology():
    assert matching_complex(3).homology(ZZ).group_str(0) == "Z^2"
    h4 = matching_complex(4).homology(ZZ)
    assert h4.group_str(0) == "Z^2" and h4.is_zero(1)
    assert matching_complex(5).homology(ZZ).group_str(1) == "Z^6"
    h7 = matching_complex(7).homology(ZZ)
    assert h7.group_str(1) == "Z/3"
    assert h7.group_str(2) == "Z^20"
    assert matching_complex(7).homology(GF(3)).dim(1) == 1
    assert matching_complex(7).homology(QQ).dim(1) == 0


def test_barycentric_subdivision_preserves_homology():
    for c in (boundary_of_simplex(2), matching_complex(5), SimplicialComplex([(0, 1), (1, 2), (2, 0), (3,)])):
        assert c.barycentric_subdivision().homology(ZZ).as_dict() == c.homology(ZZ).as_dict()


def test_subdivision_equals_order_complex_of_face_poset():
    c = SimplicialComplex([(0, 1, 2), (2, 3)])
    sd = c.barycentric_subdivision()
    assert sd == order_complex(c.face_poset())
    # one vertex per non-empty face
    assert sd.f_vector()[0] == sum(c.f_vector())


# --- posets -----------------------------------------------------------------------------

def test_poset_validation():
    with pytest.raises(PosetError):
        FinitePoset([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(PosetError):
        FinitePoset([1, 2, 3], [(1, 2), (2, 3)])
    with pytest.raises(PosetError):
        FinitePoset([1], [(1, 5)])
    p = FinitePoset([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
    assert p.le(1, 1) and p.lt(1, 3) and not p.le(3, 1)
    assert p.maximal_elements() == [3] and p.minimal_elements() == [1]
    assert p.terminal() == 3


def test_order_complex_of_chain_and_cone_is_contractible():
    chain = FinitePoset(range(4), [(a, b) for a in range(4) for b in range(4) if a < b])
    assert order_complex(chain).homology(ZZ).is_zero_everywhere()
    cone = FinitePoset(["a", "b", "c", "top"], [(x, "top") for x in "abc"])
    assert order_complex(cone).homology(ZZ).is_zero_everywhere()


def test_order_complex_of_antichain():
    p = FinitePoset(range(4), [])
    assert order_complex(p).homology(ZZ).dim(0) == 3


def test_chains_and_maximal_chains():
    p = FinitePoset("abcd", [("a", "c"), ("b", "c"), ("c", "d"), ("a", "d"), ("b", "d")])
    assert len(p.chains()) == 4 + 5 + 2
    assert sorted(p.maximal_chains()) == [("a", "c", "d"), ("b", "c", "d")]


@pytest.mark.parametrize("m,spec", [(1, "Z2"), (2, "Z2"), (3, "Z2"), (2, "Z3"), (3, "1")])
def test_x_poset_is_a_join_of_discrete_sets(m, spec):
    g = parse_group(spec)
    x = x_poset(m, g)
    assert len(x) == m * len(g)
    h = order_complex(x).homology(ZZ)
    # join of m discrete sets of size q: a wedge of (q - 1)^m spheres of dimension m - 1
    for d in range(-1, m):
        assert h.dim(d) == ((len(g) - 1) ** m if d == m - 1 else 0)


def test_chain_poset_order():
    p = x_poset(2, parse_group("Z2"))
    sd = chain_poset(p)
    c1, c2 = ((1, 0),), ((1, 0), (2, 1))
    assert sd.le(c2, c1) and not sd.le(c1, c2)


# --- RBS lists ----------------------------------------------------------------------------

@pytest.mark.parametrize("spec", ["1", "Z2", "Z3"])
@pytest.mark.parametrize("n", range(1, 5))
def test_rbs_count(spec, n):
    g = parse_group(spec)
    xs = rbs_lists(n, 0, g)
    assert len(xs) == len(set(xs)) == (len(g) + 1) ** (n - 1)
    assert all(is_rbs_list(x, n, 0, g) for x in xs)


def test_rbs_examples():
    g = parse_group("Z2")
    lam = 1
    x = ((1, lam), (2, lam))
    assert is_rbs_list(x, 3, 0, g)
    assert not is_rbs_list(x, 3, lam, g)
    assert merge(x, [], g) == ((3, 0),)
    assert partial_sums(x, g) == ((1, lam),)
    assert rbs_to_sdx(x, g) == ((1, lam),)
    assert rbs_le(((1, 0), (1, 1), (1, 1)), x, g) is False
    assert rbs_le(((1, 1), (1, 0), (1, 1)), x, g)


def test_boundary_rbs_small():
    g = parse_group("Z2")
    b = boundary_rbs(2, 0, g)
    assert sorted(b.elements) == [((1, 0), (1, 0)), ((1, 1), (1, 1))]
    assert len(b.relation) == 2  # discrete
    assert len(boundary_rbs(1, 0, g)) == 0
    assert rbs_poset(2, 1, g).terminal() == ((2, 1),)


@pytest.mark.parametrize("spec", ["1", "Z2", "Z3"])
@pytest.mark.parametrize("n", range(2, 5))
def test_dictionary_is_an_order_isomorphism(spec, n):
    g = parse_group(spec)
    for rho in range(len(g)):
        b = boundary_rbs(n, rho, g)
        sd = chain_poset(x_poset(n - 1, g))
        image = {x: rbs_to_sdx(x, g) for x in b.elements}
        assert sorted(image.values()) == sorted(sd.elements)
        for x in b.elements:
            assert sdx_to_rbs(image[x], n, rho, g) == x
        for x, y in itertools.product(b.elements, repeat=2):
            assert b.le(x, y) == sd.le(image[x], image[y])


@given(st.sampled_from(["Z2", "Z3", "Z2xZ2"]), st.integers(2, 5), st.data())
def test_merge_is_above(spec, n, data):
    g = parse_group(spec)
    x = data.draw(st.sampled_from(rbs_lists(n, 0, g)))
    cuts = data.draw(st.sets(st.integers(1, len(x) - 1))) if len(x) > 1 else set()
    y = merge(x, cuts, g)
    assert is_rbs_list(y, n, 0, g)
    assert rbs_le(x, y, g)


def test_sdx_to_rbs_rejects_non_chains():
    g = parse_group("Z2")
    with pytest.raises(ValueError):
        sdx_to_rbs(((2, 0), (1, 0)), 3, 0, g)
    with pytest.raises(ValueError):
        sdx_to_rbs(((3, 0),), 3, 0, g)
    with pytest.raises(ValueError):
        rbs_to_sdx(((3, 0),), g)


# --- text formats ------------------------------------------------------------------------

def test_complex_text_roundtrip():
    for c in (matching_complex(5), boundary_of_simplex(3), SimplicialComplex([("a", "b"), ("c",)])):
        assert parse_complex(complex_to_text(c)) == c


def test_parse_complex_comments_and_errors():
    c = parse_complex("# a triangle boundary\n0 1\n1 2  # edge\n\n2 0\n")
    assert c.homology(ZZ).dim(1) == 1
    with pytest.raises(ValueError):
        parse_complex("1 1\n")


def test_poset_text_roundtrip():
    p = x_poset(2, parse_group("Z3"))
    q = parse_poset(poset_to_text(p))
    assert order_complex(q).homology(ZZ).as_dict() == order_complex(p).homology(ZZ).as_dict()
    assert len(q.relation) == len(p.relation)


def test_parse_poset_errors():
    with pytest.raises(ValueError):
        parse_poset("element a\nless a b\n")
    with pytest.raises(PosetError):
        parse_poset("element a\nelement b\nle a b\nle b a\n")
