import itertools

import pytest
from hypothesis import given, strategies as st

from apstab.apalgebra import parse_group
from apstab.complexes import matching_complex
from apstab.exactalg import GF, QQ, ZZ, ResourceError, homology
from apstab.jwcdga import (Partition, block_decompose, build_dprime_slice, build_jw_slice,
                           closed_generator_count, dprime_homology, jw_homology, partition_formula_dim,
                           partitions, schur_dim, self_conjugate_partitions, squarefree_block,
                           verify_tensor_decomposition)


# --- oracles ----------------------------------------------------------------------

def count_ssyt(parts, m):
    """Semistandard tableaux of the given shape with entries in 1..m, by exhaustive filling."""
    cells = [(i, j) for i, row in enumerate(parts) for j in range(row)]
    count = 0
    for fill in itertools.product(range(1, m + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all((j == 0 or t[i, j - 1] <= v) and (i == 0 or t[i - 1, j] < v) for (i, j), v in t.items()):
            count += 1
    return count


def all_partitions(n):
    """Partitions of n from integer compositions, sorted and deduplicated."""
    out = set()
    for k in range(n + 1):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            out.add(tuple(sorted((b - a for a, b in zip(bounds, bounds[1:])), reverse=True)))
    return out if n else {()}


def conjugate(parts):
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0])) if parts else ()


def formula_oracle(m, n, d):
    total = 0
    for p in all_partitions(n):
        if conjugate(p) == p and sum(1 for i, x in enumerate(p, 1) if x >= i) == n - 2 * d:
            total += count_ssyt(p, m)
    return total


# --- partitions ------------------------------------------------------------------------

def test_partition_basics():
    lam = Partition((3, 1, 1))
    assert lam.size == 5 and lam.rows == 3
    assert lam.conjugate == lam and lam.is_self_conjugate and lam.diagonal == 1
    assert Partition((4, 2)).conjugate == Partition((2, 2, 1, 1))
    assert Partition((2, 0)) == Partition((2,))
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert str(Partition((2, 1))) == "(2,1)"


@pytest.mark.parametrize("n", range(8))
def test_partitions_enumeration(n):
    got = [p.parts for p in partitions(n)]
    assert len(got) == len(set(got))
    assert set(got) == all_partitions(n)
    sc = {p.parts for p in self_conjugate_partitions(n)}
    assert sc == {p for p in all_partitions(n) if conjugate(p) == p}


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(sorted(all_partitions(n)))), st.integers(1, 3))
def test_schur_dim_counts_tableaux(parts, m):
    assert schur_dim(Partition(parts), m) == count_ssyt(parts, m)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", range(7))
def test_partition_formula_oracle(m, n):
    for d in range(n // 2 + 1):
        assert partition_formula_dim(m, n, d) == formula_oracle(m, n, d)


# --- the JW cdga -------------------------------------------------------------------------

@pytest.mark.parametrize("m,n", [(1, 3), (2, 4), (3, 3), (3, 4), (2, 5)])
def test_slice_is_a_complex_and_blocks_partition_it(m, n):
    s = build_jw_slice(m, n)
    whole = s.complex()
    whole.validate()
    blocks = block_decompose(s)
    assert sum(b.size() for b in blocks) == whole.size()
    for b in blocks:
        b.complex.validate()
        assert sum(b.multiset) == n
    assert homology(whole, QQ).as_dict() == jw_homology(m, n, QQ).as_dict()


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", range(7))
def test_homology_matches_partition_formula(m, n):
    h = jw_homology(m, n, QQ)
    assert [h.dim(d) for d in range(n // 2 + 1)] == [partition_formula_dim(m, n, d) for d in range(n // 2 + 1)]


@pytest.mark.parametrize("n", range(2, 7))
def test_squarefree_block_is_suspended_matching_complex(n):
    b = squarefree_block(n, n)
    assert b.squarefree
    hb = homology(b.complex, ZZ)
    hm = matching_complex(n).homology(ZZ)
    for d in range(n // 2 + 1):
        assert hb.dim(d) == hm.dim(d - 1)
        assert hb.torsion_at(d) == hm.torsion_at(d - 1)


def test_squarefree_only_agrees_with_block():
    h = jw_homology(5, 5, ZZ, squarefree_only=True)
    assert h.as_dict() == homology(squarefree_block(5, 5).complex, ZZ).as_dict()
    with pytest.raises(ValueError):
        jw_homology(2, 3, squarefree_only=True)


def test_cap_raises():
    with pytest.raises(ResourceError):
        jw_homology(4, 6, QQ, cap=5)


def test_threads_do_not_change_result():
    assert jw_homology(3, 5, GF(3), threads=3).as_dict() == jw_homology(3, 5, GF(3)).as_dict()


# --- the D' complex -----------------------------------------------------------------------

def test_closed_generator_count():
    assert [closed_generator_count(q) for q in (1, 2, 3, 4)] == [1, 3, 6, 10]


@pytest.mark.parametrize("spec", ["1", "Z2", "Z3"])
def test_dprime_slices(spec):
    g = parse_group(spec)
    for n in range(5):
        build_dprime_slice(g, n).complex().validate()


@pytest.mark.parametrize("spec", ["1", "Z2", "Z3"])
def test_tensor_decomposition(spec):
    rep = verify_tensor_decomposition(parse_group(spec), 5)
    assert rep.agrees, rep.mismatches()
    assert rep.generators == closed_generator_count(len(parse_group(spec)))


def test_tensor_decomposition_rejects_positive_characteristic():
    with pytest.raises(ValueError):
        verify_tensor_decomposition(parse_group("Z2"), 3, GF(2))


def test_dprime_low_gradings():
    g = parse_group("Z3")
    # grading 1 is V in degree 0; grading 2 adds the closed wedge generators in degree 1
    assert dprime_homology(g, 1).dim(0) == 2
    assert dprime_homology(g, 2).dim(1) == closed_generator_count(3)
