import random
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramseytower import reference
from ramseytower.base import chi2
from ramseytower.chain import LevelChain
from ramseytower.errors import AdjacentEqual, EqualVertices, IllFormed, LevelMismatch
from ramseytower.sampling import SampleSpec, WordStream, sample_vertices
from ramseytower.step import (
    D0,
    I0,
    ColorK,
    Phi,
    Repeat,
    chi3,
    chik,
    color_space_bound,
    phi,
    phi_alphabet,
    repeat_pattern,
    sentinel_pattern_count,
    tower,
)
from ramseytower.vertex import BitVertex, index_to_bitvertex, unrank_base


def v3(bits):
    return BitVertex.dense(3, 6, bits)


def v4(*ones):
    return BitVertex.sparse(4, 64, ones)


def test_chi3_example(chain42):
    edge = [v3("000001"), v3("000010"), v3("000100")]
    expected = ColorK(3, chi2(unrank_base(chain42, 4), unrank_base(chain42, 5)), -1)
    assert chi3(chain42, edge) == expected
    assert str(expected) == "M3(M2(3,4,3,3),-1)"


def test_chi3_sign(chain42):
    # deltas (5, 1)
    c = chi3(chain42, [v3("000001"), v3("000010"), v3("100000")])
    assert c.shape == -1
    c = chi3(chain42, [v3("000000"), v3("010000"), v3("010001")])
    assert c.shape == 1


def test_chi3_permutation_invariant(chain42):
    edge = [v3("000001"), v3("000010"), v3("100000")]
    assert len({chi3(chain42, p) for p in permutations(edge)}) == 1


def test_chi3_errors(chain42):
    with pytest.raises(EqualVertices):
        chi3(chain42, [v3("000001"), v3("000001"), v3("100000")])
    with pytest.raises(LevelMismatch):
        chi3(chain42, [v4(1), v4(2), v4(3)])


def test_phi_table_cases():
    assert phi((1, 2, 3)) == I0 and str(phi((1, 2, 3, 4))) == "I0"
    assert phi((3, 2, 1)) == D0
    assert phi((3, 1, 2, 5)) == Phi("A", 2)
    assert str(phi((1, 4, 2, 3))) == "B(2,+)"
    assert str(phi((2, 4, 1, 3))) == "B(2,-)"
    assert str(phi((1, 2, 5, 3, 4))) == "B(3,+)"


def test_phi_errors():
    with pytest.raises(AdjacentEqual):
        phi((1, 1, 2))
    with pytest.raises(IllFormed):
        phi((1, 3, 1))


@pytest.mark.parametrize("k", [4, 5, 6, 7])
def test_phi_alphabet_size(k):
    alphabet = phi_alphabet(k)
    assert len(set(alphabet)) == 3 * k - 7
    # every adjacent-distinct sequence of k-1 values from a small range lands in it
    seen = set()
    for seq in product(range(1, 6), repeat=k - 1):
        if any(a == b for a, b in zip(seq, seq[1:])):
            continue
        try:
            seen.add(phi(seq))
        except IllFormed:
            continue
    assert seen <= set(alphabet)


def test_phi_alphabet_k4_is_five_case_table():
    assert [str(p) for p in phi_alphabet(4)] == ["I0", "D0", "A(2)", "B(2,+)", "B(2,-)"]


@given(st.lists(st.integers(1, 40), min_size=3, max_size=9))
def test_phi_matches_reference(seq):
    if any(a == b for a, b in zip(seq, seq[1:])):
        return
    try:
        got = str(phi(seq))
    except IllFormed:
        return
    assert got == reference.shape(seq)


def test_chik_example_local_minimum(chain42):
    edge = [v4(), v4(5), v4(3), v4(3, 4)]
    c = chik(chain42, edge)
    assert c.shape == Phi("A", 2)
    inner = chi3(chain42, [index_to_bitvertex(chain42, 4, p) for p in (3, 4, 5)])
    assert c.inner == inner
    # from-definitions oracle on explicit one-position sets
    assert str(c) == reference.color_string(4, 2, 4, [v.ones for v in edge])


def test_chik_repeat_sentinel(chain42):
    edge = [v4(), v4(2), v4(1), v4(1, 2)]
    c = chik(chain42, edge)
    assert c == ColorK(4, Repeat("aba"), Phi("A", 2))
    assert str(c) == "M4(REPEAT(aba),A(2))"


def test_chik_permutation_invariant_all_24(chain42):
    verts = sample_vertices(chain42, 4, SampleSpec("random-dense", 400, seed=3))
    rng = random.Random(2)
    for _ in range(100):
        edge = rng.sample(verts, 4)
        assert len({chik(chain42, p) for p in permutations(edge)}) == 1


def test_chik_level5_and_6_sparse():
    chain = LevelChain(4, 2)
    verts = sample_vertices(chain, 5, SampleSpec("random-sparse", 5, seed=1))
    c = chik(chain, verts)
    assert c.level == 5
    assert str(c) == reference.color_string(4, 2, 5, [v.ones for v in verts])
    six = sample_vertices(chain, 6, SampleSpec("random-sparse", 6, seed=1, max_position=2**64))
    assert chik(chain, six).level == 6


def test_repeat_pattern():
    assert repeat_pattern((2, 1, 2)) == "aba"
    assert repeat_pattern((7, 3, 7, 9)) == "abac"


def _patterns_by_brute_force(length):
    out = set()
    for seq in product(range(length), repeat=length):
        if any(a == b for a, b in zip(seq, seq[1:])):
            continue
        if len(set(seq)) == length:
            continue
        out.add(repeat_pattern(seq))
    return len(out)


@pytest.mark.parametrize("length", [1, 2, 3, 4, 5, 6])
def test_sentinel_pattern_count_matches_enumeration(length):
    assert sentinel_pattern_count(length) == _patterns_by_brute_force(length)


def test_color_space_bound(chain42):
    assert color_space_bound(chain42, 2) == 256
    assert color_space_bound(chain42, 3) == 512
    assert color_space_bound(chain42, 4) == 5 * (512 + 1) == 2565
    assert color_space_bound(chain42, 5) == 8 * (2565 + 4)


def _edges_at(chain, level, count, seed):
    rng = WordStream(seed)
    spec = "random-dense" if chain.dense_ok(level) else "random-sparse"
    pool = sample_vertices(chain, level, SampleSpec(spec, 60, seed=seed))
    out = []
    for _ in range(count):
        idx = set()
        while len(idx) < level:
            idx.add(rng.below(len(pool)))
        out.append([pool[i] for i in sorted(idx)])
    return out


@pytest.mark.parametrize("level", [4, 5])
def test_phi_never_ill_formed_on_real_edges(chain42, level):
    from ramseytower.vertex import delta_sequence, sort_edge

    for edge in _edges_at(chain42, level, 3000, seed=level):
        phi(delta_sequence(sort_edge(edge)))


@pytest.mark.parametrize("level", [3, 4, 5])
def test_memoized_matches_reference(chain42, level):
    for edge in _edges_at(chain42, level, 300, seed=10 + level):
        got = str(tower(chain42, level)(*edge))
        assert got == reference.color_string(4, 2, level, [v.ones for v in edge])


def test_projected_chi2_drops_coordinates(chain42):
    from ramseytower.step import Chi2Coloring
    full, proj = Chi2Coloring(chain42), Chi2Coloring(chain42, (1, 4))
    u, v = full.vertex(1), full.vertex(5)
    c = full(u, v)
    p = proj(u, v)
    assert (p.c1, p.c2, p.c3, p.c4) == (c.c1, None, None, c.c4)
    assert str(p) == f"M2({c.c1},_,_,{c.c4})"
    with pytest.raises(ValueError):
        Chi2Coloring(chain42, (5,))
