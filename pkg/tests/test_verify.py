from math import comb

import pytest

from ramseytower import reference
from ramseytower.base import restrict
from ramseytower.chain import LevelChain
from ramseytower.errors import EqualVertices, TooFewVertices
from ramseytower.sampling import SampleSpec, sample_vertices
from ramseytower.step import color_space_bound, tower
from ramseytower.verify import census, verify_pq


class ConstantColoring:
    def __init__(self, k):
        self.k = k

    def __call__(self, *edge):
        return "X"


def test_chi2_43_on_all_six(chain42):
    verts = restrict(chain42, 6)
    rep = verify_pq(tower(chain42, 2), verts, 4, 3)
    assert rep.cliques_checked == 15
    assert rep.violations == [] and rep.violation_count == 0
    assert rep.min_colors_seen >= 3 and rep.passed


def test_p_equals_k_single_color_always_passes(chain42):
    verts = sample_vertices(chain42, 3, SampleSpec("first-n", 10))
    rep = verify_pq(tower(chain42, 3), verts, 3, 1)
    assert rep.passed and rep.min_colors_seen == 1 and rep.cliques_checked == comb(10, 3)


def test_constant_coloring_violates_everywhere(chain42):
    verts = sample_vertices(chain42, 3, SampleSpec("first-n", 9))
    rep = verify_pq(ConstantColoring(3), verts, 4, 2, violation_cap=5)
    assert rep.violation_count == rep.cliques_checked == comb(9, 4)
    assert rep.min_colors_seen == 1
    assert len(rep.violations) == 5
    # first witnesses in lexicographic order of the clique
    assert rep.violations[0][0] == verts[:4]
    assert rep.violations[0][1] == ["X"] * 4
    assert rep.violations[1][0] == verts[:3] + [verts[4]]


def test_violations_agree_with_naive_loop(chain42):
    # (4,3) is not promised for chi_3, so this exercises real violation lists
    verts = sample_vertices(chain42, 3, SampleSpec("first-n", 12))
    col = tower(chain42, 3)
    rep = verify_pq(col, verts, 4, 3, violation_cap=10**6)
    checked, low, bad = reference.verify_pq(lambda e: str(col(*e)), verts, 3, 4, 3)
    assert rep.cliques_checked == checked and rep.min_colors_seen == low
    assert rep.violation_count == len(bad) > 0
    assert [tuple(verts.index(v) for v in clique) for clique, _ in rep.violations] == bad


def test_oracle_cross_check_chi2(chain42):
    verts = restrict(chain42, 6)
    fn = lambda e: reference.chi2_string(4, e[0].elements, e[1].elements)
    for p, q in [(3, 2), (4, 3), (4, 4), (5, 5), (3, 3)]:
        rep = verify_pq(tower(chain42, 2), verts, p, q, violation_cap=10**6)
        checked, low, bad = reference.verify_pq(fn, verts, 2, p, q)
        assert (rep.cliques_checked, rep.min_colors_seen, rep.violation_count) == (checked, low, len(bad))


def test_monotone_subsumption(chain42):
    verts = sample_vertices(chain42, 4, SampleSpec("random-dense", 14, seed=2))
    col = tower(chain42, 4)
    rep = verify_pq(col, verts, 6, 3)
    assert rep.passed
    for q in (1, 2):
        assert verify_pq(col, verts, 6, q).passed


def test_workers_do_not_change_report(chain42):
    verts = sample_vertices(chain42, 3, SampleSpec("first-n", 20))
    col = tower(chain42, 3)
    one = verify_pq(col, verts, 5, 4, workers=1, violation_cap=7)
    many = verify_pq(col, verts, 5, 4, workers=3, violation_cap=7)
    assert one == many
    assert one.violation_count > 7 and len(one.violations) == 7


def test_input_order_irrelevant(chain42):
    verts = sample_vertices(chain42, 3, SampleSpec("first-n", 12))
    col = tower(chain42, 3)
    assert verify_pq(col, verts, 4, 2) == verify_pq(col, verts[::-1], 4, 2)


def test_errors(chain42):
    verts = restrict(chain42, 3)
    with pytest.raises(TooFewVertices):
        verify_pq(tower(chain42, 2), verts, 4, 3)
    with pytest.raises(EqualVertices):
        verify_pq(tower(chain42, 2), verts + verts[:1], 3, 2)


def test_census_chi2_all_pairs(chain42):
    c = census(tower(chain42, 2), restrict(chain42, 6))
    assert sum(c.values()) == 15
    assert len(c) <= 256


def test_census_single_edge(chain42):
    verts = sample_vertices(chain42, 4, SampleSpec("first-n", 4))
    c = census(tower(chain42, 4), verts)
    assert list(c.values()) == [1]


def test_census_chi3_full(chain42):
    verts = sample_vertices(chain42, 3, SampleSpec("first-n", 64))
    c = census(tower(chain42, 3), verts)
    assert sum(c.values()) == comb(64, 3)
    assert len(c) <= color_space_bound(chain42, 3) == 512
