"""Exact-cover geometry reconstruction and zero-sum weighting experiments."""

import random
from fractions import Fraction

import pytest

from pg552 import cliques as cl
from pg552 import construction as con
from pg552 import geometric_search as gs
from pg552 import graphs as gr
from pg552 import incidence as inc
from pg552 import symmetry as sym
from pg552.bits import bits, mask_of


def test_exact_cover_knuth_example():
    # the classic 7-column instance with the unique solution {0, 3, 4}
    rows = [
        mask_of([2, 4, 5]),
        mask_of([0, 3, 6]),
        mask_of([1, 2, 5]),
        mask_of([0, 3]),
        mask_of([1, 6]),
        mask_of([3, 4, 6]),
    ]
    assert gs._exact_covers(7, tuple(rows)) == [(0, 3, 4)]


def test_exact_cover_no_solution():
    assert gs._exact_covers(3, (mask_of([0, 1]), mask_of([1, 2]))) == []


def test_edge_partition_k6_plus_isolated():
    k6 = mask_of(range(6))
    adj = [0] * 81
    for i in range(6):
        adj[i] = k6 & ~(1 << i)
    g = gr.Graph(81, tuple(adj))
    assert gs.edge_clique_partitions(g) == [(k6,)]


def test_cover_instance_edge_masks(point_graph_vls):
    inst = gs.CoverInstance.from_graph(point_graph_vls)
    assert len(inst.edges) == 1215
    assert len(inst.candidates) == 162
    assert all(m.bit_count() == 15 for m in inst.candidate_edge_masks)


def test_all_geometries_on_vls(vls, point_graph_vls):
    sols = gs.all_geometries_on(point_graph_vls)
    assert len(sols) == 2  # brute-forced count, kept as a regression value
    line_sets = [s.lines for s in sols]
    assert vls.lines in line_sets
    assert tuple(con.negative_lines(vls)) in line_sets
    for s in sols:
        assert sym.is_isomorphic(s, vls)


def test_all_geometries_on_new(new, point_graph_new):
    sols = gs.all_geometries_on(point_graph_new)
    assert len(sols) == 1  # brute-forced count, kept as a regression value
    assert sols[0].lines == new.lines
    assert sym.is_isomorphic(sols[0], new)


def test_weighting_requires_zero_sum():
    with pytest.raises(ValueError):
        gs.Weighting((Fraction(1),) * 3)


def test_star_weighting_counts(vls, new):
    for g in (vls, new):
        w = gs.star_weighting(g, 0)
        assert sum(w.weights) == 0
        count, nonneg = gs.count_nonnegative_lines(g, w)
        assert count == 6
        assert set(bits(nonneg)) == set(g.lines_through(0))


def test_star_weighting_line_sums(vls):
    w = gs.star_weighting(vls, 0)
    for i, m in enumerate(vls.lines):
        expect = Fraction(75) if m & 1 else Fraction(-6)
        assert w.line_sum(m) == expect


def test_all_zero_weighting(vls):
    w = gs.Weighting((Fraction(0),) * 81)
    count, _ = gs.count_nonnegative_lines(vls, w)
    assert count == 81


def test_negation_inequality(vls):
    rng = random.Random(17)
    for _ in range(5):
        vals = [Fraction(rng.randrange(-9, 10)) for _ in range(80)]
        vals.append(-sum(vals))
        w = gs.Weighting(tuple(vals))
        neg = gs.Weighting(tuple(-x for x in vals))
        c1, _ = gs.count_nonnegative_lines(vls, w)
        c2, _ = gs.count_nonnegative_lines(vls, neg)
        assert c1 + c2 >= 81  # lines summing to exactly 0 are counted twice


def test_scaling_invariance(vls):
    w = gs.star_weighting(vls, 3)
    scaled = gs.Weighting(tuple(Fraction(7, 5) * x for x in w.weights))
    assert gs.count_nonnegative_lines(vls, w) == gs.count_nonnegative_lines(vls, scaled)


def _first_non_star(g):
    rep = cl.max_cliques(inc.line_graph(g))
    _, non_stars = cl.classify_line_cliques(g, rep.cliques_of_size_6)
    return non_stars


def test_mms_rejects_star(vls):
    rep = cl.max_cliques(inc.line_graph(vls))
    stars, _ = cl.classify_line_cliques(vls, rep.cliques_of_size_6)
    with pytest.raises(ValueError):
        gs.mms_counterexample_search(vls, stars[0])


def test_mms_witness_vls(vls):
    non_stars = _first_non_star(vls)
    w = gs.mms_counterexample_search(vls, non_stars[0])
    assert w is not None
    assert sum(w.weights) == 0
    count, nonneg = gs.count_nonnegative_lines(vls, w)
    assert count <= 6
    star_masks = {vls.pencil_mask(p) for p in range(81)}
    assert nonneg not in star_masks
    # this witness pins the 6 nonnegative lines to the chosen clique itself
    assert nonneg == non_stars[0]


def test_mms_witness_new(new):
    non_stars = _first_non_star(new)
    assert len(non_stars) == 27
    w = gs.mms_counterexample_search(new, non_stars[0])
    assert w is not None
    count, nonneg = gs.count_nonnegative_lines(new, w)
    assert count <= 6
    assert nonneg not in {new.pencil_mask(p) for p in range(81)}


def test_mms_deterministic(vls):
    non_stars = _first_non_star(vls)
    w1 = gs.mms_counterexample_search(vls, non_stars[0])
    w2 = gs.mms_counterexample_search(vls, non_stars[0])
    assert w1.weights == w2.weights


def test_mms_exhausted_reports_none(vls):
    non_stars = _first_non_star(vls)
    assert gs.mms_counterexample_search(vls, non_stars[0], bound=0) is None
