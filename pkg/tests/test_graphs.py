"""Graph type, SRG certification, local configurations, small isomorphism."""

import itertools

import pytest

from pg552 import gf3space as gf3
from pg552 import construction as con
from pg552 import graphs as gr
from pg552.bits import bits


def cycle(n):
    return gr.Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_rejects_asymmetric():
    with pytest.raises(ValueError):
        gr.Graph(2, (0b10, 0b00))


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError):
        gr.Graph.from_edges(2, [(0, 0)])


def test_graph_rejects_out_of_range():
    with pytest.raises(ValueError):
        gr.Graph(2, (0b100, 0b001))


def test_srg_c5():
    p = gr.srg_check(cycle(5))
    assert (p.v, p.k, p.lam, p.mu) == (5, 2, 0, 1)
    assert p.feasibility_identity()


def test_srg_petersen():
    # Kneser graph K(5,2): vertices are 2-subsets of {0..4}, disjoint ones adjacent
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, a in enumerate(pairs)
        for j, b in enumerate(pairs)
        if i < j and not set(a) & set(b)
    ]
    p = gr.srg_check(gr.Graph.from_edges(10, edges))
    assert (p.v, p.k, p.lam, p.mu) == (10, 3, 0, 1)


def test_srg_complete_graph_flag():
    p = gr.srg_check(gr.complete_graph(4))
    assert (p.v, p.k, p.lam, p.mu) == (4, 3, 2, 0)
    assert p.complete and not p.empty


def test_srg_empty_graph_flag():
    p = gr.srg_check(gr.Graph(3, (0, 0, 0)))
    assert (p.v, p.k, p.lam, p.mu) == (3, 0, 0, 0)
    assert p.empty and not p.complete


def test_srg_violation_not_regular():
    path = gr.Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(gr.SrgViolation) as e:
        gr.srg_check(path)
    assert e.value.reason == "not regular"


def test_srg_violation_mu_with_witness():
    with pytest.raises(gr.SrgViolation) as e:
        gr.srg_check(cycle(6))
    assert e.value.reason == "mu not constant"
    assert e.value.pair == (0, 3)
    assert e.value.count == 0


def test_common_neighbors():
    g = gr.complete_graph(4)
    assert gr.common_neighbors(g, 0, 1) == 0b1100
    with pytest.raises(ValueError):
        gr.common_neighbors(g, 2, 2)


def test_common_neighbors_in_point_graph(point_graph_vls):
    # lambda = 9 for collinear pairs, mu = 12 otherwise
    g = point_graph_vls
    assert gr.common_neighbors(g, 0, gf3.encode(E1)).bit_count() == 9
    non_neighbor = next(y for y in range(1, 81) if not g.adj[0] >> y & 1)
    assert gr.common_neighbors(g, 0, non_neighbor).bit_count() == 12


def test_induced_subgraph():
    g = cycle(5)
    sub = gr.induced_subgraph(g, [0, 1, 2])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_isomorphic_small_basics():
    k4 = gr.complete_graph(4)
    assert gr.isomorphic_small(k4, k4)
    star = gr.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not gr.isomorphic_small(k4, star)


def test_isomorphic_small_same_degree_sequence():
    c6 = cycle(6)
    two_triangles = gr.Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    )
    assert not gr.isomorphic_small(c6, two_triangles)


def test_isomorphic_small_relabeled_cycle():
    c5 = cycle(5)
    relabeled = gr.Graph.from_edges(5, [(3, 0), (0, 4), (4, 1), (1, 2), (2, 3)])
    assert gr.isomorphic_small(c5, relabeled)


def test_isomorphic_small_size_limit():
    with pytest.raises(ValueError):
        gr.isomorphic_small(gr.Graph(13, (0,) * 13), gr.Graph(13, (0,) * 13))


# --- local configurations -------------------------------------------------

E1, E2, E3, E4 = gf3.UNIT


def _expected_abz():
    a = {gf3.encode(v) for v in (E2, E3, E4, (2, 2, 2, 2))}
    b = {
        gf3.encode(gf3.vec_sub(E1, E2)),
        gf3.encode(gf3.vec_sub(E1, E3)),
        gf3.encode(gf3.vec_sub(E1, E4)),
        gf3.encode(gf3.vec_add(gf3.vec_neg(E1), gf3.vec_add(E2, gf3.vec_add(E3, E4)))),
    }
    return a, b, gf3.encode(gf3.vec_neg(E1))


def two_k4_plus_isolated():
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(4 + i, 4 + j) for i in range(4) for j in range(i + 1, 4)]
    return gr.Graph.from_edges(9, edges)


def k4_plus_star_plus_isolated():
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(4, 5), (4, 6), (4, 7)]
    return gr.Graph.from_edges(9, edges)


def test_local_configuration_vls(vls, point_graph_vls):
    cfg = gr.local_configuration(vls, 0, gf3.encode(E1))
    a, b, z = _expected_abz()
    assert set(bits(cfg.a_mask)) == a
    assert set(bits(cfg.b_mask)) == b
    assert cfg.z == z
    assert cfg.induced.edge_count() == 12
    assert gr.isomorphic_small(cfg.induced, two_k4_plus_isolated())
    # A, B and z partition the common neighbourhood
    commons = gr.common_neighbors(point_graph_vls, 0, gf3.encode(E1))
    assert cfg.a_mask | cfg.b_mask | (1 << cfg.z) == commons
    assert cfg.a_mask.bit_count() == cfg.b_mask.bit_count() == 4


def test_local_configuration_new(new):
    cfg = gr.local_configuration(new, 0, gf3.encode(E1))
    a, b, z = _expected_abz()
    assert set(bits(cfg.a_mask)) == a
    assert set(bits(cfg.b_mask)) == b
    assert cfg.z == z
    assert cfg.induced.edge_count() == 9
    assert gr.isomorphic_small(cfg.induced, k4_plus_star_plus_isolated())


def test_local_configurations_not_isomorphic(vls, new):
    c1 = gr.local_configuration(vls, 0, 1)
    c2 = gr.local_configuration(new, 0, 1)
    assert not gr.isomorphic_small(c1.induced, c2.induced)


def test_local_configuration_rejects_non_collinear(vls):
    from pg552.incidence import point_graph

    pg = point_graph(vls)
    y = next(y for y in range(1, 81) if not pg.adj[0] >> y & 1)
    with pytest.raises(ValueError):
        gr.local_configuration(vls, 0, y)


def test_local_edge_list_matches_induced(vls):
    cfg = gr.local_configuration(vls, 0, 1)
    assert len(cfg.edge_list) == 12
    verts = set(cfg.vertices)
    for u, v in cfg.edge_list:
        assert u in verts and v in verts
