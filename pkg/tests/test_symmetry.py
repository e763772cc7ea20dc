"""Canonical labeling, automorphism groups, and the stabilizer chain.

The engine is cross-checked against brute-force oracles on small inputs:
automorphism counts by enumerating all vertex permutations, and group
orders by closing the generator set under composition.
"""

import itertools
import random

import pytest

from pg552 import construction as con
from pg552 import gf3space as gf3
from pg552 import graphs as gr
from pg552 import incidence as inc
from pg552 import symmetry as sym
from pg552.bits import bits, mask_of


def test_compose_and_inverse():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert sym.compose(p, q) == (2, 1, 0)
    assert sym.compose(p, sym.inverse(p)) == (0, 1, 2)
    assert sym.permute_mask(0b011, p) == 0b110


# --- stabilizer chain -------------------------------------------------------


def brute_order(degree, gens):
    elems = {tuple(range(degree))}
    frontier = list(elems)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = sym.compose(e, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(elems)


def test_group_s3():
    g = sym.PermutationGroup(3, [(1, 0, 2), (0, 2, 1)])
    assert g.order() == 6
    assert g.is_transitive()
    assert g.contains((2, 1, 0))
    with pytest.raises(ValueError):
        g.add((0, 1))


def test_group_cyclic():
    g = sym.PermutationGroup(5, [(1, 2, 3, 4, 0)])
    assert g.order() == 5
    assert not g.contains((1, 0, 2, 3, 4))


def test_group_order_against_brute_force():
    rng = random.Random(31)
    for _ in range(20):
        degree = rng.randrange(2, 7)
        gens = []
        for _ in range(rng.randrange(1, 3)):
            p = list(range(degree))
            rng.shuffle(p)
            gens.append(tuple(p))
        grp = sym.PermutationGroup(degree, gens)
        assert grp.order() == brute_order(degree, gens)


def test_group_two_bases_agree():
    rng = random.Random(13)
    for _ in range(10):
        degree = rng.randrange(3, 8)
        p = list(range(degree))
        rng.shuffle(p)
        q = list(range(degree))
        rng.shuffle(q)
        gens = [tuple(p), tuple(q)]
        o1 = sym.PermutationGroup(degree, gens, base=tuple(range(degree))).order()
        o2 = sym.PermutationGroup(degree, gens, base=tuple(reversed(range(degree)))).order()
        assert o1 == o2 == brute_order(degree, gens)


def test_orbits_and_stabilizer():
    # <(0 1), (2 3 4)> on 5 points
    g = sym.PermutationGroup(5, [(1, 0, 2, 3, 4), (0, 1, 3, 4, 2)])
    assert g.orbits() == [[0, 1], [2, 3, 4]]
    assert not g.is_transitive()
    assert g.order() == 6
    assert g.stabilizer_order(0) == 3
    assert g.stabilizer_order(2) == 2


def test_prefix_stabilizer_gens():
    g = sym.PermutationGroup(4, [(1, 2, 3, 0)], base=(0,))
    fixing_zero = g.prefix_stabilizer_gens(1)
    for p in fixing_zero:
        assert p[0] == 0


# --- refinement and canonical forms ----------------------------------------


def is_equitable(adj, cells):
    for a in cells:
        for b in cells:
            wb = mask_of(b)
            counts = {(adj[v] & wb).bit_count() for v in a}
            if len(counts) != 1:
                return False
    return True


def test_refine_reaches_equitable_partition():
    rng = random.Random(4)
    for _ in range(20):
        n = rng.randrange(2, 12)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        cells = [tuple(range(n))]
        out = sym.refine(adj, cells, [mask_of(range(n))])
        assert sorted(v for c in out for v in c) == list(range(n))
        assert is_equitable(adj, out)


def test_canonical_form_c5_group():
    c5 = gr.Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    cf = sym.canonical_form(sym.ColoredGraph.from_graph(c5))
    assert cf.group.order() == 10  # dihedral


def test_canonical_form_relabel_stable():
    rng = random.Random(8)
    for _ in range(5):
        n = rng.randrange(2, 14)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
        ]
        g = gr.Graph.from_edges(n, edges)
        cert = sym.canonical_form(sym.ColoredGraph.from_graph(g)).certificate
        perm = list(range(n))
        rng.shuffle(perm)
        adj = [0] * n
        for i in range(n):
            adj[perm[i]] = sym.permute_mask(g.adj[i], tuple(perm))
        cert2 = sym.canonical_form(
            sym.ColoredGraph.from_graph(gr.Graph(n, tuple(adj)))
        ).certificate
        assert cert == cert2


def test_canonical_form_distinguishes_same_degree_graphs():
    c6 = gr.Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    kk = gr.Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    f1 = sym.canonical_form(sym.ColoredGraph.from_graph(c6))
    f2 = sym.canonical_form(sym.ColoredGraph.from_graph(kk))
    assert f1.certificate != f2.certificate


def test_canonical_form_respects_colors():
    # a path 0-1-2; coloring the middle vs an end differently changes the class
    path = gr.Graph.from_edges(3, [(0, 1), (1, 2)])
    f_mid = sym.canonical_form(sym.ColoredGraph(3, path.adj, (0, 1, 0)))
    f_end = sym.canonical_form(sym.ColoredGraph(3, path.adj, (1, 0, 0)))
    assert f_mid.certificate != f_end.certificate
    assert f_mid.group.order() == 2
    assert f_end.group.order() == 1


def brute_aut_order(g):
    count = 0
    for perm in itertools.permutations(range(g.n)):
        if all(
            sym.permute_mask(g.adj[v], perm) == g.adj[perm[v]] for v in range(g.n)
        ):
            count += 1
    return count


def test_aut_graph_against_brute_force():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(1, 8)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = gr.Graph.from_edges(n, edges)
        assert sym.aut_graph(g).order() == brute_aut_order(g)


def test_aut_single_line_on_three_points():
    g = inc.IncidenceStructure(3, [0b011])
    grp = sym.aut_incidence(g)
    assert grp.order() == 2  # swap the two points on the line, fix the third


def test_generators_preserve_line_set(aut_vls, vls, aut_new, new):
    for group, g in [(aut_vls, vls), (aut_new, new)]:
        for p in group.generators:
            sym.induced_line_permutation(g, p)  # raises if a line image is missing


def test_induced_line_permutation_rejects_non_automorphism(vls):
    transposition = tuple([1, 0] + list(range(2, 81)))
    with pytest.raises(ValueError):
        sym.induced_line_permutation(vls, transposition)


def test_is_isomorphic_relabeled(vls):
    rng = random.Random(21)
    perm = list(range(81))
    rng.shuffle(perm)
    assert sym.is_isomorphic(vls, sym.relabel_incidence(vls, tuple(perm)))


def test_not_isomorphic(vls, new):
    assert not sym.is_isomorphic(vls, new)


def test_self_dual_with_witness(vls):
    ok, witness = sym.is_self_dual(vls)
    assert ok
    assert witness is not None
    # the witness maps g-points to dual-points (= line indices of g) and
    # g-lines to dual-lines (= point pencils), preserving incidence into the
    # dual, i.e. reversing it in g
    d = inc.dual(vls)
    for p in range(81):
        assert witness[p] < 81
    for j in range(81):
        assert witness[81 + j] >= 81
    for j, m in enumerate(vls.lines):
        dual_line = d.lines[witness[81 + j] - 81]
        for p in bits(m):
            assert dual_line >> witness[p] & 1


def test_translation_checks(vls, new):
    full = gf3.span(gf3.UNIT)
    assert sym.translation_check(new, con.subspace_n0())
    assert sym.translation_check(vls, full)
    assert not sym.translation_check(new, full)


def test_aut_vls_point_transitive(aut_vls):
    # all 81 translations are automorphisms, so one point orbit
    assert aut_vls.is_transitive()
    assert [len(o) for o in aut_vls.orbits()] == [81]


def test_colored_incidence_graph_shape(vls):
    cg = sym.colored_incidence_graph(vls)
    assert cg.n == 162
    assert cg.colors == (0,) * 81 + (1,) * 81
    for j, m in enumerate(vls.lines):
        for p in bits(m):
            assert cg.adj[p] >> (81 + j) & 1
