import itertools
import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.spatial import ConvexHull

from pfhull.core import (
    edge_graph,
    enumerate_parking_functions,
    facet_system,
    is_parking_function,
    layer_of,
    membership,
    vertex_count,
    vertex_neighbors,
    vertices,
)
from pfhull.errors import ContractError, DegenerateDimensionError
from pfhull.faces import affine_dimension


def parking_by_counting(a):
    """At least j entries are <= j, for every j (equivalent definition)."""
    n = len(a)
    return all(sum(1 for x in a if x <= j) >= j for j in range(1, n + 1))


def tight_rank(n, v):
    fs = facet_system(n)
    normals = []
    for ineq in fs:
        if ineq.slack(v) == 0:
            row = [0] * n
            for i in ineq.support:
                row[i] = ineq.sense
            normals.append(row)
    # rank of the normals = affine dimension of {0} plus the normals
    return affine_dimension([[0] * n] + normals)


@pytest.mark.parametrize("a,expected", [
    ((1, 1, 1), True), ((2, 3, 1), True), ((2, 3, 3), False),
    ((1, 3, 3), False), ((0, 1, 1), False), ((1,), True), ((2,), False),
])
def test_is_parking_function(a, expected):
    assert is_parking_function(a) is expected


def test_enumerate_small():
    assert list(enumerate_parking_functions(1)) == [(1,)]
    assert list(enumerate_parking_functions(2)) == [(1, 1), (1, 2), (2, 1)]
    assert len(list(enumerate_parking_functions(3))) == 16


@pytest.mark.parametrize("n", range(1, 7))
def test_parking_function_count(n):
    pfs = list(enumerate_parking_functions(n))
    assert len(pfs) == (n + 1) ** (n - 1)
    assert pfs == sorted(set(pfs))
    brute = [a for a in itertools.product(range(1, n + 1), repeat=n)
             if parking_by_counting(a)]
    assert pfs == brute


@pytest.mark.parametrize("n,count", [(2, 3), (3, 7), (4, 15)])
def test_facet_system_size(n, count):
    assert len(facet_system(n)) == count


def test_facet_system_n3_layout():
    fs = facet_system(3)
    lower = [q for q in fs if q.sense < 0]
    upper = [q for q in fs if q.sense > 0]
    assert len(lower) == 3 and all(q.rhs == -1 for q in lower)
    singles = [q for q in upper if len(q.support) == 1]
    assert len(singles) == 3 and all(q.rhs == 3 for q in singles)
    full = [q for q in upper if len(q.support) == 3]
    assert len(full) == 1 and full[0].rhs == 6
    assert not any(len(q.support) == 2 for q in fs)


def test_facet_system_count_is_two_to_n_minus_one():
    for n in range(2, 11):
        fs = facet_system(n)
        assert len(fs) == 2 ** n - 1
        assert not any(len(q.support) == n - 1 and q.sense > 0 for q in fs)


def test_facet_system_rejects_point():
    with pytest.raises(DegenerateDimensionError):
        facet_system(1)


def test_membership_examples():
    assert membership((2, 2, 2), 3)
    assert not membership((3, 3, 1), 3)
    for n in range(1, 8):
        assert membership((1,) * n, n)
    assert membership(tuple(Fraction(3, 2) for _ in range(3)), 3)


def test_membership_dilation():
    assert membership((2, 2), 2, m=2)
    assert membership((2, 4), 2, m=2)
    assert not membership((1, 2), 2, m=2)
    assert not membership((3, 4), 2, m=2)


@given(st.integers(2, 6).flatmap(
    lambda n: st.lists(st.integers(0, n + 1), min_size=n, max_size=n)))
def test_membership_matches_all_subset_inequalities(x):
    n = len(x)
    assert membership(x, n) == facet_system(n).contains(x)


@given(st.integers(2, 5).flatmap(
    lambda n: st.lists(st.fractions(0, n + 1, max_denominator=7),
                       min_size=n, max_size=n)))
def test_membership_rational_points(x):
    n = len(x)
    assert membership(x, n) == facet_system(n).contains(x)


def test_vertices_small():
    assert [v.entries for v in vertices(2)] == [(1, 1), (1, 2), (2, 1)]
    assert len(list(vertices(3))) == 10
    assert len(list(vertices(4))) == 41


def test_vertex_count_formula():
    assert vertex_count(1) == 1
    assert vertex_count(3) == 10
    for n in range(1, 13):
        exact = math.factorial(n) * sum(
            Fraction(1, math.factorial(k)) for k in range(1, n + 1))
        assert exact.denominator == 1
        assert vertex_count(n) == exact.numerator
    # 8! (1/1! + ... + 1/8!) = 40320 + 20160 + ... + 1
    assert vertex_count(8) == 69281 == sum(1 for _ in vertices(8))


def test_vertex_layers_and_order():
    vs = list(vertices(4))
    assert vs == sorted(vs)
    for v in vs:
        assert v.layer == layer_of(v.entries)
        assert v.entries.count(1) == 4 - v.layer
    assert vs[0].entries == (1, 1, 1, 1) and vs[0].layer == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vertices_match_convex_hull(n):
    pts = np.array(list(enumerate_parking_functions(n)), dtype=float)
    hull = ConvexHull(pts)
    hull_vs = {tuple(int(round(c)) for c in pts[i]) for i in hull.vertices}
    assert hull_vs == {v.entries for v in vertices(n)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vertices_are_simple(n):
    for v in vertices(n):
        assert membership(v.entries, n)
        assert tight_rank(n, v.entries) == n
        assert len(facet_system(n).tight(v.entries)) == n


@pytest.mark.parametrize("n", range(1, 6))
def test_parking_functions_in_polytope(n):
    for a in enumerate_parking_functions(n):
        assert membership(a, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_lattice_points_vs_parking_functions(n):
    box = itertools.product(range(1, n + 1), repeat=n)
    pts = [x for x in box if membership(x, n)]
    extra = [x for x in pts if not is_parking_function(x)]
    if n <= 2:
        assert extra == []
    else:
        assert extra
    if n == 3:
        assert extra == [(2, 2, 2)]
    n_pf = (n + 1) ** (n - 1)
    assert len(pts) >= n_pf
    assert (len(pts) == n_pf) == (n <= 2)


def test_edge_graph_triangle():
    g = edge_graph(2)
    assert len(g.vertices) == 3 and len(g.edges) == 3
    assert all(g.degree(v.entries) == 2 for v in g.vertices)


@pytest.mark.parametrize("n,nv,ne", [(3, 10, 15), (4, 41, 82)])
def test_edge_graph_sizes(n, nv, ne):
    g = edge_graph(n)
    assert len(g.vertices) == nv and len(g.edges) == ne


@pytest.mark.parametrize("n", range(2, 8))
def test_edge_graph_regular_and_layered(n):
    g = edge_graph(n)
    assert all(g.degree(v.entries) == n for v in g.vertices)
    assert len(g.edges) == n * vertex_count(n) // 2
    layer = {v.entries: v.layer for v in g.vertices}
    assert all(abs(layer[a] - layer[b]) <= 1 for a, b in g.edges)


@pytest.mark.parametrize("n", range(2, 8))
def test_neighbor_rules_symmetric(n):
    # adjacency is built one direction at a time; the rules must agree
    for v in vertices(n):
        for u in vertex_neighbors(v.entries):
            assert v.entries in vertex_neighbors(u)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_edges_match_tight_facet_oracle(n):
    # u, v span an edge iff the facets tight at both have normals of rank n-1
    fs = facet_system(n)
    vs = [v.entries for v in vertices(n)]
    tight = {v: set(fs.tight(v)) for v in vs}
    normals = []
    for q in fs:
        row = [0] * n
        for i in q.support:
            row[i] = q.sense
        normals.append(row)
    oracle = set()
    for a, b in itertools.combinations(vs, 2):
        common = tight[a] & tight[b]
        if len(common) >= n - 1:
            rank = affine_dimension([[0] * n] + [normals[i] for i in common])
            if rank == n - 1:
                oracle.add(tuple(sorted((a, b))))
    assert oracle == set(edge_graph(n).edges)


def test_edge_graph_vertex_set_is_vertex_parking_functions():
    n = 5
    pf_vertices = {a for a in enumerate_parking_functions(n)
                   if sorted(a) in ([1] * k + list(range(k + 1, n + 1))
                                    for k in range(1, n + 1))}
    assert {v.entries for v in edge_graph(n).vertices} == pf_vertices


def test_edge_graph_rejects_point():
    with pytest.raises(DegenerateDimensionError):
        edge_graph(1)


def test_json_dumps():
    v = next(x for x in vertices(3) if x.entries == (1, 1, 3))
    assert json.loads(v.to_json()) == {"v": [1, 1, 3], "layer": 1}
    lines = list(edge_graph(2).to_json_lines())
    assert json.loads(lines[0]) == {"e": [[1, 1], [1, 2]]}


def test_layer_of_rejects_non_vertex():
    with pytest.raises(ContractError):
        layer_of((2, 2, 2))
