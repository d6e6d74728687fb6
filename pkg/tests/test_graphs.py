import numpy as np
import pytest

from coarselab import fixtures
from coarselab.errors import InvalidInputError, UnsupportedError
from coarselab.graphs import (
    MANY,
    CellFragment,
    FiniteGraph,
    LinePeriodicGraph,
    RayPeriodicGraph,
    build_finite_graph,
    components,
    count_ends,
    find_cycle,
    is_connected,
    is_forest,
    window,
)


def random_multigraph(rng, max_vertices=30, max_edges=60) -> FiniteGraph:
    n = int(rng.integers(1, max_vertices + 1))
    m = int(rng.integers(0, max_edges + 1))
    edges = [(int(rng.integers(0, n)), int(rng.integers(0, n))) for _ in range(m)]
    return FiniteGraph(n, edges)


class TestBuildFiniteGraph:
    def test_triangle(self):
        g = build_finite_graph(3, [(0, 1), (1, 2), (2, 0)])
        assert g.vertex_count == 3
        assert g.edges == [(0, 1), (1, 2), (2, 0)]

    def test_isolated_vertex(self):
        g = build_finite_graph(1, [])
        assert g.vertex_count == 1
        assert g.edges == []

    def test_self_loop_multigraph(self):
        g = build_finite_graph(2, [(0, 0)])
        assert g.degree(0) == 2
        assert g.degree(1) == 0

    def test_out_of_range_endpoint(self):
        with pytest.raises(InvalidInputError):
            build_finite_graph(2, [(0, 2)])


class TestWindow:
    def test_line_ball_radius_two(self):
        win = window(fixtures.integer_line(), (0, 0), 2)
        cells = sorted(k for k, _ in win.vertices)
        assert cells == [-2, -1, 0, 1, 2]
        boundary_cells = sorted(win.vertices[i][0] for i in win.boundary)
        assert boundary_cells == [-2, 2]
        assert len(win.edges) == 4

    def test_tree_star(self):
        win = window(fixtures.tree3(), (), 1)
        assert win.vertex_count == 4
        assert len(win.boundary) == 3
        assert win.degree(0) == 3

    def test_finite_graph_exhausted(self):
        win = window(fixtures.triangle(), 1, 5)
        assert win.vertex_count == 3
        assert win.boundary == frozenset()

    def test_interior_degree_matches_parent(self):
        for pres, base in [
            (fixtures.integer_line(), (0, 0)),
            (fixtures.ladder(), (0, 0)),
            (fixtures.tree3(), ()),
            (fixtures.lattice2d(), (0, 0)),
        ]:
            win = window(pres, base, 3)
            for i in win.interior():
                assert win.degree(i) == win.parent.degree(win.vertices[i])

    def test_negative_radius(self):
        with pytest.raises(InvalidInputError):
            window(fixtures.triangle(), 0, -1)


class TestComponents:
    def test_triangle(self):
        assert components(fixtures.triangle())[0] == 1

    def test_two_triangles(self):
        g = FiniteGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        count, labels = components(g)
        assert count == 2
        assert labels[0] == labels[2] != labels[3]

    def test_isolated(self):
        assert components(FiniteGraph(3, []))[0] == 3


class TestIsForest:
    def test_integer_line_is_tree(self):
        assert is_forest(fixtures.integer_line()).is_forest

    def test_integer_ray_is_tree(self):
        assert is_forest(fixtures.integer_ray()).is_forest

    def test_ladder_has_four_cycle(self):
        cert = is_forest(fixtures.ladder())
        assert not cert.is_forest
        assert len(cert.cycle_vertices) == 4
        _assert_cycle_valid(fixtures.ladder(), cert)

    def test_two_zero_shift_loops(self):
        pres = LinePeriodicGraph(CellFragment(1), [(0, 0, 0), (0, 0, 0)])
        cert = is_forest(pres)
        assert not cert.is_forest

    def test_rank_two_nonzero_shifts(self):
        # two independent shift lines through one vertex create cycles
        pres = LinePeriodicGraph(CellFragment(1), [(0, 0, 1), (0, 0, 2)])
        cert = is_forest(pres)
        assert not cert.is_forest
        _assert_cycle_valid(pres, cert)

    def test_ray_head_cycle(self):
        head = CellFragment(3, ((0, 1), (1, 2), (2, 0)))
        pres = RayPeriodicGraph(CellFragment(1), [(0, 0, 1)], head=head)
        cert = is_forest(pres)
        assert not cert.is_forest
        assert all(k == 0 for k, _ in cert.cycle_vertices)

    def test_window_generated_refused(self):
        with pytest.raises(UnsupportedError):
            is_forest(fixtures.tree3())

    def test_finite_against_euler_formula(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            g = random_multigraph(rng)
            cert = is_forest(g)
            euler_forest = len(g.edges) == g.vertex_count - components(g)[0]
            assert cert.is_forest == euler_forest
            if not cert.is_forest:
                _assert_cycle_valid(g, cert)

    def test_periodic_against_window_search(self):
        # quotient decision agrees with brute-force cycle search on windows
        # of radius 4 * (cell diameter)
        fixtures_list = [
            fixtures.integer_line(),
            fixtures.integer_ray(),
            fixtures.ladder(),
            LinePeriodicGraph(CellFragment(2, ((0, 1),)), [(1, 0, 1)]),
            LinePeriodicGraph(CellFragment(2), [(0, 1, 0), (1, 0, 2)]),
        ]
        for pres in fixtures_list:
            radius = 4 * max(pres.cell.diameter_bound(), pres.max_shift(), 1)
            base = (radius + 1, 0) if isinstance(pres, RayPeriodicGraph) else (0, 0)
            win = window(pres, base, radius)
            brute = find_cycle(win.vertex_count, win.edges)
            cert = is_forest(pres)
            assert cert.is_forest == (brute is None)


def _assert_cycle_valid(pres, cert):
    """The certificate cycle must consist of real edges joining consecutive
    vertices, with no vertex repeated."""
    verts, keys = cert.cycle_vertices, cert.cycle_edges
    assert len(verts) == len(keys)
    assert len(set(verts)) == len(verts)
    for i, key in enumerate(keys):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        incident = {k: (s, t) for k, s, t in pres.incident_edges(a)}
        assert key in incident
        s, t = incident[key]
        assert {s, t} == {a, b} or (a == b and s == t == a)


class TestCountEnds:
    def test_finite_has_none(self):
        assert count_ends(fixtures.triangle()) == 0

    def test_ray_has_one(self):
        assert count_ends(fixtures.integer_ray()) == 1

    def test_line_has_two(self):
        assert count_ends(fixtures.integer_line()) == 2

    def test_ladder_has_two(self):
        assert count_ends(fixtures.ladder()) == 2

    def test_tree_has_many(self):
        assert count_ends(fixtures.tree3(), max_radius=6) == MANY

    def test_lattice_has_one(self):
        assert count_ends(fixtures.lattice2d(), max_radius=6) == 1

    def test_disconnected_rejected(self):
        g = FiniteGraph(2, [])
        with pytest.raises(InvalidInputError):
            count_ends(g)
        pres = LinePeriodicGraph(CellFragment(2), [(0, 0, 1), (1, 1, 1)])
        with pytest.raises(InvalidInputError):
            count_ends(pres)


class TestConnectivity:
    def test_shift_two_cover_disconnected(self):
        pres = LinePeriodicGraph(CellFragment(1), [(0, 0, 2)])
        assert not is_connected(pres)

    def test_line_connected(self):
        assert is_connected(fixtures.integer_line())
        assert is_connected(fixtures.ladder())
