import json

import pytest

from fractree.construct import base, build, ept
from fractree.errors import DisconnectedGraphError, InvalidVertexError
from fractree.graph import (
    Graph,
    VertexRole,
    blocks,
    degree_histogram,
    laplacian_minor,
    to_dot,
    to_edgelist_text,
    to_json_dict,
)
from fractree.params import Family, FractalParams


def _cycle(n):
    g = Graph()
    for _ in range(n):
        g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
    for k in range(n):
        g.add_edge(k, (k + 1) % n)
    return g.freeze()


def _two_triangles_sharing_vertex():
    g = Graph()
    for _ in range(5):
        g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
    for u, v in [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]:
        g.add_edge(u, v)
    return g.freeze()


class TestGraphBasics:
    def test_simple_graph_validation(self):
        g = Graph()
        g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        with pytest.raises(ValueError):
            g.add_edge(0, 0)
        g.add_edge(0, 1)
        with pytest.raises(ValueError):
            g.add_edge(1, 0)
        with pytest.raises(InvalidVertexError):
            g.add_edge(0, 7)

    def test_frozen_graph_rejects_mutation(self):
        g = _cycle(3)
        with pytest.raises(RuntimeError):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        with pytest.raises(RuntimeError):
            g.add_edge(0, 1)

    def test_neighbors_sorted(self):
        g = _two_triangles_sharing_vertex()
        assert g.neighbors(0) == (1, 2, 3, 4)
        assert g.degree(0) == 4

    def test_has_edge(self):
        g = _cycle(5)
        assert g.has_edge(0, 1) and g.has_edge(0, 4)
        assert not g.has_edge(0, 2)

    def test_edges_ascending(self):
        g = _two_triangles_sharing_vertex()
        es = list(g.edges())
        assert es == sorted(es)
        assert all(u < v for u, v in es)
        assert len(es) == g.edge_count

    def test_degree_sum_is_twice_edges(self):
        for g in (_cycle(6), _two_triangles_sharing_vertex(), base(Family.WHEEL, 5)):
            hist = degree_histogram(g)
            assert sum(hist.values()) == g.vertex_count
            assert sum(d * c for d, c in hist.items()) == 2 * g.edge_count


class TestDegreeHistogram:
    def test_cycle(self):
        assert degree_histogram(_cycle(3)) == {2: 3}

    def test_wheel(self):
        assert degree_histogram(base(Family.WHEEL, 4)) == {3: 4, 4: 1}

    def test_first_stage_graph(self):
        g = build(FractalParams(Family.CYCLE, 3, 2, 1))
        assert degree_histogram(g) == {2: 9, 4: 3}


class TestLaplacianMinor:
    def test_triangle(self):
        assert laplacian_minor(_cycle(3), 0) == [[2, -1], [-1, 2]]

    def test_single_edge(self):
        g = Graph()
        g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        g.add_edge(0, 1)
        assert laplacian_minor(g.freeze(), 1) == [[1]]

    def test_wheel_omit_hub(self):
        w4 = base(Family.WHEEL, 4)  # hub is vertex 4
        minor = laplacian_minor(w4, 4)
        assert [minor[k][k] for k in range(4)] == [3, 3, 3, 3]
        assert minor == [[3, -1, 0, -1], [-1, 3, -1, 0], [0, -1, 3, -1], [-1, 0, -1, 3]]

    def test_bad_vertex(self):
        with pytest.raises(InvalidVertexError):
            laplacian_minor(_cycle(3), 5)


class TestBlocks:
    def test_single_cycle(self):
        out = blocks(_cycle(5))
        assert len(out) == 1
        assert out[0].signature == ("cycle", 5)

    def test_two_triangles(self):
        out = blocks(_two_triangles_sharing_vertex())
        assert sorted(b.signature for b in out) == [("cycle", 3), ("cycle", 3)]

    def test_bridge_is_other(self):
        g = Graph()
        for _ in range(4):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        for u, v in [(0, 1), (1, 2), (2, 0), (2, 3)]:
            g.add_edge(u, v)
        out = blocks(g.freeze())
        assert sorted(b.signature for b in out) == [("cycle", 3), ("other",)]

    def test_theta_graph_is_other(self):
        # two vertices joined by three internally disjoint paths
        g = Graph()
        for _ in range(5):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        for u, v in [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]:
            g.add_edge(u, v)
        out = blocks(g.freeze())
        assert [b.signature for b in out] == [("other",)]

    def test_plain_wheel(self):
        out = blocks(base(Family.WHEEL, 5))
        assert [b.signature for b in out] == [("wheel", 5, 1)]

    def test_three_wheel_is_k4(self):
        out = blocks(base(Family.WHEEL, 3))
        assert [b.signature for b in out] == [("wheel", 3, 1)]

    def test_subdivided_wheel(self):
        g = ept(base(Family.WHEEL, 4), 2)
        assert [b.signature for b in blocks(g)] == [("wheel", 4, 2)]
        g = ept(ept(base(Family.WHEEL, 4), 2), 2)
        assert [b.signature for b in blocks(g)] == [("wheel", 4, 4)]

    def test_subdivided_three_wheel(self):
        # every branch vertex of a subdivided K_4 is a valid hub choice
        g = ept(base(Family.WHEEL, 3), 3)
        assert [b.signature for b in blocks(g)] == [("wheel", 3, 3)]

    def test_cube_graph_is_other(self):
        g = Graph()
        for _ in range(8):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        for u, v in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7),
                     (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]:
            g.add_edge(u, v)
        assert [b.signature for b in blocks(g.freeze())] == [("other",)]

    def test_complete_graph_k5_is_other(self):
        g = Graph()
        for _ in range(5):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        for u in range(5):
            for v in range(u + 1, 5):
                g.add_edge(u, v)
        assert [b.signature for b in blocks(g.freeze())] == [("other",)]

    def test_nonuniform_subdivision_is_other(self):
        g = Graph()
        for _ in range(6):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        # W_4 with exactly one rim edge subdivided
        for u, v in [(0, 1), (1, 2), (2, 3), (3, 5), (5, 0), (4, 0), (4, 1), (4, 2), (4, 3)]:
            g.add_edge(u, v)
        assert [b.signature for b in blocks(g.freeze())] == [("other",)]

    def test_stage_one_composition(self):
        g = build(FractalParams(Family.CYCLE, 3, 2, 1))
        assert sorted(b.signature for b in blocks(g)) == [
            ("cycle", 3), ("cycle", 3), ("cycle", 3), ("cycle", 6),
        ]

    def test_edge_partition(self):
        g = build(FractalParams(Family.WHEEL, 4, 2, 1))
        out = blocks(g)
        assert sum(len(b.edges) for b in out) == g.edge_count
        seen = set()
        for b in out:
            for e in b.edges:
                assert e not in seen
                seen.add(e)

    def test_disconnected_raises(self):
        g = Graph()
        for _ in range(4):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        g.add_edge(0, 1)
        g.add_edge(2, 3)
        with pytest.raises(DisconnectedGraphError):
            blocks(g.freeze())

    def test_large_path_no_recursion_limit(self):
        g = Graph()
        for _ in range(5000):
            g.add_vertex(VertexRole.ORIGINAL_BASE, 0)
        for v in range(4999):
            g.add_edge(v, v + 1)
        out = blocks(g.freeze())
        assert len(out) == 4999

    def test_big_built_graph_stays_simple(self):
        g = build(FractalParams(Family.CYCLE, 3, 2, 5))  # 4053 vertices
        hist = degree_histogram(g)
        assert sum(hist.values()) == g.vertex_count == 4053
        assert sum(d * c for d, c in hist.items()) == 2 * g.edge_count
        assert sum(len(b.edges) for b in blocks(g)) == g.edge_count


class TestSerialization:
    def test_edgelist_format(self):
        text = to_edgelist_text(_cycle(3))
        assert text == "0 1\n0 2\n1 2\n"

    def test_json_schema(self):
        g = build(FractalParams(Family.WHEEL, 4, 2, 0))
        d = to_json_dict(g)
        assert d["family"] == "wheel" and d["n"] == 4 and d["m"] == 2 and d["i"] == 0
        assert len(d["vertices"]) == 5 and len(d["edges"]) == 8
        assert d["vertices"][4]["role"] == "base_hub"
        assert d["edges"] == sorted(d["edges"])
        json.dumps(d)  # serializable

    def test_json_without_params(self):
        d = to_json_dict(_cycle(4))
        assert d["family"] is None

    def test_dot_output(self):
        text = to_dot(_cycle(3))
        assert text.startswith("graph G {")
        assert "0 -- 1;" in text and text.rstrip().endswith("}")

    def test_deterministic(self):
        p = FractalParams(Family.WHEEL, 5, 2, 1)
        assert to_edgelist_text(build(p)) == to_edgelist_text(build(p))
        assert to_json_dict(build(p)) == to_json_dict(build(p))
