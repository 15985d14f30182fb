"""Growth operations and staged construction of both graph families.

A stage-i graph is produced from the base graph (a cycle C_n or a wheel
W_n) by i rounds of: (1) replace every edge with a path of m edges, then
(2) attach a fresh copy of the base graph at every vertex that existed
before step (1).  A wheel attaches by one of its rim vertices, so the
host gains degree 3; a cycle attaches by one cycle vertex (host gains 2).

Vertex ids are assigned in a fixed documented order (path interiors in
ascending edge order, then fresh copies in ascending host order, rim
before hub) so that repeated builds are byte-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BadParameterError, InvalidVertexSetError, SizeCapError
from .graph import Graph, VertexRole
from .params import Family, FractalParams

DEFAULT_MAX_VERTICES = 10**6
MAX_VERTICES_ENV = "FRACTREE_MAX_VERTICES"


def _max_vertices(cap=None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(MAX_VERTICES_ENV)
    return int(env) if env else DEFAULT_MAX_VERTICES


def base(family: Family, n: int) -> Graph:
    """The stage-0 graph: C_n, or W_n (rim cycle plus hub with n spokes)."""
    if not isinstance(n, int) or n < 3:
        raise BadParameterError(f"base graph needs n >= 3, got {n!r}")
    family = Family(family)
    g = Graph()
    rim = [g.add_vertex(VertexRole.ORIGINAL_BASE, 0) for _ in range(n)]
    for k in range(n):
        g.add_edge(rim[k], rim[(k + 1) % n])
    if family is Family.WHEEL:
        hub = g.add_vertex(VertexRole.BASE_HUB, 0)
        for v in rim:
            g.add_edge(hub, v)
    return g.freeze()


def ept(g: Graph, m: int, birth: int | None = None) -> Graph:
    """Replace every edge with a path of length m (m-1 new interior vertices).

    Original vertex ids are preserved; interior ids are appended in
    ascending edge order, walking each path from its smaller endpoint.
    """
    if not isinstance(m, int) or m < 2:
        raise BadParameterError(f"path length m must be >= 2, got {m!r}")
    if birth is None:
        birth = max((info.birth for info in g.vertices), default=0) + 1
    out = Graph()
    for info in g.vertices:
        out.add_vertex(info.role, info.birth)
    for u, v in g.edges():
        prev = u
        for _ in range(m - 1):
            w = out.add_vertex(VertexRole.PATH_INTERIOR, birth)
            out.add_edge(prev, w)
            prev = w
        out.add_edge(prev, v)
    return out.freeze()


def glv(g: Graph, family: Family, n: int, eligible, birth: int | None = None) -> Graph:
    """Attach a fresh base graph at each eligible vertex.

    The host plays one cycle vertex of a fresh C_n, or one rim vertex of a
    fresh W_n.  Fresh ids are appended per host in ascending host order:
    rim vertices in rim-cycle order starting next to the host, hub last.
    """
    if not isinstance(n, int) or n < 3:
        raise BadParameterError(f"attachment needs n >= 3, got {n!r}")
    family = Family(family)
    eligible = sorted(set(eligible))
    if eligible and not (0 <= eligible[0] and eligible[-1] < g.vertex_count):
        raise InvalidVertexSetError(f"eligible set {eligible} not within graph")
    if birth is None:
        birth = max((info.birth for info in g.vertices), default=0) + 1
    out = Graph()
    for info in g.vertices:
        out.add_vertex(info.role, info.birth)
    for u, v in g.edges():
        out.add_edge(u, v)
    for host in eligible:
        rim = [out.add_vertex(VertexRole.FRESH_RIM, birth) for _ in range(n - 1)]
        cycle = [host] + rim
        for k in range(n):
            out.add_edge(cycle[k], cycle[(k + 1) % n])
        if family is Family.WHEEL:
            hub = out.add_vertex(VertexRole.FRESH_HUB, birth)
            for v in cycle:
                out.add_edge(hub, v)
    return out.freeze()


def build(params: FractalParams, max_vertices: int | None = None) -> Graph:
    """Construct the stage-i graph for the given parameters.

    The predicted vertex count is checked against the cap (default 10^6,
    overridable via the FRACTREE_MAX_VERTICES environment variable) before
    any construction happens.
    """
    from .sequences import size_sequences

    cap = _max_vertices(max_vertices)
    seq = size_sequences(params, params.i + 1)
    if seq.u[params.i + 1] > cap:
        raise SizeCapError(
            f"stage {params.i} graph would have {seq.u[params.i + 1]} vertices, cap is {cap}"
        )
    g = base(params.family, params.n)
    for stage in range(1, params.i + 1):
        pre = list(range(g.vertex_count))
        g = ept(g, params.m, birth=stage)
        g = glv(g, params.family, params.n, pre, birth=stage)
    g.params = params
    assert g.vertex_count == seq.u[params.i + 1]
    assert g.edge_count == seq.e[params.i + 1]
    return g


@dataclass(frozen=True)
class CopyCensus:
    """Predicted self-similar composition of a stage-i graph.

    ``stage_counts[t]`` is the number of embedded stage-t copies for
    t < i; ``central`` is the block signature of the central graph (the
    base graph after i edge-path rounds).
    """

    params: FractalParams
    stage_counts: dict
    central: tuple


def copy_census(params: FractalParams) -> CopyCensus:
    """Copy counts per stage plus the central-graph descriptor.

    The count of stage-t copies is driven by the number of unattached
    path-interior vertices of the central graph two rounds back: c(m-1)
    m^(i-t-2) of them for t <= i-2, where c is the base edge count per
    original vertex slot (n for cycles, 2n for wheels), and n (cycle) or
    n+1 (wheel) top-level copies at t = i-1.
    """
    n, m, i = params.n, params.m, params.i
    if i < 1:
        raise BadParameterError("copy census needs stage i >= 1")
    counts = {}
    if params.family is Family.CYCLE:
        counts[i - 1] = n
        edge_rate = n
    else:
        counts[i - 1] = n + 1
        edge_rate = 2 * n
    for t in range(i - 2, -1, -1):
        counts[t] = edge_rate * (m - 1) * m ** (i - t - 2)
    if params.family is Family.CYCLE:
        central = ("cycle", n * m**i)
    else:
        central = ("wheel", n, m**i)
    return CopyCensus(params, counts, central)


def predicted_block_multiset(params: FractalParams) -> dict:
    """Expected multiset of block signatures for the built stage-i graph.

    The age-k layer contributes u_{i-k} copies of the base graph after k
    edge-path rounds: a cycle of length n*m^k, or a wheel with uniform
    path length m^k.
    """
    from .sequences import size_sequences

    n, m, i = params.n, params.m, params.i
    u = size_sequences(params, i).u
    out = {}
    for k in range(i + 1):
        if params.family is Family.CYCLE:
            key = ("cycle", n * m**k)
        else:
            key = ("wheel", n, m**k)
        out[key] = out.get(key, 0) + u[i - k]
    return out


def unfold_census_block_multiset(params: FractalParams) -> dict:
    """Expand the copy census recursively into a full block multiset.

    Independent cross-check route: must agree with
    :func:`predicted_block_multiset` and with the structural decomposition
    of the built graph.
    """
    if params.i == 0:
        if params.family is Family.CYCLE:
            return {("cycle", params.n): 1}
        return {("wheel", params.n, 1): 1}
    census = copy_census(params)
    out = {census.central: 1}
    for t, count in census.stage_counts.items():
        for key, mult in unfold_census_block_multiset(params.with_stage(t)).items():
            out[key] = out.get(key, 0) + count * mult
    return out
