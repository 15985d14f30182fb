"""Undirected simple graphs with vertex provenance and exact queries.

Vertices carry a role (how the growth process created them) and a birth
stage.  Adjacency is kept as sorted neighbor tuples so every iteration
order, and hence every export, is deterministic.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .errors import DisconnectedGraphError, InvalidVertexError
from .params import FractalParams


class VertexRole(str, Enum):
    ORIGINAL_BASE = "original_base"
    PATH_INTERIOR = "path_interior"
    FRESH_RIM = "fresh_rim"
    FRESH_HUB = "fresh_hub"
    BASE_HUB = "base_hub"


@dataclass(frozen=True)
class VertexInfo:
    id: int
    role: VertexRole
    birth: int


class Graph:
    """Simple undirected graph; immutable once frozen.

    Vertex ids are dense 0..n-1 in creation order.  ``add_vertex`` /
    ``add_edge`` are only legal before :meth:`freeze`; all query methods
    require the frozen state.
    """

    __slots__ = ("_info", "_adj", "_frozen", "_edge_count", "params")

    def __init__(self, params: Optional[FractalParams] = None):
        self._info: list[VertexInfo] = []
        self._adj: list = []
        self._frozen = False
        self._edge_count = 0
        self.params = params

    def add_vertex(self, role: VertexRole, birth: int) -> int:
        if self._frozen:
            raise RuntimeError("graph is frozen")
        vid = len(self._info)
        self._info.append(VertexInfo(vid, role, birth))
        self._adj.append(set())
        return vid

    def add_edge(self, u: int, v: int) -> None:
        if self._frozen:
            raise RuntimeError("graph is frozen")
        n = len(self._info)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertexError(f"edge ({u},{v}) references a missing vertex")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v in self._adj[u]:
            raise ValueError(f"duplicate edge ({u},{v})")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1

    def freeze(self) -> "Graph":
        if not self._frozen:
            self._adj = [tuple(sorted(s)) for s in self._adj]
            self._frozen = True
        return self

    @property
    def vertex_count(self) -> int:
        return len(self._info)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def vertices(self) -> tuple:
        return tuple(self._info)

    def info(self, v: int) -> VertexInfo:
        self._check_vertex(v)
        return self._info[v]

    def neighbors(self, v: int) -> tuple:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        nb = self._adj[u]
        if len(self._adj[v]) < len(nb):
            nb, v = self._adj[v], u
        pos = bisect_left(nb, v)
        return pos < len(nb) and nb[pos] == v

    def edges(self) -> Iterator[tuple]:
        """All edges as (u, v) with u < v, ascending lexicographic."""
        for u in range(len(self._info)):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    def is_connected(self) -> bool:
        n = len(self._info)
        if n <= 1:
            return True
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == n

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self._info):
            raise InvalidVertexError(f"vertex {v!r} not in graph")


def degree_histogram(g: Graph) -> dict:
    """Map degree -> number of vertices with that degree."""
    return dict(Counter(len(g.neighbors(v)) for v in range(g.vertex_count)))


def laplacian_minor(g: Graph, omit: int):
    """Laplacian L = D - A with the row and column of ``omit`` removed."""
    g._check_vertex(omit)
    ids = [v for v in range(g.vertex_count) if v != omit]
    index = {v: k for k, v in enumerate(ids)}
    n = len(ids)
    rows = [[0] * n for _ in range(n)]
    for k, v in enumerate(ids):
        rows[k][k] = g.degree(v)
        for w in g.neighbors(v):
            if w != omit:
                rows[k][index[w]] = -1
    return rows


class BlockKind(str, Enum):
    CYCLE = "cycle"
    SUBDIVIDED_WHEEL = "subdivided_wheel"
    OTHER = "other"


@dataclass(frozen=True)
class Block:
    """One biconnected component, structurally classified.

    ``signature`` is ("cycle", length) for a plain cycle block,
    ("wheel", n, path_length) for a wheel on n rim vertices whose every
    edge has been replaced by a path of ``path_length`` edges
    (path_length 1 = the plain wheel), and ("other",) for anything else.
    """

    vertices: tuple
    edges: tuple
    kind: BlockKind
    cycle_length: Optional[int] = None
    wheel_order: Optional[int] = None
    path_length: Optional[int] = None

    @property
    def signature(self) -> tuple:
        if self.kind is BlockKind.CYCLE:
            return ("cycle", self.cycle_length)
        if self.kind is BlockKind.SUBDIVIDED_WHEEL:
            return ("wheel", self.wheel_order, self.path_length)
        return ("other",)


def blocks(g: Graph) -> list:
    """Biconnected components of a connected graph, classified.

    Iterative Hopcroft-Tarjan so deep recursion on large graphs is not an
    issue.  Every edge lands in exactly one block; blocks are returned
    sorted by their smallest edge for determinism.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("block decomposition requires a connected graph")
    n = g.vertex_count
    if n == 0 or g.edge_count == 0:
        return []

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    iters = [None] * n
    edge_stack = []
    components = []

    disc[0] = low[0] = 0
    timer = 1
    stack = [0]
    while stack:
        v = stack[-1]
        if iters[v] is None:
            iters[v] = iter(g.neighbors(v))
        advanced = False
        for w in iters[v]:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((v, w))
                stack.append(w)
                advanced = True
                break
            if w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    components.append(comp)

    out = []
    for comp in components:
        edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in comp))
        vset = set()
        for u, v in edges:
            vset.add(u)
            vset.add(v)
        out.append(_classify_block(tuple(sorted(vset)), edges))
    out.sort(key=lambda b: b.edges[0])
    return out


def _classify_block(vertices: tuple, edges: tuple) -> Block:
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    degs = {v: len(nb) for v, nb in adj.items()}

    if all(d == 2 for d in degs.values()) and len(edges) == len(vertices):
        return Block(vertices, edges, BlockKind.CYCLE, cycle_length=len(vertices))

    branch = sorted(v for v, d in degs.items() if d >= 3)
    if not branch or any(d < 2 for d in degs.values()):
        return Block(vertices, edges, BlockKind.OTHER)

    # Contract degree-2 chains between branch vertices; a uniform chain
    # length plus a wheel-shaped contraction identifies a subdivided wheel.
    chains = []
    seen_first = set()
    for b in branch:
        for w in adj[b]:
            if (b, w) in seen_first:
                continue
            length = 1
            prev, cur = b, w
            while degs[cur] == 2:
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                prev, cur = cur, nxt
                length += 1
            seen_first.add((cur, prev))
            chains.append((b, cur, length))

    lengths = {length for _, _, length in chains}
    if len(lengths) != 1:
        return Block(vertices, edges, BlockKind.OTHER)
    path_length = lengths.pop()

    contracted = {v: set() for v in branch}
    for a, b, _ in chains:
        if a == b or b in contracted[a]:
            return Block(vertices, edges, BlockKind.OTHER)  # loop or parallel chain
        contracted[a].add(b)
        contracted[b].add(a)

    k = len(branch)
    if k >= 4 and len(chains) == 2 * (k - 1):
        for hub in branch:
            if len(contracted[hub]) != k - 1:
                continue
            rim = [v for v in branch if v != hub]
            if all(len(contracted[r] - {hub}) == 2 for r in rim) and _is_single_cycle(
                {r: contracted[r] - {hub} for r in rim}
            ):
                return Block(
                    vertices,
                    edges,
                    BlockKind.SUBDIVIDED_WHEEL,
                    wheel_order=k - 1,
                    path_length=path_length,
                )
    return Block(vertices, edges, BlockKind.OTHER)


def _is_single_cycle(adj: dict) -> bool:
    start = next(iter(adj))
    prev, cur = None, start
    visited = set()
    for _ in range(len(adj)):
        visited.add(cur)
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return False
        prev, cur = cur, nxt[0]
    return cur == start and len(visited) == len(adj)


def to_edgelist_text(g: Graph) -> str:
    """One "u v" line per edge, u < v, ascending lexicographic."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def to_json_dict(g: Graph) -> dict:
    p = g.params
    return {
        "family": p.family.value if p else None,
        "n": p.n if p else None,
        "m": p.m if p else None,
        "i": p.i if p else None,
        "vertices": [
            {"id": info.id, "role": info.role.value, "birth": info.birth}
            for info in g.vertices
        ],
        "edges": [[u, v] for u, v in g.edges()],
    }


_DOT_COLORS = {
    VertexRole.ORIGINAL_BASE: "black",
    VertexRole.PATH_INTERIOR: "gray",
    VertexRole.FRESH_RIM: "blue",
    VertexRole.FRESH_HUB: "red",
    VertexRole.BASE_HUB: "darkred",
}


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for info in g.vertices:
        lines.append(
            f'  {info.id} [color={_DOT_COLORS[info.role]}, '
            f'label="{info.id}", birth={info.birth}];'
        )
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
