"""Three independent spanning-tree counters plus Lucas-number wheel counts.

* ``tau_closed``   -- explicit factored formula from the size sequences
* ``tau_oracle``   -- Kirchhoff: exact determinant of a Laplacian minor
* ``tau_blocks``   -- product over biconnected blocks (tree counts multiply
                      across cut vertices)

A disagreement between any two isolates a bug: blocks wrong means the
construction is off, determinant wrong means the arithmetic is off.
"""

from __future__ import annotations

from .errors import BadParameterError, DisconnectedGraphError, SizeCapError
from .exact import FactoredCount, bareiss_determinant
from .graph import Graph, blocks, laplacian_minor
from .params import Family, FractalParams
from .sequences import size_sequences

DEFAULT_ORACLE_MAX_VERTICES = 2000


def lucas_number(k: int) -> int:
    """L_k with L_1 = 1, L_2 = 3 (L_0 = 2)."""
    if k < 0:
        raise BadParameterError("index must be >= 0")
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci_number(k: int) -> int:
    """F_k with F_1 = F_2 = 1 (F_0 = 0)."""
    if k < 0:
        raise BadParameterError("index must be >= 0")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def tau_wheel_base(n: int) -> int:
    """Spanning trees of the wheel W_n: L_{2n} - 2."""
    if n < 3:
        raise BadParameterError(f"wheel needs n >= 3, got {n}")
    return lucas_number(2 * n) - 2


def _exponent_sums(params: FractalParams) -> tuple:
    """S1 = sum of u_j, S2 = sum of (i-j)*u_j, over j = 0..i."""
    i = params.i
    u = size_sequences(params, i).u
    s1 = sum(u)
    s2 = sum((i - j) * u[j] for j in range(i + 1))
    return s1, s2


def tau_closed(params: FractalParams) -> FactoredCount:
    """Factored spanning-tree count for a stage-i family member.

    Cycle: n^S1 * m^S2.  Wheel: (L_{2n}-2)^S1 * m^(n*S2).  The exponent
    sums are accumulated exactly from the recurrence values.
    """
    s1, s2 = _exponent_sums(params)
    if params.family is Family.CYCLE:
        return FactoredCount({params.n: s1}) * FactoredCount({params.m: s2})
    base = tau_wheel_base(params.n)
    return FactoredCount({base: s1}) * FactoredCount({params.m: params.n * s2})


def tau_oracle(g: Graph, max_vertices: int = DEFAULT_ORACLE_MAX_VERTICES) -> int:
    """Exact spanning-tree count via the matrix-tree theorem."""
    if not g.is_connected():
        raise DisconnectedGraphError("spanning trees are only counted for connected graphs")
    if g.vertex_count > max_vertices:
        raise SizeCapError(
            f"{g.vertex_count} vertices exceeds the determinant cap of {max_vertices}"
        )
    if g.vertex_count <= 1:
        return 1
    return bareiss_determinant(laplacian_minor(g, 0))


def tau_blocks(g: Graph) -> int:
    """Spanning-tree count as the product over biconnected blocks."""
    result = 1
    for block in blocks(g):
        index = {v: k for k, v in enumerate(block.vertices)}
        sub = Graph()
        for v in block.vertices:
            info = g.info(v)
            sub.add_vertex(info.role, info.birth)
        for u, v in block.edges:
            sub.add_edge(index[u], index[v])
        result *= tau_oracle(sub.freeze())
    return result
