"""Hop distances, geodesic enumeration, and gain distance matrices.

For an ordered vertex pair the auxiliary gain is the lexicographically
extremal (real part first, then imaginary part) gain over all shortest
paths between the two vertices, conjugated when the pair is queried
against the active vertex ordering.  The gain distance matrix scales
each auxiliary gain by the hop distance; it is Hermitian with zero
diagonal by construction.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np

from .errors import Disconnected, PathExplosion, ValidationError
from .graphs import GainGraph, Mode, VertexOrdering, WeightedGainGraph

#: Default cap on the number of shortest paths enumerated per vertex pair.
DEFAULT_PATH_CAP = 1_000_000

#: Two real parts closer than this are treated as tied by the
#: lexicographic comparison, falling through to the imaginary parts.
LEX_TIE_BAND = 1e-12

#: Entrywise tolerance for matrix-equality predicates.
ENTRY_TOL = 1e-9


def _require_mode(mode: str) -> None:
    if mode not in ("max", "min"):
        raise ValidationError(f"mode: expected 'max' or 'min', got {mode!r}")


def _bfs_distances(g: GainGraph, source: int) -> list[int]:
    dist = [-1] * (g.n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def shortest_distances(g: GainGraph) -> np.ndarray:
    """All-pairs hop distances as an (n, n) integer matrix.

    Raises:
        Disconnected: if some pair of vertices has no connecting walk.
    """
    out = np.zeros((g.n, g.n), dtype=int)
    for u in range(1, g.n + 1):
        dist = _bfs_distances(g, u)
        for v in range(1, g.n + 1):
            if dist[v] < 0:
                raise Disconnected(f"vertex {v} is unreachable from vertex {u}")
            out[u - 1, v - 1] = dist[v]
    return out


def enumerate_shortest_paths(
    g: GainGraph, u: int, v: int, cap: int = DEFAULT_PATH_CAP
) -> list[tuple[int, ...]]:
    """Every shortest path from u to v as a vertex sequence.

    Paths are produced by a depth-first sweep of the shortest-path DAG,
    so the output order is deterministic (neighbors in ascending index
    order).  The trivial pair u == v yields the single path (u,).

    Raises:
        Disconnected: if v is unreachable from u.
        PathExplosion: if more than ``cap`` paths exist.
    """
    if cap < 1:
        raise ValidationError(f"cap: expected a positive integer, got {cap!r}")
    du = _bfs_distances(g, u)
    if du[v] < 0:
        raise Disconnected(f"vertex {v} is unreachable from vertex {u}")
    dv = _bfs_distances(g, v)
    total = du[v]

    paths: list[tuple[int, ...]] = []
    stack = [u]

    def descend(a: int) -> None:
        if a == v:
            if len(paths) >= cap:
                raise PathExplosion(
                    f"more than {cap} shortest paths between {u} and {v}"
                )
            paths.append(tuple(stack))
            return
        for b in g.neighbors(a):
            # b lies on a geodesic continuation iff it keeps the total length.
            if du[a] + 1 + dv[b] == total:
                stack.append(b)
                descend(b)
                stack.pop()

    descend(u)
    return paths


def geodesic_gains(
    g: GainGraph, u: int, v: int, cap: int = DEFAULT_PATH_CAP
) -> tuple[complex, ...]:
    """Gains of all shortest u -> v paths, in enumeration order."""
    from .graphs import path_gain

    return tuple(path_gain(g, p) for p in enumerate_shortest_paths(g, u, v, cap))


def _lex_prefer(a: complex, b: complex, want_max: bool, band: float = LEX_TIE_BAND) -> bool:
    """True if a is preferred over b under the (Re, Im) lexicographic
    order, with real parts within ``band`` treated as tied."""
    if a.real > b.real + band:
        return want_max
    if a.real < b.real - band:
        return not want_max
    return a.imag > b.imag if want_max else a.imag < b.imag


def lex_extremal(values: Iterable[complex], mode: Mode) -> complex:
    _require_mode(mode)
    it = iter(values)
    try:
        best = next(it)
    except StopIteration:
        raise ValidationError("lex_extremal needs at least one value") from None
    for z in it:
        if _lex_prefer(z, best, mode == "max"):
            best = z
    return best


def auxiliary_gain(
    g: GainGraph,
    ordering: VertexOrdering,
    mode: Mode,
    u: int,
    v: int,
    cap: int = DEFAULT_PATH_CAP,
) -> complex:
    """Extremal geodesic gain for the ordered pair (u, v).

    The extremum is taken over shortest paths from the ordering-smaller
    endpoint to the larger one; querying the pair the other way round
    returns the conjugate.  The diagonal is the complex zero, the one
    value off the unit circle.
    """
    _require_mode(mode)
    if ordering.n != g.n:
        raise ValidationError(f"ordering covers {ordering.n} vertices, graph has {g.n}")
    if u == v:
        return 0.0 + 0.0j
    a, b = ordering.sort_pair(u, v)
    best = lex_extremal(geodesic_gains(g, a, b, cap), mode)
    return best if (u, v) == (a, b) else best.conjugate()


def gain_distance_matrix(
    g: GainGraph,
    ordering: VertexOrdering,
    mode: Mode,
    cap: int = DEFAULT_PATH_CAP,
) -> np.ndarray:
    """Hermitian matrix whose (j, k) entry is the auxiliary gain of
    (v_j, v_k) times the hop distance; zero diagonal."""
    _require_mode(mode)
    if ordering.n != g.n:
        raise ValidationError(f"ordering covers {ordering.n} vertices, graph has {g.n}")
    dist = shortest_distances(g)
    n = g.n
    out = np.zeros((n, n), dtype=complex)
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            a, b = ordering.sort_pair(u, v)
            best = lex_extremal(geodesic_gains(g, a, b, cap), mode)
            d = float(dist[a - 1, b - 1])
            out[a - 1, b - 1] = best * d
            out[b - 1, a - 1] = best.conjugate() * d
    return out


def transmission_matrix(g: GainGraph) -> np.ndarray:
    """Diagonal matrix of transmissions, tr(v) = sum of distances from v."""
    dist = shortest_distances(g)
    return np.diag(dist.sum(axis=1).astype(float))


def is_compatible(g: GainGraph, ordering: VertexOrdering, tol: float = ENTRY_TOL) -> bool:
    """Whether the max and min gain distance matrices coincide, i.e.
    all shortest paths between each vertex pair carry the same gain."""
    dmax = gain_distance_matrix(g, ordering, "max")
    dmin = gain_distance_matrix(g, ordering, "min")
    return bool(np.max(np.abs(dmax - dmin)) <= tol) if g.n > 0 else True


def is_ordering_independent(
    g: GainGraph, ordering: VertexOrdering, tol: float = ENTRY_TOL
) -> bool:
    """Whether both gain distance matrices are unchanged when the
    ordering is reversed."""
    rev = ordering.reverse()
    for mode in ("max", "min"):
        a = gain_distance_matrix(g, ordering, mode)
        b = gain_distance_matrix(g, rev, mode)
        if np.max(np.abs(a - b)) > tol:
            return False
    return True


def associated_complete_graph(
    g: GainGraph,
    ordering: VertexOrdering,
    mode: Mode,
    cap: int = DEFAULT_PATH_CAP,
) -> WeightedGainGraph:
    """Complete weighted gain graph whose edge {u, v} carries the
    auxiliary gain of (u, v) and weight d(u, v).

    Its weighted Laplacian equals the gain distance Laplacian of g.
    """
    _require_mode(mode)
    if g.n < 2:
        raise ValidationError("the associated complete graph needs n >= 2")
    dist = shortest_distances(g)
    edges: list[tuple[int, int, complex]] = []
    weights: list[float] = []
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            edges.append((u, v, auxiliary_gain(g, ordering, mode, u, v, cap)))
            weights.append(float(dist[u - 1, v - 1]))
    return WeightedGainGraph(GainGraph(g.n, tuple(edges)), tuple(weights))
