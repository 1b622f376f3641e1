"""Spanning 1-forest enumeration and determinant identities.

A 1-tree is a connected graph with exactly one cycle; a 1-forest is a
disjoint union of 1-trees.  A spanning 1-forest of a graph on n
vertices picks exactly n edges covering every vertex, so each component
carries as many edges as vertices.  The determinant of the weighted
gain Laplacian expands over spanning 1-forests: every forest
contributes the product of its edge weights times, per component,
2 * (1 - Re(cycle gain)).
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import Disconnected, TooLarge, ValidationError
from .graphs import GainGraph, WeightedGainGraph, cycle_gain

#: Largest number of n-edge subsets scanned before giving up.
DEFAULT_SUBSET_BUDGET = 10_000_000

#: Largest vertex count accepted by the exhaustive enumeration.
DEFAULT_VERTEX_LIMIT = 10


@dataclass(frozen=True)
class OneTree:
    """A unicyclic component: its vertex set and its unique cycle."""

    vertices: frozenset[int]
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class OneForest:
    """An n-edge spanning subgraph whose components are all 1-trees."""

    edges: tuple[tuple[int, int], ...]
    components: tuple[OneTree, ...]


def _extract_cycle(vertices: set[int], adj: dict[int, list[int]]) -> tuple[int, ...]:
    """Peel degree-1 vertices; walk the surviving cycle from its
    smallest vertex toward its smaller neighbor."""
    deg = {v: len(adj[v]) for v in vertices}
    queue = deque(v for v in vertices if deg[v] == 1)
    alive = set(vertices)
    while queue:
        v = queue.popleft()
        alive.discard(v)
        deg[v] = 0
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    start = min(alive)
    second = min(w for w in adj[start] if w in alive)
    seq = [start, second]
    prev, cur = start, second
    while True:
        nxt = next(w for w in adj[cur] if w in alive and w != prev)
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    return tuple(seq)


def _one_forest_components(
    n: int, edges: Iterable[tuple[int, int]]
) -> tuple[OneTree, ...] | None:
    """Decompose an edge subset over vertices 1..n into 1-trees, or
    return None if some component is not unicyclic (isolated vertices
    count as failing components)."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * (n + 1)
    comps: list[OneTree] = []
    for root in range(1, n + 1):
        if seen[root]:
            continue
        seen[root] = True
        verts = {root}
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if not seen[b]:
                    seen[b] = True
                    verts.add(b)
                    queue.append(b)
        edge_count = sum(len(adj[v]) for v in verts) // 2
        if edge_count != len(verts):
            return None
        comps.append(OneTree(frozenset(verts), _extract_cycle(verts, adj)))
    return tuple(comps)


def _edge_pairs(wg: WeightedGainGraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v, _ in wg.base.edges]


def is_spanning_one_forest(
    wg: WeightedGainGraph, edges: Iterable[tuple[int, int]]
) -> bool:
    """Whether the edge subset has exactly n edges and every component
    of the spanned subgraph is a 1-tree."""
    pairs = [(u, v) if u < v else (v, u) for u, v in edges]
    host = set(_edge_pairs(wg))
    for p in pairs:
        if p not in host:
            raise ValidationError(f"edge {p} is not an edge of the host graph")
    if len(set(pairs)) != len(pairs):
        raise ValidationError("edge subset contains duplicates")
    n = wg.base.n
    if len(pairs) != n:
        return False
    return _one_forest_components(n, pairs) is not None


def enumerate_spanning_one_forests(
    wg: WeightedGainGraph,
    budget: int | None = None,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
) -> Iterator[OneForest]:
    """All spanning 1-forests, scanning n-edge subsets in lexicographic
    order of edge indices.

    Raises:
        TooLarge: if n exceeds ``vertex_limit`` or the subset count
            exceeds ``budget`` (checked before any work is done).
    """
    n, pairs = wg.base.n, _edge_pairs(wg)
    if n > vertex_limit:
        raise TooLarge(f"n = {n} exceeds the enumeration limit {vertex_limit}")
    budget = DEFAULT_SUBSET_BUDGET if budget is None else int(budget)
    if len(pairs) >= n and math.comb(len(pairs), n) > budget:
        raise TooLarge(
            f"C({len(pairs)}, {n}) = {math.comb(len(pairs), n)} subsets "
            f"exceeds the budget {budget}"
        )

    def generate() -> Iterator[OneForest]:
        for subset in itertools.combinations(pairs, n):
            comps = _one_forest_components(n, subset)
            if comps is not None:
                yield OneForest(subset, comps)

    return generate()


def forest_weight(forest: OneForest, wg: WeightedGainGraph) -> float:
    """Product of the forest's edge weights times, per component,
    2 * (1 - Re(cycle gain)); always >= 0."""
    acc = 1.0
    for u, v in forest.edges:
        acc *= wg.weight(u, v)
    for tree in forest.components:
        acc *= 2.0 * (1.0 - cycle_gain(wg.base, tree.cycle).real)
    return acc


def _is_connected(g: GainGraph) -> bool:
    seen = [False] * (g.n + 1)
    seen[1] = True
    queue = deque([1])
    count = 1
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if not seen[b]:
                seen[b] = True
                count += 1
                queue.append(b)
    return count == g.n


def det_via_forests(wg: WeightedGainGraph, budget: int | None = None) -> float:
    """det of the weighted Laplacian as the sum of spanning 1-forest
    weights; zero when no spanning 1-forest exists."""
    if not _is_connected(wg.base):
        raise Disconnected("the spanning 1-forest expansion needs a connected graph")
    return sum(
        forest_weight(f, wg) for f in enumerate_spanning_one_forests(wg, budget=budget)
    )


def det_direct(M: np.ndarray) -> complex:
    """Determinant through LU with partial pivoting."""
    return complex(np.linalg.det(np.asarray(M, dtype=complex)))


def numerical_rank(M: np.ndarray, tol: float | None = None) -> int:
    """Number of eigenvalues of a Hermitian matrix larger in magnitude
    than ``tol``; defaults to 1e-8 * max(1, max |eigenvalue|)."""
    vals = np.linalg.eigvalsh(np.asarray(M, dtype=complex))
    if tol is None:
        top = float(np.max(np.abs(vals))) if vals.size else 0.0
        tol = 1e-8 * max(1.0, top)
    return int(np.sum(np.abs(vals) > tol))


def spanning_subgraph(
    wg: WeightedGainGraph, edges: Iterable[tuple[int, int]]
) -> WeightedGainGraph:
    """The subgraph on all n vertices keeping only the given edges,
    with their original gains and weights."""
    keep = {(u, v) if u < v else (v, u) for u, v in edges}
    host = set(_edge_pairs(wg))
    missing = keep - host
    if missing:
        raise ValidationError(f"edges {sorted(missing)} are not edges of the host graph")
    sub_edges = []
    sub_weights = []
    for (u, v, z), w in zip(wg.base.edges, wg.weights):
        if (u, v) in keep:
            sub_edges.append((u, v, z))
            sub_weights.append(w)
    return WeightedGainGraph(GainGraph(wg.base.n, tuple(sub_edges)), tuple(sub_weights))
