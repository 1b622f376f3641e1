"""Core data model for complex unit gain graphs.

A gain graph is a simple undirected graph whose oriented edges carry
unit-modulus complex numbers; traversing an edge against its stored
orientation yields the complex conjugate.  Vertices are the integers
1..n.  Everything here is immutable and every operation is a pure
function, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Sequence

from .errors import NotACycle, NotAWalk, ValidationError, ZeroGain

#: Accepted deviation of |z| from 1 when a gain is validated strictly.
UNIT_TOL = 1e-6

#: Absolute tolerance on |gain - 1| used by balance checks.
BALANCE_TOL = 1e-9

Mode = Literal["max", "min"]

Edge = tuple[int, int, complex]


def normalize_gain(z: complex, strict: bool = False) -> complex:
    """Project a nonzero complex number onto the unit circle.

    Args:
        z: the raw gain.
        strict: when True, reject inputs whose modulus deviates from 1
            by more than ``UNIT_TOL`` instead of silently rescaling.

    Returns:
        z / |z|.

    Raises:
        ZeroGain: if z == 0.
        ValidationError: if strict and | |z| - 1 | > UNIT_TOL.
    """
    z = complex(z)
    r = abs(z)
    if r == 0.0:
        raise ZeroGain("a zero gain has no direction on the unit circle")
    if strict and abs(r - 1.0) > UNIT_TOL:
        raise ValidationError(f"gain modulus {r!r} is not within {UNIT_TOL} of 1")
    if abs(r - 1.0) <= 1e-15:
        # Already on the circle to within roundoff; dividing again would
        # only churn the last ulp and break bitwise round-trips.
        return z
    return z / r


def _check_vertex(x: object, n: int, what: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise ValidationError(f"{what}: expected an integer vertex, got {x!r}")
    if not 1 <= x <= n:
        raise ValidationError(f"{what}: vertex {x} outside 1..{n}")
    return x


@dataclass(frozen=True)
class GainGraph:
    """Simple undirected graph with one unit gain per oriented edge.

    Each edge is stored exactly once in its u < v orientation; the
    reverse orientation carries the conjugate gain, so the reversal law
    holds by construction.  Edge order is preserved as given.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"n: expected a positive integer, got {self.n!r}")
        seen: set[tuple[int, int]] = set()
        canon: list[Edge] = []
        for i, (u, v, z) in enumerate(self.edges):
            _check_vertex(u, self.n, f"edges[{i}].u")
            _check_vertex(v, self.n, f"edges[{i}].v")
            if not u < v:
                raise ValidationError(f"edges[{i}]: requires u < v, got ({u}, {v})")
            if (u, v) in seen:
                raise ValidationError(f"edges[{i}]: duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v, normalize_gain(z)))
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def _gain_of(self) -> dict[tuple[int, int], complex]:
        return {(u, v): z for u, v, z in self.edges}

    @cached_property
    def _neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(v, self.n, "vertex")
        return self._neighbors[v]

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._gain_of

    def gain(self, u: int, v: int) -> complex:
        """Gain of the oriented edge u -> v (conjugate of the stored value
        when queried against the stored orientation)."""
        if u < v:
            z = self._gain_of.get((u, v))
            if z is not None:
                return z
        elif v < u:
            z = self._gain_of.get((v, u))
            if z is not None:
                return z.conjugate()
        raise NotAWalk(f"({u}, {v}) is not an edge")

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def underlying(self) -> "GainGraph":
        """The same graph with every gain replaced by 1."""
        return GainGraph(self.n, tuple((u, v, 1.0 + 0.0j) for u, v, _ in self.edges))


@dataclass(frozen=True)
class WeightedGainGraph:
    """A gain graph together with strictly positive edge weights.

    ``weights[i]`` belongs to ``base.edges[i]``.  The weighted gain of an
    oriented edge is its unit gain times its weight.
    """

    base: GainGraph
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.base.edges):
            raise ValidationError(
                f"weights: expected {len(self.base.edges)} entries, got {len(self.weights)}"
            )
        ws = []
        for i, w in enumerate(self.weights):
            w = float(w)
            if not w > 0.0:
                raise ValidationError(f"weights[{i}]: expected a positive weight, got {w!r}")
            ws.append(w)
        object.__setattr__(self, "weights", tuple(ws))

    @cached_property
    def _weight_of(self) -> dict[tuple[int, int], float]:
        return {(u, v): w for (u, v, _), w in zip(self.base.edges, self.weights)}

    def weight(self, u: int, v: int) -> float:
        key = (u, v) if u < v else (v, u)
        try:
            return self._weight_of[key]
        except KeyError:
            raise NotAWalk(f"({u}, {v}) is not an edge") from None

    def weighted_gain(self, u: int, v: int) -> complex:
        return self.base.gain(u, v) * self.weight(u, v)


def unit_weights(g: GainGraph) -> WeightedGainGraph:
    """Wrap a gain graph with all weights equal to 1."""
    return WeightedGainGraph(g, (1.0,) * g.m)


@dataclass(frozen=True)
class VertexOrdering:
    """A total order on the vertices 1..n, stored as ranks.

    ``ranks[v - 1]`` is the position of vertex v; vertex u precedes
    vertex v when its rank is smaller.
    """

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(1, n + 1)):
            raise ValidationError(f"ranks: expected a permutation of 1..{n}, got {self.ranks!r}")
        object.__setattr__(self, "ranks", tuple(self.ranks))

    @classmethod
    def standard(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.ranks)

    def rank(self, v: int) -> int:
        _check_vertex(v, self.n, "vertex")
        return self.ranks[v - 1]

    def precedes(self, u: int, v: int) -> bool:
        return self.rank(u) < self.rank(v)

    def sort_pair(self, u: int, v: int) -> tuple[int, int]:
        """The pair (u, v) arranged so the first element precedes the second."""
        if u == v:
            raise ValidationError("sort_pair requires two distinct vertices")
        return (u, v) if self.precedes(u, v) else (v, u)

    def reverse(self) -> "VertexOrdering":
        n = self.n
        return VertexOrdering(tuple(n + 1 - r for r in self.ranks))


@dataclass(frozen=True)
class SwitchingFunction:
    """One unit gain per vertex; ``values[v - 1]`` belongs to vertex v."""

    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(normalize_gain(z) for z in self.values))

    @classmethod
    def identity(cls, n: int) -> "SwitchingFunction":
        return cls((1.0 + 0.0j,) * n)

    @property
    def n(self) -> int:
        return len(self.values)

    def of(self, v: int) -> complex:
        _check_vertex(v, self.n, "vertex")
        return self.values[v - 1]


# --- walk, cycle, balance, switching ------------------------------------


def path_gain(g: GainGraph, walk: Sequence[int]) -> complex:
    """Product of gains along consecutive oriented edges of a walk.

    A single vertex is a trivial walk with gain 1.

    Raises:
        NotAWalk: if the sequence is empty or some consecutive pair is
            not an edge.
    """
    if len(walk) == 0:
        raise NotAWalk("a walk needs at least one vertex")
    _check_vertex(walk[0], g.n, "walk[0]")
    acc = 1.0 + 0.0j
    for a, b in zip(walk, walk[1:]):
        acc *= g.gain(a, b)
    return acc


def cycle_gain(g: GainGraph, cycle: Sequence[int]) -> complex:
    """Gain of a simple cycle traversed in the given direction.

    The sequence may close explicitly (first vertex repeated at the end)
    or implicitly.  Internal vertices must be distinct and the cycle
    must have at least three of them.

    Raises:
        NotACycle: if the sequence violates any of the above.
        NotAWalk: if some consecutive pair is not an edge.
    """
    verts = list(cycle)
    if len(verts) >= 2 and verts[0] == verts[-1]:
        verts = verts[:-1]
    if len(verts) < 3:
        raise NotACycle("a cycle needs at least three distinct vertices")
    if len(set(verts)) != len(verts):
        raise NotACycle(f"repeated internal vertex in {tuple(cycle)!r}")
    return path_gain(g, verts + [verts[0]])


def _bfs_tree(g: GainGraph) -> list[tuple[int, int]]:
    """Edges (parent, child) of a BFS forest covering every component."""
    from collections import deque

    parent_edges: list[tuple[int, int]] = []
    seen = [False] * (g.n + 1)
    for root in range(1, g.n + 1):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in g.neighbors(a):
                if not seen[b]:
                    seen[b] = True
                    parent_edges.append((a, b))
                    queue.append(b)
    return parent_edges


def is_balanced(g: GainGraph, tol: float = BALANCE_TOL) -> bool:
    """Whether every cycle has gain 1, equivalently whether the gains
    derive from a vertex potential.

    Propagates a potential over a spanning forest and checks every
    non-forest edge against it; a mismatch beyond ``tol`` witnesses an
    unbalanced cycle.
    """
    theta: list[complex] = [1.0 + 0.0j] * (g.n + 1)
    tree = set()
    for a, b in _bfs_tree(g):
        theta[b] = theta[a] * g.gain(a, b)
        tree.add((a, b) if a < b else (b, a))
    for u, v, z in g.edges:
        if (u, v) in tree:
            continue
        if abs(z - theta[u].conjugate() * theta[v]) > tol:
            return False
    return True


def switch(g: GainGraph, xi: SwitchingFunction) -> GainGraph:
    """Apply a switching function: the gain of u -> v becomes
    xi(u)^(-1) * gain(u -> v) * xi(v).

    Switching preserves every cycle gain, hence balance.
    """
    if xi.n != g.n:
        raise ValidationError(f"switching function covers {xi.n} vertices, graph has {g.n}")
    new_edges = tuple(
        (u, v, xi.of(u).conjugate() * z * xi.of(v)) for u, v, z in g.edges
    )
    return GainGraph(g.n, new_edges)
