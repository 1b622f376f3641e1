"""Adjacency, Laplacian, and incidence matrices of weighted gain graphs.

The incidence matrix of an oriented weighted gain graph has one column
per edge: sqrt(w) at the tail row and -gain(tail -> head)^(-1) * sqrt(w)
at the head row.  Since gains are unit, the inverse is the conjugate.
With H* the conjugate transpose, L = H H* holds for every orientation,
and the same factorization applies to the gain distance Laplacian
through the incidence of the associated complete graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distances import (
    DEFAULT_PATH_CAP,
    auxiliary_gain,
    gain_distance_matrix,
    shortest_distances,
    transmission_matrix,
)
from .errors import ValidationError
from .graphs import GainGraph, Mode, VertexOrdering, WeightedGainGraph


@dataclass(frozen=True)
class IncidenceMatrix:
    """An (n, m) complex matrix plus the oriented edge of each column."""

    matrix: np.ndarray
    oriented_edges: tuple[tuple[int, int], ...]


def weighted_adjacency(wg: WeightedGainGraph) -> np.ndarray:
    """Hermitian adjacency matrix with entries gain(u -> v) * w(u, v)."""
    n = wg.base.n
    out = np.zeros((n, n), dtype=complex)
    for (u, v, z), w in zip(wg.base.edges, wg.weights):
        out[u - 1, v - 1] = z * w
        out[v - 1, u - 1] = z.conjugate() * w
    return out


def weighted_degree_matrix(wg: WeightedGainGraph) -> np.ndarray:
    n = wg.base.n
    deg = np.zeros(n)
    for (u, v, _), w in zip(wg.base.edges, wg.weights):
        deg[u - 1] += w
        deg[v - 1] += w
    return np.diag(deg)


def weighted_laplacian(wg: WeightedGainGraph) -> np.ndarray:
    """L = Deg - A; Hermitian and positive semidefinite."""
    return weighted_degree_matrix(wg) - weighted_adjacency(wg)


def weighted_incidence(
    wg: WeightedGainGraph,
    orientation: tuple[tuple[int, int], ...] | None = None,
) -> IncidenceMatrix:
    """Incidence matrix with one column per edge, in edge-list order.

    Args:
        wg: the weighted gain graph.
        orientation: optional (tail, head) per edge, aligned with the
            edge list.  Defaults to the stored u < v orientation.
    """
    n, edges = wg.base.n, wg.base.edges
    if orientation is None:
        orientation = tuple((u, v) for u, v, _ in edges)
    if len(orientation) != len(edges):
        raise ValidationError(
            f"orientation: expected {len(edges)} entries, got {len(orientation)}"
        )
    H = np.zeros((n, len(edges)), dtype=complex)
    for col, ((u, v, z), w, (t, h)) in enumerate(zip(edges, wg.weights, orientation)):
        if {t, h} != {u, v}:
            raise ValidationError(
                f"orientation[{col}]: ({t}, {h}) does not orient edge ({u}, {v})"
            )
        forward = z if (t, h) == (u, v) else z.conjugate()
        sw = math.sqrt(w)
        H[t - 1, col] = sw
        H[h - 1, col] = -forward.conjugate() * sw
    return IncidenceMatrix(H, tuple(orientation))


def factorization_residual(
    wg: WeightedGainGraph,
    orientation: tuple[tuple[int, int], ...] | None = None,
) -> float:
    """max |L - H H*|; tiny for every orientation."""
    H = weighted_incidence(wg, orientation).matrix
    L = weighted_laplacian(wg)
    return float(np.max(np.abs(L - H @ H.conj().T)))


def hermitian_residual(M: np.ndarray) -> float:
    M = np.asarray(M, dtype=complex)
    return float(np.max(np.abs(M - M.conj().T)))


# --- distance side -------------------------------------------------------


def distance_incidence(
    g: GainGraph,
    ordering: VertexOrdering,
    mode: Mode,
    cap: int = DEFAULT_PATH_CAP,
) -> IncidenceMatrix:
    """Incidence matrix of the associated complete graph.

    One column per unordered vertex pair, tail at the ordering-smaller
    endpoint, weight d(u, v), columns sorted by (tail rank, head rank).
    """
    if g.n < 2:
        raise ValidationError("the distance incidence matrix needs n >= 2")
    dist = shortest_distances(g)
    pairs = [
        ordering.sort_pair(u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
    ]
    pairs.sort(key=lambda p: (ordering.rank(p[0]), ordering.rank(p[1])))
    H = np.zeros((g.n, len(pairs)), dtype=complex)
    for col, (a, b) in enumerate(pairs):
        z = auxiliary_gain(g, ordering, mode, a, b, cap)
        sw = math.sqrt(float(dist[a - 1, b - 1]))
        H[a - 1, col] = sw
        H[b - 1, col] = -z.conjugate() * sw
    return IncidenceMatrix(H, tuple(pairs))


def distance_laplacian(
    g: GainGraph,
    ordering: VertexOrdering,
    mode: Mode,
    cap: int = DEFAULT_PATH_CAP,
) -> np.ndarray:
    """Gain distance Laplacian: transmissions on the diagonal minus the
    gain distance matrix."""
    return transmission_matrix(g) - gain_distance_matrix(g, ordering, mode, cap)


def distance_factorization_residual(
    g: GainGraph,
    ordering: VertexOrdering,
    mode: Mode,
    cap: int = DEFAULT_PATH_CAP,
) -> float:
    """max |DL - DH DH*| for the given mode and ordering."""
    DH = distance_incidence(g, ordering, mode, cap).matrix
    DL = distance_laplacian(g, ordering, mode, cap)
    return float(np.max(np.abs(DL - DH @ DH.conj().T)))
