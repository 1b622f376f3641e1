"""Hermitian spectra and spectral balance criteria.

Three independent routes decide whether a gain graph is balanced: the
potential propagation over a spanning forest, singularity and rank of
the gain distance Laplacians, and cospectrality of the gain distance
Laplacian with that of the all-gain-1 copy of the graph.  On any input
the three verdicts agree; the reports returned here carry the raw
evidence alongside the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distances import (
    ENTRY_TOL,
    gain_distance_matrix,
    is_compatible,
    is_ordering_independent,
)
from .errors import NotHermitian, ValidationError
from .forests import det_direct, numerical_rank
from .graphs import GainGraph, SwitchingFunction, VertexOrdering, is_balanced, switch
from .laplacians import distance_laplacian, hermitian_residual

#: Largest accepted deviation of a matrix from its conjugate transpose.
HERMITIAN_TOL = 1e-12

#: Entrywise tolerance for the similarity check after switching.
SIMILARITY_TOL = 1e-10


def hermitian_spectrum(M: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    Raises:
        NotHermitian: if max |M - M*| exceeds ``tol``.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {M.shape}")
    res = hermitian_residual(M)
    if res > tol:
        raise NotHermitian(f"max |M - M*| = {res:.3e} exceeds {tol:.3e}")
    return np.linalg.eigvalsh(M)


def hermitian_eigensystem(
    M: np.ndarray, tol: float = HERMITIAN_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns)."""
    M = np.asarray(M, dtype=complex)
    res = hermitian_residual(M)
    if res > tol:
        raise NotHermitian(f"max |M - M*| = {res:.3e} exceeds {tol:.3e}")
    return np.linalg.eigh(M)


def max_eigenpair_residual(M: np.ndarray) -> float:
    """max over eigenpairs of ||M x - lambda x||_2."""
    vals, vecs = hermitian_eigensystem(M)
    if vals.size == 0:
        return 0.0
    R = np.asarray(M, dtype=complex) @ vecs - vecs * vals
    return float(np.max(np.linalg.norm(R, axis=0)))


def is_cospectral(A: np.ndarray, B: np.ndarray, tol: float | None = None) -> bool:
    """Whether two Hermitian matrices share their sorted spectra
    entrywise, within ``tol`` (default 1e-8 * (1 + max |eigenvalue of A|))."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    sa = hermitian_spectrum(A)
    sb = hermitian_spectrum(B)
    if tol is None:
        top = float(np.max(np.abs(sa))) if sa.size else 0.0
        tol = 1e-8 * (1.0 + top)
    if sa.size == 0:
        return True
    return bool(np.max(np.abs(sa - sb)) <= tol)


def singularity_threshold(M: np.ndarray) -> float:
    """1e-8 times the product over rows of max(1, row norm); a scale
    under which a determinant counts as zero."""
    M = np.asarray(M, dtype=complex)
    scale = 1.0
    for j in range(M.shape[0]):
        scale *= max(1.0, float(np.linalg.norm(M[j])))
    return 1e-8 * scale


# --- balance verdicts ----------------------------------------------------


@dataclass(frozen=True)
class SingularityReport:
    """Dets and ranks of both gain distance Laplacians.

    The verdict is rank-based (rank n-1 in both modes means balanced);
    the determinant thresholds are recorded so callers can see how far
    from singular each mode is.
    """

    n: int
    det_max: float
    det_min: float
    threshold_max: float
    threshold_min: float
    rank_max: int
    rank_min: int
    balanced: bool
    matches_potential: bool


def balance_by_singularity(g: GainGraph, ordering: VertexOrdering) -> SingularityReport:
    dl_max = distance_laplacian(g, ordering, "max")
    dl_min = distance_laplacian(g, ordering, "min")
    det_max = det_direct(dl_max).real
    det_min = det_direct(dl_min).real
    rank_max = numerical_rank(dl_max)
    rank_min = numerical_rank(dl_min)
    balanced = rank_max == g.n - 1 and rank_min == g.n - 1
    return SingularityReport(
        n=g.n,
        det_max=det_max,
        det_min=det_min,
        threshold_max=singularity_threshold(dl_max),
        threshold_min=singularity_threshold(dl_min),
        rank_max=rank_max,
        rank_min=rank_min,
        balanced=balanced,
        matches_potential=balanced == is_balanced(g),
    )


@dataclass(frozen=True)
class CospectralityReport:
    """Whether the two gain distance Laplacians coincide and share their
    spectrum with the all-gain-1 copy of the graph."""

    laplacians_match: bool
    cospectral_with_underlying: bool
    balanced: bool
    matches_potential: bool


def balance_by_cospectrality(
    g: GainGraph, ordering: VertexOrdering
) -> CospectralityReport:
    dl_max = distance_laplacian(g, ordering, "max")
    dl_min = distance_laplacian(g, ordering, "min")
    match = bool(np.max(np.abs(dl_max - dl_min)) <= ENTRY_TOL) if g.n else True
    dl_plain = distance_laplacian(g.underlying(), ordering, "max")
    cosp = is_cospectral(dl_max, dl_plain)
    balanced = match and cosp
    return CospectralityReport(
        laplacians_match=match,
        cospectral_with_underlying=cosp,
        balanced=balanced,
        matches_potential=balanced == is_balanced(g),
    )


# --- switching similarity ------------------------------------------------


@dataclass(frozen=True)
class SwitchingReport:
    """Outcome of the switching similarity check.

    When the hypothesis (compatible and ordering independent) fails the
    check reports that and judges nothing else.
    """

    hypothesis_met: bool
    switched_compatible: bool | None = None
    similarity_residual: float | None = None
    spectra_match: bool | None = None
    spectrum_gap: float | None = None


def switching_similarity_check(
    g: GainGraph, ordering: VertexOrdering, xi: SwitchingFunction
) -> SwitchingReport:
    """Verify that switching conjugates the common gain distance matrix
    by S = diag(xi): D(switched) = S^(-1) D S, entry (u, v) picking up
    xi(u)^(-1) ... xi(v).  Also checks that compatibility survives the
    switch and that the distance Laplacian spectra agree.
    """
    if xi.n != g.n:
        raise ValidationError(f"switching function covers {xi.n} vertices, graph has {g.n}")
    if not (is_compatible(g, ordering) and is_ordering_independent(g, ordering)):
        return SwitchingReport(hypothesis_met=False)
    gx = switch(g, xi)
    switched_compatible = is_compatible(gx, ordering)
    D = gain_distance_matrix(g, ordering, "max")
    Dx = gain_distance_matrix(gx, ordering, "max")
    s = np.array(xi.values, dtype=complex)
    target = D * np.outer(s.conjugate(), s)  # (S^-1 D S)_{uv} = conj(xi_u) D_{uv} xi_v
    residual = float(np.max(np.abs(Dx - target)))
    spec_before = hermitian_spectrum(distance_laplacian(g, ordering, "max"))
    spec_after = hermitian_spectrum(distance_laplacian(gx, ordering, "max"))
    gap = float(np.max(np.abs(spec_before - spec_after))) if spec_before.size else 0.0
    top = float(np.max(np.abs(spec_before))) if spec_before.size else 0.0
    return SwitchingReport(
        hypothesis_met=True,
        switched_compatible=switched_compatible,
        similarity_residual=residual,
        spectra_match=gap <= 1e-8 * (1.0 + top),
        spectrum_gap=gap,
    )
