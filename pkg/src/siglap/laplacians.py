"""Laplacian-family matrices: node Laplacian, weighted edge Laplacian, the
essential edge Laplacian, and the cut-basis quadratic form.

Dense representation throughout: the target scale is a few thousand nodes and
spectral decompositions dominate the cost anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .errors import DisconnectedError, SingularCutGramError
from .graph_core import ForestDecomposition, SignedGraph, incidence_matrix
from .spectra import default_zero_tolerance


@dataclass(frozen=True)
class LaplacianBundle:
    """All Laplacian-family matrices for one graph/decomposition pair.

    ``weight_diag`` is the diagonal weight matrix in the decomposition's
    forest-then-cycle edge order; ``cut_gram`` is ``R W R^T``;
    ``essential`` is ``forest_edge_laplacian @ cut_gram`` (nonsymmetric in
    general, but similar to a symmetric matrix).
    """

    laplacian: np.ndarray
    weight_diag: np.ndarray
    cut_gram: np.ndarray
    essential: np.ndarray
    forest_edge_laplacian: np.ndarray


@dataclass(frozen=True)
class EdgeLaplacian:
    """Edge-indexed companion matrix plus a flag for its symmetry."""

    matrix: np.ndarray
    symmetric: bool


def laplacian_matrix(g: SignedGraph) -> np.ndarray:
    """The weighted node Laplacian E W E^T (symmetric, zero row sums)."""
    E = incidence_matrix(g)
    return (E * g.weights) @ E.T


def build_bundle(g: SignedGraph, d: ForestDecomposition) -> LaplacianBundle:
    """Populate every matrix in one pass; ``d`` must derive from ``g``."""
    w = g.weights[list(d.column_order)]
    W = np.diag(w)
    E = d.incidence_full
    laplacian = (E * w) @ E.T
    cut_gram = (d.cut_basis * w) @ d.cut_basis.T
    forest_lap = d.incidence_forest.T @ d.incidence_forest
    essential = forest_lap @ cut_gram
    return LaplacianBundle(
        laplacian=laplacian,
        weight_diag=W,
        cut_gram=cut_gram,
        essential=essential,
        forest_edge_laplacian=forest_lap,
    )


def weighted_edge_laplacian(g: SignedGraph) -> EdgeLaplacian:
    """|E| x |E| edge Laplacian, in the graph's own edge order.

    With all-positive weights this is the symmetric
    ``W^(1/2) E^T E W^(1/2)``.  A negative weight has no real square root, so
    signed graphs get the product ``W E^T E`` instead, which shares the
    nonzero spectrum (AB and BA have the same nonzero eigenvalues) but is not
    symmetric; the flag says which form was produced.
    """
    E = incidence_matrix(g)
    w = g.weights
    gram = E.T @ E
    if np.all(w > 0.0):
        root = np.sqrt(w)
        return EdgeLaplacian(root[:, None] * gram * root[None, :], True)
    return EdgeLaplacian(w[:, None] * gram, False)


def laplacian_pseudo_inverse(b: LaplacianBundle, d: ForestDecomposition,
                             tol: float | None = None) -> np.ndarray:
    """Closed-form Moore-Penrose pseudo-inverse of the Laplacian.

    Valid for a connected graph whose cut-basis quadratic form is invertible
    (equivalently: the Laplacian has exactly one zero eigenvalue).  Computed
    as ``(E_T^L)^T (R W R^T)^(-1) E_T^L`` with ``E_T^L`` the left-inverse of
    the tree incidence matrix.

    Raises:
        DisconnectedError: the decomposition has more than one component.
        SingularCutGramError: ``cut_gram`` is numerically singular at ``tol``;
            callers should fall back to :func:`siglap.spectra.pseudo_inverse_eig`.
    """
    if d.component_count != 1:
        raise DisconnectedError("the pseudo-inverse formula requires a connected graph")
    n = d.incidence_forest.shape[0]
    f = d.incidence_forest.shape[1]
    if f == 0:
        return np.zeros((n, n))
    left_inv = cho_solve(cho_factor(b.forest_edge_laplacian), d.incidence_forest.T)
    gram = 0.5 * (b.cut_gram + b.cut_gram.T)
    lam, V = np.linalg.eigh(gram)
    if tol is None:
        tol = default_zero_tolerance(lam, f)
    if np.min(np.abs(lam)) <= tol:
        raise SingularCutGramError(
            f"cut-basis form is singular at tolerance {tol:.3e}: "
            f"smallest |eigenvalue| = {np.min(np.abs(lam)):.3e}"
        )
    inv_gram = (V / lam) @ V.T
    return left_inv.T @ inv_gram @ left_inv
