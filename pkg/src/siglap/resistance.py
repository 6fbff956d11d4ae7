"""Effective resistance between node pairs, per-negative-edge resistance
diagonals, and the total-resistance trace.

Two independent routes are always cross-checked when both apply: the
eigendecomposition pseudo-inverse and the closed-form cut-basis formula.
Disagreement beyond tolerance raises a diagnostic instead of silently
returning either value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .errors import CrossCheckError, DisconnectedError, SingularCutGramError
from .graph_core import SignedGraph, component_labels, decompose
from .laplacians import build_bundle, laplacian_pseudo_inverse
from .spectra import pseudo_inverse_eig

CROSS_CHECK_RTOL = 1e-7


@dataclass(frozen=True)
class ResistanceReport:
    """Per-negative-edge resistances over the positive subgraph.

    ``pairs`` holds ``(u, v, R_uv)`` per negative edge in edge order;
    ``diag_r`` is the diagonal resistance matrix; ``r_tot`` is the trace of
    the full quadratic form.
    """

    pairs: tuple[tuple[int, int, float], ...]
    diag_r: np.ndarray
    r_tot: float


def _indicator_difference(n: int, u: int, v: int) -> np.ndarray:
    vec = np.zeros(n)
    vec[u] = 1.0
    vec[v] = -1.0
    return vec


def effective_resistance(g: SignedGraph, u: int, v: int) -> float:
    """(e_u - e_v)^T L^+ (e_u - e_v).

    Uses the closed-form cut-basis pseudo-inverse when it applies (connected
    graph, invertible cut form) and cross-checks it against the
    eigendecomposition route; otherwise the eigendecomposition route alone.
    The resistance-threshold theorems only speak about all-positive graphs;
    the value is still defined (and computed) for signed weights, but carries
    no semidefiniteness meaning there.

    Raises:
        DisconnectedError: u and v lie in different components.
        CrossCheckError: the two routes disagree beyond 1e-7.
    """
    n = g.node_count
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"node out of range: ({u}, {v})")
    if u == v:
        raise ValueError("effective resistance needs two distinct nodes")
    labels = component_labels(g)
    if labels[u] != labels[v]:
        raise DisconnectedError(f"nodes {u} and {v} are in different components")

    d = decompose(g)
    bundle = build_bundle(g, d)
    vec = _indicator_difference(n, u, v)
    r_eig = float(vec @ pseudo_inverse_eig(bundle.laplacian) @ vec)

    if d.component_count == 1:
        try:
            r_cut = float(vec @ laplacian_pseudo_inverse(bundle, d) @ vec)
        except SingularCutGramError:
            return r_eig
        if abs(r_cut - r_eig) > CROSS_CHECK_RTOL * max(1.0, abs(r_eig)):
            raise CrossCheckError(
                f"resistance routes disagree: cut-basis {r_cut!r} vs "
                f"eigendecomposition {r_eig!r}"
            )
        return r_cut
    return r_eig


def resistance_matrix_for_negatives(g_plus: SignedGraph, negative_edges):
    """Quadratic form E_-^T L^+(G+) E_- and its diagonal.

    ``g_plus`` must be connected with all-positive weights; ``negative_edges``
    is a list of ``(u, v)`` endpoint pairs.  The diagonal always holds the
    pairwise effective resistances over ``g_plus``; the matrix itself is
    diagonal exactly when the path-edge sets of the pairs are disjoint.

    Returns:
        ``(matrix, diagonal)`` with shapes ``(m, m)`` and ``(m,)``.
    """
    if any(w <= 0.0 for _, _, w in g_plus.edges):
        raise ValueError("resistance_matrix_for_negatives requires an all-positive graph")
    labels = component_labels(g_plus)
    if labels.size and labels.max() != 0:
        raise DisconnectedError("positive subgraph is disconnected")

    pairs = list(negative_edges)
    n = g_plus.node_count
    m = len(pairs)
    if m == 0:
        return np.zeros((0, 0)), np.zeros(0)

    d = decompose(g_plus)
    bundle = build_bundle(g_plus, d)
    left_inv = cho_solve(cho_factor(bundle.forest_edge_laplacian), d.incidence_forest.T)
    # Cut form of an all-positive connected graph is positive definite.
    solved = cho_solve(cho_factor(bundle.cut_gram), left_inv)
    pinv = left_inv.T @ solved

    E_neg = np.zeros((n, m))
    for k, (u, v) in enumerate(pairs):
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"invalid node pair ({u}, {v})")
        E_neg[min(u, v), k] = -1.0
        E_neg[max(u, v), k] = 1.0
    matrix = E_neg.T @ pinv @ E_neg
    matrix = 0.5 * (matrix + matrix.T)
    return matrix, np.diag(matrix).copy()


def total_resistance(matrix: np.ndarray) -> float:
    """Trace of the quadratic-form matrix (0 for an empty negative set)."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.size == 0:
        return 0.0
    return float(np.trace(matrix))


def parallel_combination(r_plus: float, r_minus: float) -> float:
    """Equivalent resistance of r_plus and r_minus in parallel.

    ``r_minus = -r_plus`` is an open circuit and returns ``math.inf``.
    """
    if r_plus <= 0.0:
        raise ValueError(f"r_plus must be positive, got {r_plus}")
    if r_minus == 0.0:
        raise ValueError("r_minus must be nonzero")
    total = r_plus + r_minus
    if total == 0.0:
        return math.inf
    return r_plus * r_minus / total


def negative_edge_report(g: SignedGraph) -> ResistanceReport:
    """Resistance report over the positive subgraph for every negative edge."""
    neg = g.negative_edge_indices()
    pairs_in = [(g.edges[k][0], g.edges[k][1]) for k in neg]
    matrix, diag = resistance_matrix_for_negatives(g.positive_subgraph(), pairs_in)
    pairs = tuple((u, v, float(r)) for (u, v), r in zip(pairs_in, diag))
    return ResistanceReport(pairs=pairs, diag_r=np.diag(diag), r_tot=total_resistance(matrix))
