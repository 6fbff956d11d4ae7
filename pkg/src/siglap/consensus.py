"""Linear weighted consensus dynamics x' = -L x: simulation, cluster
prediction at the resistance boundary, and cluster detection in trajectories.

The integrator is deterministic fixed-step classical Runge-Kutta; the state
mean is a conserved quantity of the dynamics (1^T L = 0) and is preserved to
rounding error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .definiteness import BOUNDARY_RTOL
from .errors import CrossCheckError, HypothesisViolatedError, UnboundedError
from .graph_core import (
    SignedGraph,
    component_labels,
    components_after_edge_removal,
    decompose_with_forest,
)
from .laplacians import laplacian_matrix
from .resistance import effective_resistance

DEFAULT_T_FINAL = 20.0
DEFAULT_STEP = 1e-3
DEFAULT_OUTPUT_STRIDE = 10
DEFAULT_CLUSTER_TOL = 1e-5
UNBOUNDED_FACTOR = 1e6


@dataclass(frozen=True)
class ClusterAssignment:
    """Node partition with one consensus value per cluster."""

    labels: tuple[int, ...]
    values: tuple[float, ...]

    @property
    def cluster_count(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Trajectory:
    """Recorded simulation states; ``final_clusters`` is None when the run
    diverged (indefinite Laplacian), which is reported rather than hidden."""

    times: np.ndarray
    states: np.ndarray
    step_size: float
    final_clusters: ClusterAssignment | None

    @property
    def diverged(self) -> bool:
        return self.final_clusters is None


@dataclass(frozen=True)
class ClusterPrediction:
    """Predicted cluster count with the constructed extra null-space vector."""

    q: int
    null_vector: np.ndarray
    component_map: tuple[int, ...]


def _rk4_step(A: np.ndarray, x: np.ndarray, h: float) -> np.ndarray:
    k1 = A @ x
    k2 = A @ (x + 0.5 * h * k1)
    k3 = A @ (x + 0.5 * h * k2)
    k4 = A @ (x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def simulate(g: SignedGraph, x0, t_final: float = DEFAULT_T_FINAL,
             step: float = DEFAULT_STEP, output_stride: int = DEFAULT_OUTPUT_STRIDE,
             cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Trajectory:
    """Integrate x' = -L x from x0 with fixed-step RK4.

    States are recorded at t = 0, every ``output_stride`` steps, and at
    ``t_final``.  Divergence (possible when L is indefinite) is legitimate:
    the trajectory is returned with ``final_clusters = None``.
    """
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (g.node_count,):
        raise ValueError(f"x0 must have shape ({g.node_count},), got {x0.shape}")
    if t_final <= 0.0 or step <= 0.0:
        raise ValueError("t_final and step must be positive")
    if output_stride < 1:
        raise ValueError("output_stride must be >= 1")

    A = -laplacian_matrix(g)
    n_steps = int(np.floor(t_final / step + 1e-9))
    remainder = t_final - n_steps * step

    times = [0.0]
    states = [x0.copy()]
    x = x0.copy()
    for i in range(1, n_steps + 1):
        x = _rk4_step(A, x, step)
        if i % output_stride == 0:
            times.append(i * step)
            states.append(x.copy())
    if remainder > 1e-12 * max(1.0, t_final):
        x = _rk4_step(A, x, remainder)
        times.append(t_final)
        states.append(x.copy())
    elif n_steps % output_stride != 0:
        times.append(n_steps * step)
        states.append(x.copy())

    times_arr = np.array(times)
    states_arr = np.array(states)
    try:
        clusters = _detect(times_arr, states_arr, cluster_tol)
    except UnboundedError:
        clusters = None
    return Trajectory(times_arr, states_arr, step, clusters)


def _detect(times: np.ndarray, states: np.ndarray, tol: float) -> ClusterAssignment:
    m, n = states.shape
    start = int(np.floor(0.9 * (m - 1)))
    window = states[start:]

    norm_end = float(np.max(np.linalg.norm(window, axis=1)))
    norm_start = float(np.linalg.norm(states[0]))
    if norm_end > UNBOUNDED_FACTOR * norm_start:
        raise UnboundedError(
            f"final-window norm {norm_end:.3e} exceeds {UNBOUNDED_FACTOR:g} x "
            f"initial norm {norm_start:.3e}"
        )

    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if float(np.max(np.abs(window[:, i] - window[:, j]))) <= tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    labels = []
    order: dict[int, int] = {}
    for node in range(n):
        root = find(node)
        if root not in order:
            order[root] = len(order)
        labels.append(order[root])
    final = states[-1]
    values = []
    for cid in range(len(order)):
        members = [node for node in range(n) if labels[node] == cid]
        values.append(float(np.mean(final[members])))
    return ClusterAssignment(tuple(labels), tuple(values))


def detect_clusters(traj: Trajectory, tol: float = DEFAULT_CLUSTER_TOL) -> ClusterAssignment:
    """Partition nodes by agreement over the final 10% of the recorded run.

    Nodes share a cluster when their states stay within ``tol`` of each other
    throughout the window (transitively closed).

    Raises:
        UnboundedError: the final window grew beyond 1e6 x the initial norm,
            the footprint of an indefinite Laplacian.
    """
    return _detect(traj.times, traj.states, tol)


def _cycle_edge_indices(g: SignedGraph) -> set[int]:
    """Edges of the unique cycle of a connected graph with |E| = |V|.

    Found by repeatedly peeling degree-1 nodes; what survives is the cycle.
    """
    degree = [0] * g.node_count
    incident: list[list[int]] = [[] for _ in range(g.node_count)]
    for k, (u, v, _) in enumerate(g.edges):
        degree[u] += 1
        degree[v] += 1
        incident[u].append(k)
        incident[v].append(k)
    alive = [True] * g.edge_count
    queue = [node for node in range(g.node_count) if degree[node] == 1]
    while queue:
        node = queue.pop()
        for k in incident[node]:
            if not alive[k]:
                continue
            alive[k] = False
            u, v, _ = g.edges[k]
            other = v if u == node else u
            degree[node] -= 1
            degree[other] -= 1
            if degree[other] == 1:
                queue.append(other)
    return {k for k in range(g.edge_count) if alive[k]}


def predict_clusters(g: SignedGraph,
                     boundary_rtol: float = BOUNDARY_RTOL) -> ClusterPrediction:
    """Cluster count and null-space vector for the single-cycle boundary case.

    Requires: connected graph with exactly one cycle (|E| = |V|), exactly one
    negative edge lying on that cycle, a connected positive subgraph (hence a
    spanning tree), and the negative magnitude sitting at the threshold
    1/R_uv within ``boundary_rtol``.  The predicted count q is the number of
    components left after removing every cycle edge; the extra null vector is
    solved from the edge-difference system and projected orthogonal to the
    all-ones vector.

    Raises:
        HypothesisViolatedError: listing every precondition that failed.
    """
    n = g.node_count
    failures = []
    if int(component_labels(g).max()) != 0:
        failures.append("graph must be connected")
    if g.edge_count != n:
        failures.append(
            f"exactly one cycle required (|E| = |V|), got {g.edge_count} edges on {n} nodes"
        )
    neg = g.negative_edge_indices()
    if len(neg) != 1:
        failures.append(f"exactly one negative edge required, found {len(neg)}")
    positive = g.positive_edge_indices()
    if int(component_labels(g.subgraph(positive)).max()) != 0:
        failures.append("positive subgraph must be connected")
    if failures:
        raise HypothesisViolatedError(failures)

    cycle = _cycle_edge_indices(g)
    if neg[0] not in cycle:
        raise HypothesisViolatedError(["the negative edge must lie on the cycle"])
    u, v, w = g.edges[neg[0]]
    r_uv = effective_resistance(g.subgraph(positive), u, v)
    margin = abs(w) * r_uv - 1.0
    if abs(margin) > boundary_rtol:
        raise HypothesisViolatedError(
            [f"negative weight must equal the threshold 1/{r_uv:.12g}; margin {margin:.3e}"]
        )

    q = components_after_edge_removal(g, cycle)
    dec = decompose_with_forest(g, positive)
    w_ordered = g.weights[list(dec.column_order)]
    rhs = np.append(dec.tree_to_cycle[:, 0], -1.0) / w_ordered
    x, *_ = np.linalg.lstsq(dec.incidence_full.T, rhs, rcond=None)
    residual = float(np.linalg.norm(dec.incidence_full.T @ x - rhs))
    if residual > 1e-8:
        raise CrossCheckError(
            f"null-vector system residual {residual:.3e} exceeds 1e-8; "
            "the boundary structure is not consistent"
        )
    null_vector = x - x.mean()
    labels = component_labels(g, skip_edges=cycle)
    return ClusterPrediction(q, null_vector, tuple(int(c) for c in labels))
