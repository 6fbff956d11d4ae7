"""Shared fixtures: reference graphs, random generators, and independent oracles.

Oracles here deliberately avoid the package's own code paths (direct dense
Laplacian assembly, brute-force path enumeration, BFS component counting) so
tests compare two genuinely different routes to the same number.
"""

from __future__ import annotations

from collections import deque

import numpy as np

import siglap as sl

# 9-node caterpillar: path 0-1-2-3-4 with a pendant leaf on each of 0, 1, 3, 4.
# The unit-weight tree has effective resistance 4 between the path ends, so a
# chord (0, 4) of weight -0.25 sits exactly at the semidefiniteness boundary.
CATERPILLAR_TREE = [
    (0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0),
    (0, 5, 1.0), (1, 6, 1.0), (3, 7, 1.0), (4, 8, 1.0),
]
CHORD_ENDS = (0, 4)


def caterpillar_tree() -> sl.SignedGraph:
    return sl.build_graph(9, CATERPILLAR_TREE)


def caterpillar_with_chord(w: float) -> sl.SignedGraph:
    return sl.build_graph(9, CATERPILLAR_TREE + [(*CHORD_ENDS, w)])


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------

def dense_laplacian(n: int, edges) -> np.ndarray:
    """Laplacian assembled entry by entry, independent of the incidence route."""
    L = np.zeros((n, n))
    for u, v, w in edges:
        L[u, u] += w
        L[v, v] += w
        L[u, v] -= w
        L[v, u] -= w
    return L


def eig_signature(m: np.ndarray, tol: float | None = None) -> tuple[int, int, int]:
    """Signature straight from an eigendecomposition."""
    eigs = np.linalg.eigvalsh(0.5 * (m + m.T))
    if tol is None:
        tol = m.shape[0] * np.finfo(float).eps * max(1e-300, float(np.max(np.abs(eigs))))
    plus = int(np.count_nonzero(eigs > tol))
    minus = int(np.count_nonzero(eigs < -tol))
    return plus, minus, m.shape[0] - plus - minus


def bfs_component_count(n: int, node_pairs) -> int:
    """Components by plain BFS over an explicit pair list."""
    adj = [[] for _ in range(n)]
    for u, v in node_pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    count = 0
    for root in range(n):
        if seen[root]:
            continue
        count += 1
        queue = deque([root])
        seen[root] = True
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return count


def brute_force_path_edges(g: sl.SignedGraph, u: int, v: int) -> frozenset[int]:
    """Union of edges over all simple u-v paths, by exhaustive DFS."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.node_count)]
    for k, (a, b, _) in enumerate(g.edges):
        adj[a].append((k, b))
        adj[b].append((k, a))
    used: set[int] = set()
    visited = [False] * g.node_count
    stack_edges: list[int] = []

    def dfs(node: int) -> None:
        if node == v:
            used.update(stack_edges)
            return
        visited[node] = True
        for k, nb in adj[node]:
            if not visited[nb]:
                stack_edges.append(k)
                dfs(nb)
                stack_edges.pop()
        visited[node] = False

    dfs(u)
    return frozenset(used)


def tree_distance(n: int, node_pairs, u: int, v: int) -> int:
    adj = [[] for _ in range(n)]
    for a, b in node_pairs:
        adj[a].append(b)
        adj[b].append(a)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return dist[x]
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return -1


# ---------------------------------------------------------------------------
# Random graph generators (all driven by a caller-provided Generator)
# ---------------------------------------------------------------------------

def positive_weight(rng) -> float:
    return float(2.0 * (1.0 - rng.random()))  # uniform on (0, 2]


def signed_weight(rng) -> float:
    w = float(rng.uniform(0.1, 2.0))
    return w if rng.random() < 0.5 else -w


def random_connected_positive(rng, n_lo: int = 5, n_hi: int = 10) -> sl.SignedGraph:
    """Random spanning tree plus up to n extra edges, weights in (0, 2]."""
    n = int(rng.integers(n_lo, n_hi + 1))
    edges = []
    for v in range(1, n):
        edges.append((int(rng.integers(0, v)), v, positive_weight(rng)))
    for _ in range(int(rng.integers(0, n + 1))):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        edges.append((u, v, positive_weight(rng)))
    return sl.build_graph(n, edges)


def random_tree(rng, n_lo: int = 3, n_hi: int = 10) -> sl.SignedGraph:
    n = int(rng.integers(n_lo, n_hi + 1))
    edges = [(int(rng.integers(0, v)), v, positive_weight(rng)) for v in range(1, n)]
    return sl.build_graph(n, edges)


def random_signed(rng, max_components: int = 3) -> sl.SignedGraph:
    """1..max_components components, <= 10 nodes, weights in +-[0.1, 2]."""
    c = int(rng.integers(1, max_components + 1))
    sizes = [int(rng.integers(2, 11))] if c == 1 else [int(rng.integers(1, 4)) for _ in range(c)]
    edges = []
    offset = 0
    for size in sizes:
        for v in range(1, size):
            edges.append((offset + int(rng.integers(0, v)), offset + v, signed_weight(rng)))
        if size >= 2:
            for _ in range(int(rng.integers(0, size))):
                u, v = (int(x) for x in rng.choice(size, size=2, replace=False))
                edges.append((offset + u, offset + v, signed_weight(rng)))
        offset += size
    n = offset
    if not edges:  # all-singleton draw; give the graph one edge to stay nontrivial
        return sl.build_graph(max(n, 2), [(0, 1, signed_weight(rng))])
    return sl.build_graph(n, edges)


def triangle_chain_with_chords(rng, n_triangles: int, factors) -> tuple[sl.SignedGraph, list[float]]:
    """Cactus chain of triangles sharing one node; each triangle contributes a
    negative chord at ``factor x`` its threshold magnitude.

    Side weights come from {0.25, 0.5, 1.0, 2.0} so the series resistance and
    the exact-boundary magnitude stay numerically clean.  Returns the graph
    and the per-chord thresholds.
    """
    exact = [0.25, 0.5, 1.0, 2.0]
    edges = []
    chords = []
    thresholds = []
    anchor = 0
    next_node = 1
    for i in range(n_triangles):
        p, q = next_node, next_node + 1
        next_node += 2
        wa = float(rng.choice(exact))
        wb = float(rng.choice(exact))
        edges.append((anchor, p, wa))
        edges.append((p, q, wb))
        r_k = 1.0 / wa + 1.0 / wb
        thresholds.append(1.0 / r_k)
        chords.append((anchor, q, -factors[i] / r_k))
        anchor = q
    return sl.build_graph(next_node, edges + chords), thresholds


def random_boundary_cycle_graph(rng, n_lo: int = 4, n_hi: int = 10) -> sl.SignedGraph:
    """Random weighted tree plus one negative chord at exactly the threshold."""
    n = int(rng.integers(n_lo, n_hi + 1))
    tree_edges = [(int(rng.integers(0, v)), v, float(rng.uniform(0.2, 2.0)))
                  for v in range(1, n)]
    pairs = [(u, v) for u, v, _ in tree_edges]
    while True:
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        if tree_distance(n, pairs, u, v) >= 2:
            break
    tree = sl.build_graph(n, tree_edges)
    r_uv = sl.effective_resistance(tree, u, v)
    return sl.build_graph(n, tree_edges + [(u, v, -1.0 / r_uv)])
