"""Djokovic-Winkler relation, Theta-class structure, and graph classification.

The relation Theta puts edges u1v1, u2v2 in relation iff
d(u1,u2) + d(v1,v2) != d(u1,v2) + d(v1,u2). Its transitive closure Theta*
partitions the edge set. For a partial cube, removing a class leaves exactly
two connected components (the class's sides), and the side bipartitions give
an isometric hypercube embedding.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import NotPartialCubeClassError, PreconditionError
from .graph import all_pairs_distances, bfs_distances, is_connected


def theta_related(d, e1, e2):
    """Theta test for two edges, independent of endpoint labeling."""
    u1, v1 = e1
    u2, v2 = e2
    return d(u1, u2) + d(v1, v2) != d(u1, v2) + d(v1, u2)


@dataclass(frozen=True)
class ThetaClasses:
    """Edge partition under Theta*, with side bipartitions when they exist.

    ``classes`` are ordered by smallest contained edge; ``sides`` is None when
    some class does not split the graph into exactly two components (i.e. the
    graph is not a partial cube).
    """

    n: int
    classes: tuple
    sides: Optional[tuple]

    @property
    def class_count(self):
        return len(self.classes)

    @property
    def side_counts(self):
        if self.sides is None:
            raise PreconditionError("side partitions unavailable: not a partial-cube class structure")
        return tuple((len(s0), len(s1)) for s0, s1 in self.sides)


def side_partition(g, cls):
    """Connected components of G minus a Theta*-class, as two vertex sets.

    side0 is the component containing the smallest vertex id. Raises
    NotPartialCubeClassError when the removal leaves != 2 components.
    """
    removed = set()
    for u, v in cls:
        removed.add((u, v))
        removed.add((v, u))
    comp = [-1] * g.n
    count = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        comp[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if comp[w] < 0 and (u, w) not in removed:
                    comp[w] = count
                    queue.append(w)
        count += 1
    if count != 2:
        raise NotPartialCubeClassError(count)
    side0 = frozenset(v for v in range(g.n) if comp[v] == comp[0])
    side1 = frozenset(v for v in range(g.n) if comp[v] != comp[0])
    return side0, side1


def _attach_sides(g, classes):
    sides = []
    for cls in classes:
        try:
            sides.append(side_partition(g, cls))
        except NotPartialCubeClassError:
            return None
    return tuple(sides)


def _theta_classes_pairwise(g, d):
    """Theta* by testing Theta on all edge pairs and merging with union-find."""
    edges = g.edges
    m = len(edges)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    a = d.a
    eu = np.fromiter((e[0] for e in edges), dtype=np.int64, count=m)
    ev = np.fromiter((e[1] for e in edges), dtype=np.int64, count=m)
    for i in range(m):
        u1, v1 = edges[i]
        # vectorized Theta test of edge i against edges i+1..m-1
        lhs = a[u1, eu[i + 1 :]] + a[v1, ev[i + 1 :]]
        rhs = a[u1, ev[i + 1 :]] + a[v1, eu[i + 1 :]]
        for off in np.flatnonzero(lhs != rhs):
            ri, rj = find(i), find(i + 1 + int(off))
            if ri != rj:
                parent[rj] = ri
    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(edges[i])
    classes = sorted((tuple(sorted(cl)) for cl in groups.values()), key=lambda c: c[0])
    return tuple(classes)


def _csr_bfs_python(indptr, indices, n, src):
    dist = np.full(n, -1, dtype=np.int32)
    dist[src] = 0
    queue = np.empty(n, dtype=np.int64)
    queue[0] = src
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du + 1
                queue[tail] = w
                tail += 1
    return dist


_CSR_BFS = None


def _compiled_csr_bfs():
    """BFS over CSR arrays, jit-compiled when numba is available."""
    global _CSR_BFS
    if _CSR_BFS is None:
        try:
            from numba import njit

            _CSR_BFS = njit(cache=True)(_csr_bfs_python)
        except ImportError:
            _CSR_BFS = _csr_bfs_python
    return _CSR_BFS


def _theta_classes_crossing(g):
    """Theta* of a bipartite partial cube via one BFS pair per class.

    For a bipartite graph the edges Theta-related to uv are exactly the edges
    crossing the {closer-to-u, closer-to-v} vertex bipartition. When these
    crossing sets tile the edge set they are the Theta*-classes (always the
    case for partial cubes). Returns None when the tiling fails, in which case
    the caller must fall back to the pairwise method.
    """
    n = g.n
    m = len(g.edges)
    degrees = np.fromiter((len(a) for a in g.adjacency), dtype=np.int64, count=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    indices = np.fromiter((w for adj in g.adjacency for w in adj), dtype=np.int32, count=2 * m)
    eu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=m)
    ev = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=m)
    bfs = _compiled_csr_bfs()

    assigned = np.full(m, -1, dtype=np.int64)
    classes = []
    sides = []
    for i in range(m):
        if assigned[i] >= 0:
            continue
        u, v = g.edges[i]
        du = bfs(indptr, indices, n, u)
        dv = bfs(indptr, indices, n, v)
        if (du == dv).any():
            return None  # tie: not bipartite along this edge's cut
        closer_u = du < dv
        idx = np.flatnonzero(closer_u[eu] != closer_u[ev])
        if (assigned[idx] >= 0).any():
            return None  # overlap: Theta not transitive here
        assigned[idx] = len(classes)
        classes.append(tuple(g.edges[int(j)] for j in idx))
        side_u = frozenset(np.flatnonzero(closer_u).tolist())
        side_v = frozenset(np.flatnonzero(~closer_u).tolist())
        sides.append((side_u, side_v) if 0 in side_u else (side_v, side_u))
    order = sorted(range(len(classes)), key=lambda idx: classes[idx][0])
    return tuple(classes[idx] for idx in order), tuple(sides[idx] for idx in order)


def theta_classes(g, d=None, method="pairwise"):
    """Partition the edge set under Theta*.

    method="pairwise" is the general algorithm (O(|E|^2) Theta tests merged by
    union-find). method="crossing" is a fast equivalent valid for partial
    cubes; it raises PreconditionError when its consistency checks fail rather
    than silently returning a wrong partition.
    """
    if not is_connected(g):
        raise PreconditionError("theta_classes requires a connected graph")
    if method == "crossing":
        result = _theta_classes_crossing(g)
        if result is None:
            raise PreconditionError(
                "crossing method inapplicable (graph is not a partial cube); use method='pairwise'"
            )
        classes, sides = result
        return ThetaClasses(n=g.n, classes=classes, sides=sides)
    if method != "pairwise":
        raise ValueError(f"unknown method {method!r}")
    if d is None:
        d = all_pairs_distances(g)
    classes = _theta_classes_pairwise(g, d)
    return ThetaClasses(n=g.n, classes=classes, sides=_attach_sides(g, classes))


class PairCountTable:
    """Quadrant cardinalities n_ij^kl for every unordered pair of classes.

    get(i, j) returns (n00, n01, n10, n11): how many vertices lie in
    side_k of class i and side_l of class j.
    """

    def __init__(self, n, n11, side1_sizes):
        self._n = n
        self._n11 = n11
        self._s1 = side1_sizes

    def get(self, i, j):
        n11 = int(self._n11[i, j])
        n10 = self._s1[i] - n11
        n01 = self._s1[j] - n11
        n00 = self._n - n11 - n10 - n01
        return n00, n01, n10, n11

    def pairs(self):
        d = len(self._s1)
        for i in range(d):
            for j in range(i + 1, d):
                yield (i, j), self.get(i, j)


def pair_counts(tc):
    """Intersection counts of all side pairs, via one boolean matrix product."""
    if tc.sides is None:
        raise PreconditionError("pair_counts requires valid side partitions for every class")
    d = tc.class_count
    n = tc.n
    member = np.zeros((d, n), dtype=np.int64)
    for i, (_, s1) in enumerate(tc.sides):
        member[i, list(s1)] = 1
    n11 = member @ member.T
    side1_sizes = [len(s1) for _, s1 in tc.sides]
    table = PairCountTable(n, n11, side1_sizes)
    for (_, _), (n00, n01, n10, n11v) in table.pairs():
        assert n00 + n01 + n10 + n11v == n
        assert min(n00, n01, n10, n11v) >= 0
    return table


def is_bipartite(g):
    """2-color by BFS; returns (flag, colors or None)."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


@dataclass(frozen=True)
class PartialCubeResult:
    is_partial_cube: bool
    reason: Optional[str]  # non-bipartite | bad class | non-isometric labeling
    coordinates: Optional[tuple]  # per-vertex 0/1 tuples, dimension = class count


def is_partial_cube(g, d, tc):
    """Check the partial-cube property and produce the hypercube embedding.

    Verifies (a) bipartiteness, (b) every class splits G into two sides,
    (c) graph distance equals Hamming distance of the side-membership labels.
    """
    bip, _ = is_bipartite(g)
    if not bip:
        return PartialCubeResult(False, "non-bipartite", None)
    if tc.sides is None:
        return PartialCubeResult(False, "bad class", None)
    dim = tc.class_count
    labels = np.zeros((g.n, dim), dtype=np.int64)
    for i, (_, s1) in enumerate(tc.sides):
        labels[list(s1), i] = 1
    # Hamming distance of all pairs at once
    ones = labels
    zeros = 1 - labels
    hamming = ones @ zeros.T + zeros @ ones.T
    if not np.array_equal(hamming, d.a.astype(np.int64)):
        return PartialCubeResult(False, "non-isometric labeling", None)
    coords = tuple(tuple(int(x) for x in row) for row in labels)
    return PartialCubeResult(True, None, coords)


def count_medians(d, u, v, w):
    """Number of vertices lying on shortest paths between all three pairs."""
    if len({u, v, w}) != 3:
        raise PreconditionError("count_medians requires three distinct vertices")
    du, dv, dw = d.row(u), d.row(v), d.row(w)
    ok = (du + dv == d(u, v)) & (du + dw == d(u, w)) & (dv + dw == d(v, w))
    return int(np.count_nonzero(ok))


@dataclass(frozen=True)
class GraphClassification:
    connected: bool
    bipartite: bool
    partial_cube: bool
    median_status: str  # median | modular_not_median | not_modular
    witness: Optional[tuple]

    @property
    def modular(self):
        return self.median_status in ("median", "modular_not_median")


def median_classification(g, d=None, tc=None):
    """Classify a connected graph by its median structure.

    Scans all vertex triples, stopping early once a zero-median triple proves
    the graph not modular. Graphs with n < 3 are classified median by
    convention. The witness is a triple with no median (not_modular) or with
    at least two medians (modular_not_median).
    """
    if not is_connected(g):
        raise PreconditionError("median_classification requires a connected graph")
    if d is None:
        d = all_pairs_distances(g)
    bip, _ = is_bipartite(g)
    if g.n < 3:
        return GraphClassification(True, bip, g.n >= 1, "median", None)
    if tc is None:
        tc = theta_classes(g, d)
    pc = is_partial_cube(g, d, tc)

    status = "median"
    witness = None
    a = d.a
    for u, v, w in combinations(range(g.n), 3):
        du, dv, dw = a[u], a[v], a[w]
        ok = (du + dv == a[u, v]) & (du + dw == a[u, w]) & (dv + dw == a[v, w])
        c = int(np.count_nonzero(ok))
        if c == 0:
            return GraphClassification(True, bip, pc.is_partial_cube, "not_modular", (u, v, w))
        if c >= 2 and status == "median":
            status = "modular_not_median"
            witness = (u, v, w)
    return GraphClassification(True, bip, pc.is_partial_cube, status, witness)
