"""Shared graph builders and slow oracles used across the test modules."""

import random
from itertools import combinations, permutations

from steiner_indices import Graph, GeneratorDescriptor, generate


def path(n):
    return generate(GeneratorDescriptor("path", (n,)))


def cycle(n):
    return generate(GeneratorDescriptor("cycle", (n,)))


def complete(n):
    return generate(GeneratorDescriptor("complete", (n,)))


def hypercube(k):
    return generate(GeneratorDescriptor("hypercube", (k,)))


def grid(m, n):
    return generate(GeneratorDescriptor("grid", (m, n)))


def tree(seed, n):
    return generate(GeneratorDescriptor("tree", (seed, n)))


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(k):
    """Even prism: cycle C_k times K_2. Partial cube when k is even."""
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges.append((i, j))
        edges.append((k + i, k + j))
        edges.append((i, k + i))
    return Graph.from_edges(2 * k, sorted(tuple(sorted(e)) for e in edges))


def random_connected_graph(rng, n, extra_edges):
    """Random labeled tree plus extra random edges; always connected."""
    t = tree(rng.randrange(10**9), n)
    edges = set(t.edges)
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return Graph.from_edges(n, sorted(edges))


def small_corpus(count=30, max_n=9, seed=20240815):
    """Seeded corpus of random connected graphs, 4 <= n <= max_n."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randrange(4, max_n + 1)
        extra = rng.randrange(0, n)
        out.append(random_connected_graph(rng, n, extra))
    return out


def tree_corpus(count=50, max_n=14, seed=7):
    """Seeded corpus of random labeled trees, 3 <= n <= max_n."""
    out = []
    for s in range(count):
        n = 3 + (s * 5) % (max_n - 2)
        out.append(tree(seed + s, n))
    return out


def naive_sum_cross(d):
    """O(n^3) triple loop for the ordered cross moment; the test oracle."""
    n = d.n
    total = 0
    for u, v, w in permutations(range(n), 3):
        total += d(u, v) * d(u, w)
    return total


def naive_ordered_square_sum(d):
    """Sum of d(u,v)^2 over ordered distinct triples, by direct enumeration."""
    n = d.n
    total = 0
    for u, v, w in permutations(range(n), 3):
        total += d(u, v) ** 2
    return total


def brute_steiner_by_subtrees(g, d, s):
    """Steiner distance by enumerating vertex supersets and spanning trees.

    Independent of the production code paths: for each superset of s, check
    connectivity of the induced subgraph; minimal tree size is |superset| - 1.
    Exponential; only for tiny graphs.
    """
    s = tuple(sorted(s))
    rest = [v for v in range(g.n) if v not in s]
    edge_set = set(g.edges)
    best = None
    for r in range(len(rest) + 1):
        if best is not None and len(s) + r - 1 >= best:
            break
        for extra in combinations(rest, r):
            verts = set(s) | set(extra)
            if _induced_connected(edge_set, verts):
                size = len(verts) - 1
                if best is None or size < best:
                    best = size
        if best is not None and best == len(s) + r - 1:
            break
    return best


def _induced_connected(edge_set, verts):
    verts = set(verts)
    if not verts:
        return True
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in verts:
            if v not in seen and ((u, v) in edge_set or (v, u) in edge_set):
                seen.add(v)
                stack.append(v)
    return seen == verts
