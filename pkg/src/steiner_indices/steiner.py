"""Exact Steiner distances, the Steiner k-Hosoya polynomial, and k-indices.

Steiner distance of a terminal set S is the minimum edge count of a connected
subgraph containing S. For k = 3 it is the minimum over branch vertices m of
d(u,m) + d(v,m) + d(w,m); for larger k an exact subset dynamic program over
(terminal subset, attachment vertex) states is used.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import IntegralityError, PreconditionError

# state space of the subset DP is 2^(k-1) * n; beyond this we refuse
K_MAX = 12

_INF = np.int64(1) << 40


def exact_div(num, den):
    """Integer division that must be exact; anything else is a bug upstream."""
    q, r = divmod(num, den)
    if r != 0:
        raise IntegralityError(f"{num} is not divisible by {den}")
    return q


def _validate_terminals(n, s):
    terms = sorted(set(s))
    if len(terms) != len(list(s)):
        raise PreconditionError("terminal set contains repeated vertices")
    if not terms:
        raise PreconditionError("terminal set must be non-empty")
    if terms[0] < 0 or terms[-1] >= n:
        raise PreconditionError(f"terminal out of range [0, {n})")
    return terms


def _steiner_dw(d, terms):
    """Dreyfus-Wagner over the metric closure. Exact for any terminal count."""
    a = d.a.astype(np.int64)
    n = a.shape[0]
    base = terms[:-1]
    root = terms[-1]
    kk = len(base)
    full = (1 << kk) - 1
    dp = np.full((full + 1, n), _INF, dtype=np.int64)
    for i, t in enumerate(base):
        dp[1 << i] = a[t]
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        low = mask & (-mask)
        best = np.full(n, _INF, dtype=np.int64)
        sub = (mask - 1) & mask
        while sub:
            if sub & low:
                np.minimum(best, dp[sub] + dp[mask ^ sub], out=best)
            sub = (sub - 1) & mask
        dp[mask] = (best[:, None] + a).min(axis=0)
    return int(dp[full][root])


def steiner_distance(g, d, s):
    """Exact Steiner distance of terminal set s in a connected graph."""
    terms = _validate_terminals(g.n, list(s))
    k = len(terms)
    if k > K_MAX:
        raise PreconditionError(
            f"terminal set too large for exact computation (k={k} > {K_MAX})"
        )
    if k == 1:
        return 0
    if k == 2:
        return d(terms[0], terms[1])
    if k == 3:
        u, v, w = terms
        return int((d.row(u).astype(np.int64) + d.row(v) + d.row(w)).min())
    return _steiner_dw(d, terms)


@dataclass(frozen=True)
class SteinerHosoya:
    """Coefficients of the Steiner k-Hosoya polynomial: m -> number of
    k-subsets with Steiner distance m."""

    k: int
    coeffs: dict

    def total(self):
        return sum(self.coeffs.values())

    def as_pairs(self):
        return sorted(self.coeffs.items())


def steiner_hosoya(g, d, k):
    """Tally Steiner distances over all C(n, k) subsets."""
    if not 1 <= k <= min(g.n, K_MAX):
        raise PreconditionError(f"k must satisfy 1 <= k <= min(n, {K_MAX}), got {k}")
    coeffs = {}
    for s in combinations(range(g.n), k):
        m = steiner_distance(g, d, s)
        coeffs[m] = coeffs.get(m, 0) + 1
    return SteinerHosoya(k=k, coeffs=coeffs)


def indices_from_hosoya(p):
    """SW_k and SWW_k from the polynomial's derivatives at 1.

    sw = SH'(1); sww = SH'(1) + SH''(1)/2. Both are integers; the half term
    is divided exactly and asserted so.
    """
    sw = sum(m * c for m, c in p.coeffs.items())
    second = sum(m * (m - 1) * c for m, c in p.coeffs.items())
    # m(m-1) is even for every m, so the half term is exact
    return sw, sw + exact_div(second, 2)


def _brute3_moments(d):
    """Sum of d(S) and d(S)^2 over all vertex triples, vectorized.

    Full enumeration: for every triple the branch-vertex minimum is taken over
    all n candidate vertices, in blocked numpy kernels.
    """
    a16 = d.a.astype(np.int16)
    n = a16.shape[0]
    total = 0
    total_sq = 0
    chunk = 16
    for u in range(n - 2):
        pair = a16[u] + a16[u + 1 :]  # row r: d(u,.) + d(v,.), v = u+1+r
        big = pair.shape[0]
        for c0 in range(0, big, chunk):
            c1 = min(c0 + chunk, big)
            w0 = u + 2 + c0  # smallest admissible third vertex in this block
            if w0 >= n:
                break
            tmp = pair[c0:c1, None, :] + a16[None, w0:, :]  # (B, n-w0, n)
            dmin = tmp.min(axis=2).astype(np.int64)  # (B, n-w0)
            for b in range(c1 - c0):
                v = u + 1 + c0 + b
                vals = dmin[b, v + 1 - w0 :]
                total += int(vals.sum())
                total_sq += int((vals * vals).sum())
    return total, total_sq


def steiner_k_indices_brute(g, d, k, guard=None, use_fast_k3=None):
    """(SW_k, SWW_k) by direct subset enumeration.

    ``guard`` caps the number of enumerated subsets. For k = 3 on larger
    graphs a blocked numpy kernel enumerates the same triples much faster.
    """
    if not 1 <= k <= min(g.n, K_MAX):
        raise PreconditionError(f"k must satisfy 1 <= k <= min(n, {K_MAX}), got {k}")
    count = comb(g.n, k)
    if guard is not None and count > guard:
        raise PreconditionError(
            f"C({g.n},{k}) = {count} subsets exceeds the enumeration guard {guard}; "
            "use the cut method, a modular formula, or raise the guard"
        )
    if use_fast_k3 is None:
        use_fast_k3 = k == 3 and g.n >= 64
    if k == 3 and use_fast_k3:
        total, total_sq = _brute3_moments(d)
    else:
        total = 0
        total_sq = 0
        for s in combinations(range(g.n), k):
            ds = steiner_distance(g, d, s)
            total += ds
            total_sq += ds * ds
    sw = total
    sww = exact_div(total + total_sq, 2)
    return sw, sww


def modular_indices_3(d, m, classification):
    """SW_3 and SWW_3 of a modular graph from classical distance moments.

    sw3 = (n-2)/2 * W
    sww3 = (n-2)/4 * W + (n-2)/8 * sum_sq + 1/8 * sum_cross
    Both divisions are exact on modular graphs; a failure raises rather than
    rounds. Refused for non-modular graphs, where the underlying median
    argument breaks down.
    """
    n = d.n
    if n < 3:
        raise PreconditionError("modular k=3 formulas need at least three vertices")
    if not classification.modular:
        witness = classification.witness
        detail = f" (witness triple {witness})" if witness else ""
        raise PreconditionError(f"graph is not modular{detail}")
    sw3 = exact_div((n - 2) * m.wiener, 2)
    sww3 = exact_div(2 * (n - 2) * m.wiener + (n - 2) * m.sum_sq + m.sum_cross, 8)
    return sw3, sww3
