"""Brute-force reference enumerations.

Deliberately naive: every subset is tested by counting ``|N[u] & S|`` with
plain integer arithmetic.  Nothing here touches the GF(2) module.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, VertexSet

DEFAULT_LIMIT = 12
HARD_CAP = 20
MAX_LABELED_N = 5
MAX_LABELED_N_EXTENDED = 6


def _closed_neighborhoods(g: Graph) -> list[list[int]]:
    return [[u] + [w for w in range(g.n) if g.has_edge(u, w)] for u in range(g.n)]


def _enumerate(g: Graph, limit: int, want_odd: int) -> list[VertexSet]:
    if limit > HARD_CAP:
        raise ValueError(f"limit {limit} exceeds hard cap {HARD_CAP}")
    if g.n > limit:
        raise ValueError(f"graph has {g.n} vertices, oracle limit is {limit}")
    hoods = _closed_neighborhoods(g)
    found = []
    for mask in range(1 << g.n):
        for hood in hoods:
            count = 0
            for w in hood:
                count += (mask >> w) & 1
            if count % 2 != want_odd:
                break
        else:
            found.append(mask)
    found.sort(key=lambda m: (bin(m).count("1"), m))
    return [VertexSet(g.n, m) for m in found]


def enumerate_odd_dominating(g: Graph, limit: int = DEFAULT_LIMIT) -> list[VertexSet]:
    """All S with ``|N[u] & S|`` odd for every vertex u, sorted by (size, mask)."""
    return _enumerate(g, limit, 1)


def enumerate_even_dominating(g: Graph, limit: int = DEFAULT_LIMIT) -> list[VertexSet]:
    return _enumerate(g, limit, 0)


def enumerate_parity_sets(g: Graph, target: VertexSet, limit: int = DEFAULT_LIMIT) -> list[VertexSet]:
    """All S whose closed-neighbourhood counts are odd exactly on ``target``."""
    if limit > HARD_CAP or g.n > limit:
        raise ValueError(f"graph has {g.n} vertices, oracle limit is {min(limit, HARD_CAP)}")
    hoods = _closed_neighborhoods(g)
    want = [int(u in target) for u in range(g.n)]
    found = []
    for mask in range(1 << g.n):
        if all(sum((mask >> w) & 1 for w in hood) % 2 == want[u] for u, hood in enumerate(hoods)):
            found.append(VertexSet(g.n, mask))
    return found


def brute_nullity(g: Graph, limit: int = DEFAULT_LIMIT) -> int:
    """log2 of the number of even dominating sets."""
    return len(enumerate_even_dominating(g, limit)).bit_length() - 1


def all_labeled_graphs(n: int, allow_six: bool = False) -> Iterator[Graph]:
    """Every labelled simple graph on n vertices, ordered by upper-triangle bitmask.

    Bit k of the mask is the k-th pair ``(i, j)``, ``i < j``, in row-major order.
    """
    cap = MAX_LABELED_N_EXTENDED if allow_six else MAX_LABELED_N
    if n < 0 or n > cap:
        raise ValueError(f"n must be in 0..{cap} (n=6 needs allow_six=True)")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (mask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, adj)
