"""Simple undirected graphs with a fixed vertex order.

Vertices are ``0 .. n-1`` internally; each vertex keeps its open
neighbourhood as an integer bitset.  Vertex ``i`` is column ``i`` of the
closed-neighbourhood matrix.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

from .gf2 import Gf2Matrix, Gf2Vector


class VertexSet:
    """Subset of ``{0, ..., universe_size - 1}`` stored as a bitmask."""

    __slots__ = ("_size", "_members")

    def __init__(self, universe_size: int, members: int = 0):
        if universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        if members < 0 or members >> universe_size:
            raise ValueError(f"members outside universe of size {universe_size}")
        self._size = universe_size
        self._members = members

    @classmethod
    def of(cls, universe_size: int, indices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in indices:
            if not 0 <= v < universe_size:
                raise ValueError(f"vertex {v} outside universe of size {universe_size}")
            bits |= 1 << v
        return cls(universe_size, bits)

    @classmethod
    def full(cls, universe_size: int) -> VertexSet:
        return cls(universe_size, (1 << universe_size) - 1)

    @classmethod
    def from_vector(cls, vec: Gf2Vector) -> VertexSet:
        return cls(vec.length, vec.bits)

    def to_vector(self) -> Gf2Vector:
        return Gf2Vector(self._size, self._members)

    @property
    def universe_size(self) -> int:
        return self._size

    @property
    def members(self) -> int:
        return self._members

    def indices(self) -> list[int]:
        m = self._members
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def one_based(self) -> list[int]:
        return [v + 1 for v in self.indices()]

    def complement(self) -> VertexSet:
        return VertexSet(self._size, ((1 << self._size) - 1) ^ self._members)

    def _check(self, other: VertexSet) -> None:
        if other._size != self._size:
            raise ValueError(f"universe sizes differ: {self._size} vs {other._size}")

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self._size, self._members ^ other._members)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self._size, self._members & other._members)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self._size, self._members | other._members)

    symmetric_difference = __xor__

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self._size and bool((self._members >> v) & 1)

    def __len__(self) -> int:
        return self._members.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._size == other._size and self._members == other._members

    def __hash__(self) -> int:
        return hash((self._size, self._members))

    def __repr__(self) -> str:
        return f"VertexSet({self._size}, {self.one_based()})"


class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise ValueError(f"expected {n} neighbour sets, got {len(adj)}")
        for v, nb in enumerate(adj):
            if nb < 0 or nb >> n:
                raise ValueError(f"vertex {v} has neighbours outside range")
            if (nb >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            u_bits = nb
            while u_bits:
                low = u_bits & -u_bits
                u = low.bit_length() - 1
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                u_bits ^= low
        self._n = n
        self._adj = adj

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        g._n, g._adj = n, adj
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return VertexSet(self._n, self._adj[v]).indices()

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self._n, self._adj[v] | (1 << v))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self._adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, nb in enumerate(self._adj):
            higher = nb >> (u + 1)
            while higher:
                low = higher & -higher
                out.append((u, u + low.bit_length()))
                higher ^= low
        return out

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self._adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self._n) - 1

    def is_tree(self) -> bool:
        return self._n >= 1 and self.num_edges() == self._n - 1 and self.is_connected()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={[(u + 1, v + 1) for u, v in self.edges()]})"


def closed_neighborhood_matrix(g: Graph) -> Gf2Matrix:
    """N(G) = A + I.  Symmetric, so row i doubles as column i."""
    return Gf2Matrix._trusted(g.n, g.n, tuple(nb | (1 << v) for v, nb in enumerate(g.adj)))


def _drop_bit(x: int, v: int) -> int:
    return (x & ((1 << v) - 1)) | ((x >> (v + 1)) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    adj = tuple(_drop_bit(nb, v) for u, nb in enumerate(g.adj) if u != v)
    return Graph._trusted(g.n - 1, adj)


def join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union of ``parts`` plus every edge between different parts."""
    if not parts:
        raise ValueError("join needs at least one graph")
    total = sum(p.n for p in parts)
    everything = (1 << total) - 1
    adj: list[int] = []
    offset = 0
    for p in parts:
        block = ((1 << p.n) - 1) << offset
        outside = everything & ~block
        adj.extend((nb << offset) | outside for nb in p.adj)
        offset += p.n
    return Graph._trusted(total, tuple(adj))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for p in parts:
        adj.extend(nb << offset for nb in p.adj)
        offset += p.n
    return Graph._trusted(offset, tuple(adj))


def degree_parity_profile(g: Graph) -> VertexSet:
    """The set of odd-degree vertices."""
    bits = 0
    for v, nb in enumerate(g.adj):
        if nb.bit_count() & 1:
            bits |= 1 << v
    return VertexSet(g.n, bits)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def empty(n: int) -> Graph:
    _require(n >= 1, "n must be at least 1")
    return Graph(n)


def path(n: int) -> Graph:
    _require(n >= 1, "n must be at least 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(n >= 3, "a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _require(n >= 1, "n must be at least 1")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def star(n: int) -> Graph:
    """Vertex 0 joined to ``n - 1`` leaves, so ``star(4)`` is K_{1,3}."""
    _require(n >= 1, "n must be at least 1")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def random_gnp(n: int, p: float, seed: int) -> Graph:
    _require(n >= 1, "n must be at least 1")
    _require(0.0 <= p <= 1.0, "p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Random-attachment tree: vertex i hangs off a uniform earlier vertex."""
    _require(n >= 1, "n must be at least 1")
    rng = random.Random(seed)
    return Graph.from_edges(n, ((rng.randrange(i), i) for i in range(1, n)))
