"""Parity domination on closed-neighbourhood matrices.

A set S is a C-parity set when ``|N[u] & S|`` is odd exactly for u in C,
i.e. ``N(G) x_S = x_C`` over GF(2).  Odd dominating sets are the C = V case,
even dominating sets the C = {} case (the kernel of N(G)).

Results that are theorems (odd-dominating-set parity equals rank parity, the
odd-degree intersection identity, the join nullity formula) are asserted
when the corresponding report is built.  A violation raises
:class:`InvariantError`: it means this code is wrong, not the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf2
from .gf2 import Gf2Vector
from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood_matrix,
    degree_parity_profile,
    delete_vertex,
    join,
)


class InvariantError(AssertionError):
    """A proved identity failed; the implementation is broken."""


class PreconditionError(ValueError):
    pass


def _require_universe(g: Graph, s: VertexSet) -> None:
    if s.universe_size != g.n:
        raise ValueError(f"vertex set over {s.universe_size} vertices, graph has {g.n}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


@dataclass(frozen=True)
class ParitySolution:
    target: VertexSet
    solution: VertexSet | None
    nullity: int

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def solve_parity(g: Graph, target: VertexSet) -> ParitySolution:
    _require_universe(g, target)
    n_mat = closed_neighborhood_matrix(g)
    x = gf2.solve(n_mat, target.to_vector())
    return ParitySolution(
        target=target,
        solution=None if x is None else VertexSet.from_vector(x),
        nullity=g.n - gf2.rank(n_mat),
    )


def odd_dominating_set(g: Graph) -> VertexSet:
    """Canonical odd dominating set (free variables of the system set to 0)."""
    x = gf2.solve(closed_neighborhood_matrix(g), Gf2Vector.ones(g.n))
    if x is None:
        raise InvariantError(f"no odd dominating set found for {g!r}; every graph has one")
    return VertexSet.from_vector(x)


def even_dominating_basis(g: Graph) -> list[VertexSet]:
    return [VertexSet.from_vector(v) for v in gf2.kernel_basis(closed_neighborhood_matrix(g))]


def nullity(g: Graph) -> int:
    return g.n - gf2.rank(closed_neighborhood_matrix(g))


def rank_of(g: Graph) -> int:
    return gf2.rank(closed_neighborhood_matrix(g))


def null_vertices(g: Graph) -> VertexSet:
    """Vertices lying in some even dominating set: the union of kernel-basis supports."""
    bits = 0
    for r in even_dominating_basis(g):
        bits |= r.members
    return VertexSet(g.n, bits)


def null_difference(g: Graph, v: int, base_nullity: int | None = None) -> int:
    """``nullity(G - v) - nullity(G)``; always one of -1, 0, 1."""
    _check_vertex(g, v)
    if base_nullity is None:
        base_nullity = nullity(g)
    nd = nullity(delete_vertex(g, v)) - base_nullity
    if nd not in (-1, 0, 1):
        raise InvariantError(f"null difference {nd} at vertex {v} of {g!r}")
    return nd


def null_differences(g: Graph) -> tuple[int, ...]:
    base = nullity(g)
    return tuple(null_difference(g, v, base) for v in range(g.n))


def is_odd_dominating(g: Graph, s: VertexSet) -> bool:
    n_mat = closed_neighborhood_matrix(g)
    return (n_mat @ s.to_vector()) == Gf2Vector.ones(g.n)


def odd_dominating_avoiding(g: Graph, v: int) -> VertexSet:
    """An odd dominating set without ``v``, for a null vertex ``v``.

    Starts from the canonical odd dominating set; if it contains ``v``, adds
    (symmetric difference) an even dominating set through ``v``.  A kernel
    element through ``v`` exists iff some basis vector contains ``v``.
    """
    _check_vertex(g, v)
    through_v = next((r for r in even_dominating_basis(g) if v in r), None)
    if through_v is None:
        raise PreconditionError(f"vertex {v + 1} is not a null vertex (it lies in no even dominating set)")
    s = odd_dominating_set(g)
    if v in s:
        s = s ^ through_v
    if v in s or not is_odd_dominating(g, s):
        raise InvariantError(f"avoiding construction failed at vertex {v} of {g!r}")
    return s


def odd_degree_intersection_parity(g: Graph) -> int:
    """Parity of how many odd-degree vertices the canonical odd dominating set holds."""
    s = odd_dominating_set(g)
    value = len(degree_parity_profile(g) & s) & 1
    if value != nullity(g) & 1:
        raise InvariantError(f"odd-degree intersection parity {value} != nullity parity for {g!r}")
    return value


@dataclass(frozen=True)
class DominationReport:
    order: int
    rank: int
    nullity: int
    odd_dominating: VertexSet
    odd_parity: int
    rank_parity: int
    null_vertices: VertexSet
    null_differences: tuple[int, ...]
    odd_degree_intersection_parity: int
    always_solvable: bool

    def __post_init__(self) -> None:
        if self.rank + self.nullity != self.order:
            raise InvariantError(f"rank {self.rank} + nullity {self.nullity} != order {self.order}")
        if self.odd_parity != len(self.odd_dominating) & 1:
            raise InvariantError("odd_parity does not match |S|")
        if self.odd_parity != self.rank_parity:
            raise InvariantError(
                f"|S| = {len(self.odd_dominating)} and rank {self.rank} have different parity"
            )
        if self.always_solvable != (self.nullity == 0):
            raise InvariantError("always_solvable disagrees with nullity == 0")
        if self.odd_degree_intersection_parity != self.nullity & 1:
            raise InvariantError("odd-degree intersection parity differs from nullity parity")
        if len(self.null_differences) != self.order:
            raise InvariantError("one null difference per vertex expected")


def parity_theorem_check(g: Graph) -> DominationReport:
    """Compute every report field and assert the parity identities among them."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    n_mat = closed_neighborhood_matrix(g)
    red = gf2.rref(n_mat)
    nu = g.n - red.rank
    s = odd_dominating_set(g)
    null_bits = 0
    for k in red.kernel_basis:
        null_bits |= k.bits
    d = degree_parity_profile(g)
    return DominationReport(
        order=g.n,
        rank=red.rank,
        nullity=nu,
        odd_dominating=s,
        odd_parity=len(s) & 1,
        rank_parity=red.rank & 1,
        null_vertices=VertexSet(g.n, null_bits),
        null_differences=tuple(null_difference(g, v, nu) for v in range(g.n)),
        odd_degree_intersection_parity=len(d & s) & 1,
        always_solvable=(nu == 0),
    )


# ---------------------------------------------------------------------------
# corollaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorollaryCheck:
    claim: str
    applicable: bool
    holds: bool

    @property
    def marker(self) -> str:
        if not self.applicable:
            return "n/a"
        return "ok" if self.holds else "FAIL"


def corollary_suite(g: Graph) -> list[CorollaryCheck]:
    """Evaluate the three corollaries whose hypotheses depend on the graph.

    ``always_solvable_size_parity``: if nullity is 0, |S| has the parity of n.
    ``even_degrees_even_nullity``: if all degrees are even, nullity is even.
    ``tree_odd_size``: in a tree with at most one even-degree vertex, |S| is odd.
    Inapplicable claims are reported as holding, flagged ``applicable=False``.
    """
    nu = nullity(g)
    size = len(odd_dominating_set(g))
    degrees = g.degrees()
    even_count = sum(1 for deg in degrees if deg % 2 == 0)

    checks = []
    if nu == 0:
        checks.append(CorollaryCheck("always_solvable_size_parity", True, size % 2 == g.n % 2))
    else:
        checks.append(CorollaryCheck("always_solvable_size_parity", False, True))
    if even_count == g.n:
        checks.append(CorollaryCheck("even_degrees_even_nullity", True, nu % 2 == 0))
    else:
        checks.append(CorollaryCheck("even_degrees_even_nullity", False, True))
    if g.is_tree() and even_count <= 1:
        checks.append(CorollaryCheck("tree_odd_size", True, size % 2 == 1))
    else:
        checks.append(CorollaryCheck("tree_odd_size", False, True))
    return checks


# ---------------------------------------------------------------------------
# joins
# ---------------------------------------------------------------------------


def join_nullity_pairwise(nu1: int, rho1: int, nu2: int, rho2: int) -> int:
    return nu1 + nu2 + ((rho1 * rho2) & 1)


def join_nullity_mary(parts: Sequence[tuple[int, int]]) -> int:
    """Nullity of a join from per-part ``(nullity, rank)`` pairs.

    With j parts of odd rank: the nullities add up, plus ``j - 1`` when j > 0.
    """
    if not parts:
        raise ValueError("need at least one part")
    total = sum(nu for nu, _ in parts)
    j = sum(1 for _, rho in parts if rho % 2 == 1)
    return total if j == 0 else total + j - 1


@dataclass(frozen=True)
class JoinAnalysis:
    parts: tuple[tuple[int, int, int], ...]
    odd_rank_count: int
    predicted_nullity: int
    direct_nullity: int

    def __post_init__(self) -> None:
        if self.predicted_nullity != self.direct_nullity:
            raise InvariantError(
                f"join nullity formula gives {self.predicted_nullity}, elimination gives {self.direct_nullity}"
            )


def analyze_join(parts: Sequence[Graph]) -> JoinAnalysis:
    if not parts:
        raise ValueError("need at least one part")
    stats = []
    for p in parts:
        rho = rank_of(p)
        stats.append((p.n, rho, p.n - rho))
    return JoinAnalysis(
        parts=tuple(stats),
        odd_rank_count=sum(1 for _, rho, _ in stats if rho % 2 == 1),
        predicted_nullity=join_nullity_mary([(nu, rho) for _, rho, nu in stats]),
        direct_nullity=nullity(join(parts)),
    )
