"""Property sweeps over graph and matrix corpora.

Each property is a predicate on one input; a predicate that raises counts as
a failure.  The sweep keeps per-property pass counts and the first
counterexample (as a graph6 string, or matrix text for matrix properties).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import domination, gf2, oracle
from .formats import GRAPH6_MAX_N, emit_edge_list, emit_graph6
from .graph import (
    Graph,
    VertexSet,
    complete,
    cycle,
    degree_parity_profile,
    path,
    random_gnp,
    random_tree,
    star,
)

ORACLE_MAX_N = 10


def sample_graphs(count: int, n_lo: int, n_hi: int, seed: int) -> Iterator[Graph]:
    """Deterministic G(n, p) samples with n uniform in [n_lo, n_hi] and p uniform in [0, 1]."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.random()
        yield random_gnp(n, p, rng.getrandbits(32))


def sample_trees(count: int, n_lo: int, n_hi: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_tree(rng.randint(n_lo, n_hi), rng.getrandbits(32))


def exhaustive_graphs(max_n: int) -> Iterator[Graph]:
    for n in range(1, min(max_n, oracle.MAX_LABELED_N) + 1):
        yield from oracle.all_labeled_graphs(n)


def _directly_odd_dominating(g: Graph, s: VertexSet) -> bool:
    return all(len(g.closed_neighborhood(u) & s) % 2 == 1 for u in range(g.n))


# -- graph properties --------------------------------------------------------


def prop_odd_dominating_valid(g: Graph) -> bool:
    return _directly_odd_dominating(g, domination.odd_dominating_set(g))


def prop_main_theorem(g: Graph) -> bool:
    s = domination.odd_dominating_set(g)
    rho = domination.rank_of(g)
    nu = domination.nullity(g)
    return len(s) % 2 == rho % 2 and (g.n - len(s)) % 2 == nu % 2 and rho + nu == g.n


def prop_report(g: Graph) -> bool:
    domination.parity_theorem_check(g)
    return True


def prop_null_vertex_iff_nd_minus_one(g: Graph) -> bool:
    nulls = domination.null_vertices(g)
    nds = domination.null_differences(g)
    return all(nd in (-1, 0, 1) and ((v in nulls) == (nd == -1)) for v, nd in enumerate(nds))


def prop_avoiding_construction(g: Graph) -> bool:
    for v in domination.null_vertices(g):
        s = domination.odd_dominating_avoiding(g, v)
        if v in s or not _directly_odd_dominating(g, s):
            return False
    return True


def prop_odd_degree_intersection(g: Graph) -> bool:
    s = domination.odd_dominating_set(g)
    d = degree_parity_profile(g)
    return len(d & s) % 2 == domination.nullity(g) % 2


def prop_corollaries(g: Graph) -> bool:
    return all(c.holds for c in domination.corollary_suite(g))


def prop_oracle_agreement(g: Graph) -> bool:
    if g.n > ORACLE_MAX_N:
        return True
    s = domination.odd_dominating_set(g)
    basis = domination.even_dominating_basis(g)
    span = {0}
    for b in basis:
        span |= {x ^ b.members for x in span}
    coset = sorted(s.members ^ k for k in span)
    odd = oracle.enumerate_odd_dominating(g, ORACLE_MAX_N)
    even = oracle.enumerate_even_dominating(g, ORACLE_MAX_N)
    nu = domination.nullity(g)
    if sorted(x.members for x in odd) != coset or len(even) != 2**nu:
        return False
    # every odd dominating set, not just the canonical one, obeys both parity identities
    d = degree_parity_profile(g)
    return all(len(x) % 2 == (g.n - nu) % 2 and len(d & x) % 2 == nu % 2 for x in odd)


GRAPH_PROPERTIES: dict[str, Callable[[Graph], bool]] = {
    "odd_dominating_valid": prop_odd_dominating_valid,
    "main_theorem": prop_main_theorem,
    "report_invariants": prop_report,
    "null_vertex_iff_nd_minus_one": prop_null_vertex_iff_nd_minus_one,
    "avoiding_construction": prop_avoiding_construction,
    "odd_degree_intersection": prop_odd_degree_intersection,
    "corollaries": prop_corollaries,
    "oracle_agreement": prop_oracle_agreement,
}


# -- join and matrix properties ---------------------------------------------


def prop_join(parts: list[Graph]) -> bool:
    a = domination.analyze_join(parts)
    if a.predicted_nullity != a.direct_nullity:
        return False
    if len(parts) == 2:
        (_, r1, n1), (_, r2, n2) = a.parts
        return domination.join_nullity_pairwise(n1, r1, n2, r2) == a.predicted_nullity
    return True


def prop_inverse_parity(m: gf2.Gf2Matrix) -> bool:
    inv = gf2.invert(m)
    if inv is None or m @ inv != gf2.Gf2Matrix.identity(m.rows):
        return False
    p = m.rows % 2
    return gf2.entry_sum_parity(m) == p and gf2.entry_sum_parity(inv) == p


def join_part_pool(rng: random.Random) -> Graph:
    fixed = [complete(1), path(2), path(3), cycle(4), cycle(5), star(4)]
    k = rng.randrange(len(fixed) + 1)
    if k < len(fixed):
        return fixed[k]
    return random_gnp(rng.randint(1, 6), rng.random(), rng.getrandbits(32))


def sample_join_lists(count: int, seed: int) -> Iterator[list[Graph]]:
    rng = random.Random(seed)
    for _ in range(count):
        m = rng.randint(2, 4)
        yield [join_part_pool(rng) for _ in range(m)]


def sample_symmetric_invertible(count: int, seed: int, n_hi: int = 64) -> Iterator[gf2.Gf2Matrix]:
    rng = random.Random(seed)
    for _ in range(count):
        yield gf2.random_symmetric_unit_diagonal_invertible(rng.randint(1, n_hi), rng.getrandbits(32))


# -- sweep driver ------------------------------------------------------------


@dataclass
class PropertyTally:
    passed: int = 0
    total: int = 0


@dataclass
class VerificationSummary:
    tallies: dict[str, PropertyTally] = field(default_factory=dict)
    counterexample: tuple[str, str] | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def record(self, name: str, holds: bool, witness: Callable[[], str]) -> None:
        t = self.tallies.setdefault(name, PropertyTally())
        t.total += 1
        if holds:
            t.passed += 1
        elif self.counterexample is None:
            self.counterexample = (name, witness())


def graph_witness(g: Graph) -> str:
    if g.n <= GRAPH6_MAX_N:
        return emit_graph6(g)
    return emit_edge_list(g)


def _holds(pred: Callable, arg) -> bool:
    try:
        return bool(pred(arg))
    except Exception:  # noqa: BLE001 - any crash on a valid input is a failure
        return False


def check_graphs(summary: VerificationSummary, graphs: Iterable[Graph]) -> None:
    for g in graphs:
        for name, pred in GRAPH_PROPERTIES.items():
            summary.record(name, _holds(pred, g), lambda g=g: graph_witness(g))


def run_verification(max_n: int = 12, trials: int = 300, seed: int = 0) -> VerificationSummary:
    """Exhaustive sweep for n <= min(max_n, 5), then random graphs, joins and matrices."""
    summary = VerificationSummary()
    check_graphs(summary, exhaustive_graphs(max_n))
    if max_n >= 1 and trials > 0:
        check_graphs(summary, sample_graphs(trials, 1, max_n, seed))
        check_graphs(summary, sample_trees(trials // 2, 1, max_n, seed + 1))
        for parts in sample_join_lists(trials, seed + 2):
            summary.record(
                "join_nullity", _holds(prop_join, parts), lambda p=parts: " + ".join(graph_witness(x) for x in p)
            )
        for m in sample_symmetric_invertible(trials, seed + 3):
            summary.record("inverse_parity", _holds(prop_inverse_parity, m), lambda m=m: gf2.format_matrix(m))
    return summary
