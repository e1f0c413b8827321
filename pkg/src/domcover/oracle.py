"""Exhaustive ground truth for domination invariants on small graphs.

Everything here enumerates over vertex-subset bitmaps and is intentionally
exponential; a hard cap keeps calls at desk scale.  Minimum sizes come from
an increasing-cardinality branch search (branching on the lowest uncovered
vertex over its possible dominators), full enumeration from a lexicographic
combination scan, so ties always resolve to the lexicographically smallest
witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import CapacityError, DomainError
from .graph import Graph

ORACLE_CAP = 26


@dataclass(frozen=True)
class DominationReport:
    """Extrema of the degree-sum cover over all minimum (total) dominating sets."""

    mode: str  # "plain" or "total"
    size: int
    cover_min: int
    cover_max: int
    witness_min: tuple[int, ...]
    witness_max: tuple[int, ...]


def _check(g: Graph) -> None:
    if g.n == 0:
        raise DomainError("empty graph")
    if g.n > ORACLE_CAP:
        raise CapacityError(f"n={g.n} exceeds the exhaustive cap of {ORACLE_CAP}")


def _min_cover_size(masks: list[int], dominators: list[tuple[int, ...]], n: int) -> int:
    """Smallest k such that k of the given masks union to the full set.

    dominators[v] lists, ascending, the indices whose mask covers v.
    """
    full = (1 << n) - 1
    maxcov = max(m.bit_count() for m in masks)

    def feasible(covered: int, budget: int) -> bool:
        if covered == full:
            return True
        if budget == 0:
            return False
        remaining = full & ~covered
        if remaining.bit_count() > budget * maxcov:
            return False
        v = (remaining & -remaining).bit_length() - 1
        for w in dominators[v]:
            if feasible(covered | masks[w], budget - 1):
                return True
        return False

    lower = -(-n // maxcov)
    for k in range(lower, n + 1):
        if feasible(0, k):
            return k
    raise AssertionError("full vertex set always dominates")


def gamma(g: Graph) -> int:
    """Domination number, by increasing-cardinality exhaustive search."""
    _check(g)
    masks = g.closed_masks()
    dominators = [tuple(sorted((v, *g.adjacency[v]))) for v in range(g.n)]
    return _min_cover_size(masks, dominators, g.n)


def gamma_total(g: Graph) -> int:
    """Total domination number: every vertex needs a neighbor in the set."""
    _check(g)
    if g.has_isolated_vertex():
        raise DomainError("total domination is undefined with isolated vertices")
    masks = g.open_masks()
    dominators = [g.adjacency[v] for v in range(g.n)]
    return _min_cover_size(masks, dominators, g.n)


def _iter_covering_sets(g: Graph, masks: list[int], k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets whose masks union to V, in lexicographic order."""
    full = (1 << g.n) - 1
    for combo in combinations(range(g.n), k):
        m = 0
        for i in combo:
            m |= masks[i]
        if m == full:
            yield combo


def enumerate_gamma_sets(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Every minimum dominating set, lexicographically ordered."""
    return tuple(_iter_covering_sets(g, g.closed_masks(), gamma(g)))


def _extrema_report(g: Graph, masks: list[int], k: int, mode: str) -> DominationReport:
    degs = g.degrees()
    cover_min = cover_max = -1
    wit_min: tuple[int, ...] = ()
    wit_max: tuple[int, ...] = ()
    for combo in _iter_covering_sets(g, masks, k):
        c = sum(degs[i] for i in combo)
        if cover_min < 0 or c < cover_min:
            cover_min, wit_min = c, combo
        if c > cover_max:
            cover_max, wit_max = c, combo
    return DominationReport(mode, k, cover_min, cover_max, wit_min, wit_max)


def cover_extrema(g: Graph) -> DominationReport:
    """Min and max degree-sum cover over all minimum dominating sets.

    Ties go to the lexicographically smallest attaining set.
    """
    return _extrema_report(g, g.closed_masks(), gamma(g), "plain")


def total_cover_extrema(g: Graph) -> DominationReport:
    """Min and max cover over all minimum total dominating sets."""
    return _extrema_report(g, g.open_masks(), gamma_total(g), "total")


def has_efficient_dominating_set(g: Graph) -> tuple[int, ...] | None:
    """An efficient dominating set (closed neighborhoods partition V), or None.

    Enumerates every such set by exact-cover search on the lowest uncovered
    vertex and returns the lexicographically smallest.
    """
    _check(g)
    masks = g.closed_masks()
    dominators = [tuple(sorted((v, *g.adjacency[v]))) for v in range(g.n)]
    full = (1 << g.n) - 1
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def search(covered: int) -> None:
        if covered == full:
            found.append(tuple(sorted(chosen)))
            return
        v = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        for w in dominators[v]:
            mw = masks[w]
            if mw & covered:
                continue
            chosen.append(w)
            search(covered | mw)
            chosen.pop()

    search(0)
    return min(found) if found else None
