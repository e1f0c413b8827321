"""Shared graph corpora for the test suite.

Builders are cached so the expensive enumerations (isomorphism classes of
small connected graphs, all small trees) run once per session no matter how
many test modules import them.
"""

from __future__ import annotations

import itertools
import random
from functools import cache
from math import factorial

from domcover import Graph, random_block_graph, random_tree

Edge = tuple[int, int]


def _refine_colors(n: int, adj: list[list[int]]) -> list[int]:
    """Iterated degree refinement; color ids are isomorphism-invariant."""
    colors = [len(adj[v]) for v in range(n)]
    colors = _densify(colors)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)
        ]
        fresh = _densify(sigs)
        if fresh == colors:
            return colors
        colors = fresh


def _densify(keys: list) -> list[int]:
    order = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


def canonical_key(n: int, edges: tuple[Edge, ...]) -> tuple[int, int]:
    """Canonical form: minimum edge bitmask over color-respecting relabelings.

    Only permutations that keep refined color classes intact can be
    isomorphisms, so the search space collapses for all but the most
    symmetric graphs.  Intended for n <= 8 or so.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    colors = _refine_colors(n, adj)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    offsets = []
    pos = 0
    for block in blocks:
        offsets.append(pos)
        pos += len(block)
    assert all(factorial(len(b)) <= 40320 for b in blocks)

    best = None
    label = [0] * n
    for arrangement in itertools.product(
        *(itertools.permutations(block) for block in blocks)
    ):
        for block_vertices, off in zip(arrangement, offsets):
            for i, v in enumerate(block_vertices):
                label[v] = off + i
        mask = 0
        for u, v in edges:
            a, b = label[u], label[v]
            if a > b:
                a, b = b, a
            mask |= 1 << (a * n + b)
        if best is None or mask < best:
            best = mask
    return n, 0 if best is None else best


@cache
def connected_graphs(max_n: int = 7) -> tuple[Graph, ...]:
    """One representative per isomorphism class, 2 <= n <= max_n.

    Vertex augmentation: every connected graph arises from a connected graph
    one vertex smaller by attaching the new vertex to a nonempty subset
    (remove a spanning-tree leaf to see this), so breadth-first growth with
    canonical-form deduplication visits each class exactly once.
    """
    level: dict[tuple[int, int], tuple[Edge, ...]] = {canonical_key(1, ()): ()}
    out: list[Graph] = []
    for n in range(2, max_n + 1):
        grown: dict[tuple[int, int], tuple[Edge, ...]] = {}
        for edges in level.values():
            for r in range(1, n):
                for subset in itertools.combinations(range(n - 1), r):
                    cand = edges + tuple((v, n - 1) for v in subset)
                    key = canonical_key(n, cand)
                    if key not in grown:
                        grown[key] = cand
        level = grown
        out.extend(Graph(n, edges) for edges in level.values())
    return tuple(out)


def _tree_code(adj: list[list[int]], root: int, banned: int) -> tuple:
    """AHU code of the subtree at root, never crossing into `banned`."""
    code: dict[int, tuple] = {}
    stack = [(root, banned, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            code[v] = tuple(sorted(code[u] for u in adj[v] if u != parent))
        else:
            stack.append((v, parent, True))
            stack.extend((u, v, False) for u in adj[v] if u != parent)
    return code[root]


def tree_key(n: int, edges: tuple[Edge, ...]) -> tuple:
    """Canonical form for trees: AHU code rooted at the center."""
    if n == 1:
        return (1, ())
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(adj[v]) for v in range(n)]
    frontier = [v for v in range(n) if deg[v] == 1]
    alive = n
    while alive > 2:
        nxt = []
        alive -= len(frontier)
        for v in frontier:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        frontier = nxt
    centers = sorted(frontier)
    if len(centers) == 1:
        return (1, _tree_code(adj, centers[0], -1))
    c1, c2 = centers
    halves = sorted((_tree_code(adj, c1, c2), _tree_code(adj, c2, c1)))
    return (2, tuple(halves))


@cache
def all_trees(max_n: int = 10) -> tuple[Graph, ...]:
    """One tree per isomorphism class, 1 <= n <= max_n, via leaf growth."""
    level: dict[tuple, tuple[Edge, ...]] = {tree_key(1, ()): ()}
    out: list[Graph] = [Graph(1, ())]
    for n in range(2, max_n + 1):
        grown: dict[tuple, tuple[Edge, ...]] = {}
        for edges in level.values():
            for v in range(n - 1):
                cand = edges + ((v, n - 1),)
                key = tree_key(n, cand)
                if key not in grown:
                    grown[key] = cand
        level = grown
        out.extend(Graph(n, edges) for edges in level.values())
    return tuple(out)


def _partitions(total: int, max_part: int) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    out = []
    for part in range(min(total, max_part), 0, -1):
        out.extend((part, *rest) for rest in _partitions(total - part, part))
    return out


def spider(legs: tuple[int, ...]) -> Graph:
    """Center vertex 0 with one path of each given length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(edges))


@cache
def spiders(max_n: int = 15) -> tuple[Graph, ...]:
    """All spiders (exactly one vertex of degree >= 3) with n <= max_n.

    Distinct leg-length multisets give non-isomorphic trees, so partitions
    of n - 1 into at least three parts enumerate them without deduping.
    """
    out = []
    for n in range(4, max_n + 1):
        for parts in _partitions(n - 1, n - 1):
            if len(parts) >= 3:
                out.append(spider(parts))
    return tuple(out)


@cache
def random_connected(count: int = 200, max_n: int = 12) -> tuple[Graph, ...]:
    """Seeded connected graphs: random tree skeleton plus extra edges."""
    out = []
    for seed in range(count):
        rng = random.Random(10_000 + seed)
        n = rng.randint(2, max_n)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        extra = rng.choice((0.0, 0.1, 0.25, 0.5))
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in edges and rng.random() < extra:
                    edges.add((u, v))
        out.append(Graph(n, tuple(sorted(edges))))
    return tuple(out)


@cache
def random_trees(count: int = 500, max_n: int = 15) -> tuple[Graph, ...]:
    out = []
    for seed in range(count):
        n = random.Random(20_000 + seed).randint(2, max_n)
        out.append(random_tree(n, seed=seed))
    return tuple(out)


@cache
def random_block_graphs(count: int = 300, max_n: int = 14) -> tuple[Graph, ...]:
    out = []
    for seed in range(count):
        n = random.Random(30_000 + seed).randint(2, max_n)
        out.append(random_block_graph(n, seed=seed))
    return tuple(out)


def _clique(vertices: tuple[int, ...]) -> tuple[Edge, ...]:
    return tuple(itertools.combinations(vertices, 2))


def glued_cliques() -> tuple[Graph, ...]:
    """Hand-built block graphs: cliques glued at single shared vertices."""
    return (
        Graph(7, _clique((0, 1, 2, 3)) + _clique((3, 4, 5, 6))),
        Graph(7, _clique((0, 1, 2)) + _clique((2, 3, 4)) + _clique((4, 5, 6))),
        Graph(7, _clique((0, 1, 2)) + _clique((0, 3, 4)) + _clique((0, 5, 6))),
        Graph(8, _clique((0, 1, 2, 3, 4)) + ((4, 5),) + _clique((5, 6, 7))),
        Graph(7, _clique((0, 1, 2)) + ((1, 3),) + _clique((3, 4, 5)) + ((5, 6),)),
    )
