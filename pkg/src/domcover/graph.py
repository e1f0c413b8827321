"""Simple undirected graphs on dense 0-based vertex ids, with the domination
predicates and structural decompositions the rest of the toolkit builds on.

Vertex sets are passed in as any iterable of ids and come back as sorted
tuples, so witnesses compare lexicographically and serialize stably.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Iterator

from .errors import DomainError, GraphParseError


class Graph:
    """Immutable simple undirected graph.

    Construction validates everything once: ids in range, no self-loops, no
    duplicate edges.  Adjacency lists are kept sorted ascending so iteration
    order is deterministic everywhere downstream.
    """

    __slots__ = ("n", "_m", "_adj", "_closed", "_open")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DomainError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._m = len(seen)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._closed: list[int] | None = None
        self._open: list[int] | None = None

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        row = self._adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self._adj):
            for v in row:
                if v > u:
                    yield (u, v)

    def has_isolated_vertex(self) -> bool:
        return any(not row for row in self._adj)

    def closed_masks(self) -> list[int]:
        """Per-vertex bitmask of N[v].  Only sensible for small graphs."""
        if self._closed is None:
            self._closed = [
                (1 << v) | _bits(row) for v, row in enumerate(self._adj)
            ]
        return self._closed

    def open_masks(self) -> list[int]:
        """Per-vertex bitmask of N(v)."""
        if self._open is None:
            self._open = [_bits(row) for row in self._adj]
        return self._open

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise DomainError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def _bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def as_vertex_set(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Normalize an iterable of ids to a sorted duplicate-free tuple in V(G)."""
    out = sorted(set(vertices))
    if out and not (0 <= out[0] and out[-1] < g.n):
        bad = out[0] if out[0] < 0 else out[-1]
        raise DomainError(f"vertex {bad} out of range for n={g.n}")
    return tuple(out)


# ---------------------------------------------------------------------------
# Edge-list text format


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line is the header "n m"; exactly m lines "u v"
    follow.  Lines starting with "#" are comments and blank lines are
    skipped.  All ids are decimal.  Malformed lines, out-of-range ids,
    self-loops, duplicate edges (in either orientation), and missing or
    surplus edge lines raise GraphParseError naming the 1-based line number.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two fields, got {len(parts)}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer field") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError(f"line {lineno}: negative count in header")
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise GraphParseError(f"line {lineno}: more than {m} edge lines")
        if not (0 <= a < n and 0 <= b < n):
            bad = a if not (0 <= a < n) else b
            raise GraphParseError(f"line {lineno}: vertex id {bad} out of range for n={n}")
        if a == b:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {a}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise GraphParseError("line 1: missing header")
    if len(edges) != header[1]:
        raise GraphParseError(
            f"line {last_line}: expected {header[1]} edge lines, found {len(edges)}"
        )
    return Graph(header[0], edges)


def write_graph(g: Graph) -> str:
    """Emit the edge-list format: header then edges sorted with u < v."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Domination predicates


def cover_number(g: Graph, vertices: Iterable[int]) -> int:
    """Sum of degrees over a vertex set."""
    return sum(len(g._adj[v]) for v in as_vertex_set(g, vertices))


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex is in d or adjacent to a vertex of d."""
    dset = as_vertex_set(g, d)
    covered = bytearray(g.n)
    adj = g._adj
    for v in dset:
        covered[v] = 1
        for u in adj[v]:
            covered[u] = 1
    return 0 not in covered


def is_total_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex (members included) has a neighbor in d."""
    if g.has_isolated_vertex():
        raise DomainError("total domination is undefined with isolated vertices")
    dset = as_vertex_set(g, d)
    covered = bytearray(g.n)
    adj = g._adj
    for v in dset:
        for u in adj[v]:
            covered[u] = 1
    return 0 not in covered


def is_efficient_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True iff closed neighborhoods of d partition V: each non-member has
    exactly one neighbor in d and members have none."""
    dset = as_vertex_set(g, d)
    hits = [0] * g.n
    member = bytearray(g.n)
    adj = g._adj
    for v in dset:
        member[v] = 1
        for u in adj[v]:
            hits[u] += 1
    for v in range(g.n):
        if member[v]:
            if hits[v] != 0:
                return False
        elif hits[v] != 1:
            return False
    return True


def private_neighbors(g: Graph, v: int, d: Iterable[int]) -> tuple[int, ...]:
    """Vertices dominated by v but by no other member of d (closed sense).

    Requires v in d.  Returns N[v] minus N[d - {v}], sorted ascending.
    """
    dset = as_vertex_set(g, d)
    g._check_vertex(v)
    if v not in dset:
        raise DomainError(f"vertex {v} is not a member of the given set")
    adj = g._adj
    taken = bytearray(g.n)
    for w in dset:
        if w == v:
            continue
        taken[w] = 1
        for u in adj[w]:
            taken[u] = 1
    return tuple(u for u in sorted((v, *adj[v])) if not taken[u])


def is_connected(g: Graph) -> bool:
    """True iff the graph has one component (the empty graph counts as connected)."""
    if g.n <= 1:
        return True
    adj = g._adj
    seen = bytearray(g.n)
    seen[0] = 1
    frontier = [0]
    count = 1
    while frontier:
        v = frontier.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                frontier.append(u)
    return count == g.n


# ---------------------------------------------------------------------------
# Blocks, cut vertices, and hereditary classes


def blocks_and_cut_vertices(g: Graph) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Biconnected components and cut vertices of a connected graph.

    Iterative depth-first low-link computation with an edge stack; linear in
    n + m.  Blocks come back as sorted vertex tuples, the block list itself
    sorted lexicographically.  Disconnected input raises DomainError naming a
    vertex outside the component of vertex 0.
    """
    n = g.n
    if n == 0:
        raise DomainError("empty graph has no block structure")
    if n == 1:
        return ((0,),), ()
    adj = g._adj
    disc = [0] * n
    low = [0] * n
    disc[0] = low[0] = 1
    clock = 1
    cuts: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    estack: list[tuple[int, int]] = []
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, iter(adj[0]))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        child = -1
        for u in it:
            if u == parent:
                continue
            if disc[u] == 0:
                clock += 1
                disc[u] = low[u] = clock
                estack.append((v, u))
                child = u
                break
            if disc[u] < disc[v]:
                estack.append((v, u))
                if disc[u] < low[v]:
                    low[v] = disc[u]
        if child >= 0:
            stack.append((child, v, iter(adj[child])))
            continue
        stack.pop()
        if not stack:
            break
        pv = stack[-1][0]
        if low[v] < low[pv]:
            low[pv] = low[v]
        if low[v] >= disc[pv]:
            members: set[int] = set()
            while True:
                e = estack.pop()
                members.update(e)
                if e == (pv, v):
                    break
            blocks.append(tuple(sorted(members)))
            if pv == 0:
                root_children += 1
            else:
                cuts.add(pv)
    if root_children >= 2:
        cuts.add(0)
    for w in range(n):
        if disc[w] == 0:
            raise DomainError(f"graph is disconnected: vertex {w} is not reachable from 0")
    return tuple(sorted(blocks)), tuple(sorted(cuts))


def is_block_graph(g: Graph) -> bool:
    """True iff every block of the (connected) graph induces a clique."""
    blocks, _ = blocks_and_cut_vertices(g)
    edge_set = {(u, v) for u, v in g.edges()}
    for block in blocks:
        k = len(block)
        for i in range(k):
            for j in range(i + 1, k):
                if (block[i], block[j]) not in edge_set:
                    return False
    return True


def is_p4_free(g: Graph) -> bool:
    """True iff no 4 vertices induce a path.

    Plain quartic scan: an induced subgraph on 4 vertices is a path exactly
    when it has 3 edges and degree multiset {1, 1, 2, 2}.
    """
    n = g.n
    edge_set = {(u, v) for u, v in g.edges()}
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    quad = (a, b, c, d)
                    degs = [0, 0, 0, 0]
                    count = 0
                    for i in range(4):
                        for j in range(i + 1, 4):
                            if (quad[i], quad[j]) in edge_set:
                                count += 1
                                degs[i] += 1
                                degs[j] += 1
                    if count == 3 and sorted(degs) == [1, 1, 2, 2]:
                        return False
    return True
