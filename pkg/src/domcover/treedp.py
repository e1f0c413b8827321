"""Linear-time cover extrema on trees.

Three states per vertex make the bottom-up recursion sound on every tree,
including stars and short paths rooted at a leaf:

  IN        the vertex is selected;
  OUT_DOM   not selected, dominated by one of its children;
  OUT_FREE  not selected and not yet dominated (its parent must be selected).

Each state carries the best (size, cover) pair, compared lexicographically
with size strictly first, so the result ranges only over minimum dominating
sets.  Covers are degree sums in the whole tree, not the subtree.  For the
max objective the cover component is negated internally so one comparison
path serves both objectives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph

_INF = 1 << 40


@dataclass(frozen=True)
class RootedTree:
    """A tree with parent pointers and a children-before-parents order."""

    graph: Graph
    root: int
    parent: tuple[int | None, ...]
    post_order: tuple[int, ...]


@dataclass(frozen=True)
class CoverSolution:
    """One objective's answer: a witness minimum dominating set and its cover."""

    objective: str  # "min" or "max"
    size: int
    cover: int
    witness: tuple[int, ...]


def root_tree(g: Graph, root: int = 0) -> RootedTree:
    """Validate that g is a tree and orient it away from the root.

    The returned post_order is the reversed breadth-first order, so children
    always precede their parent.  Non-trees raise DomainError.
    """
    n = g.n
    if n == 0:
        raise DomainError("empty graph is not a tree")
    g._check_vertex(root)
    if g.m != n - 1:
        raise DomainError(f"not a tree: {g.m} edges, expected {n - 1}")
    adj = g.adjacency
    parent: list[int | None] = [None] * n
    seen = bytearray(n)
    seen[root] = 1
    visit = [root]
    i = 0
    while i < len(visit):
        v = visit[i]
        i += 1
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                parent[u] = v
                visit.append(u)
    if len(visit) != n:
        w = seen.index(0)
        raise DomainError(f"not a tree: vertex {w} is not reachable from {root}")
    return RootedTree(g, root, tuple(parent), tuple(reversed(visit)))


def solve_tree(tree: RootedTree, objective: str) -> CoverSolution:
    """Cover extremum over all minimum dominating sets of the tree.

    Single bottom-up pass, O(n).  Ties between child states break toward
    IN, then OUT_DOM, then OUT_FREE; swap ties toward the smaller child id,
    so witnesses are deterministic.
    """
    if objective not in ("min", "max"):
        raise DomainError(f"objective must be 'min' or 'max', got {objective!r}")
    sign = 1 if objective == "min" else -1
    g = tree.graph
    n = g.n
    adj = g.adjacency
    parent = tree.parent
    in_s = [0] * n
    in_c = [0] * n
    dom_s = [0] * n
    dom_c = [0] * n
    fr_s = [0] * n
    fr_c = [0] * n
    ch_in = [0] * n   # child's state when its parent is IN
    ch_out = [0] * n  # child's state when its parent is OUT_DOM (before swap)
    swap = [-1] * n   # child forced to IN so OUT_DOM has a selected child

    for v in tree.post_order:
        pv = parent[v]
        row = adj[v]
        s_in = 1
        c_in = sign * len(row)
        s_dom = 0
        c_dom = 0
        s_fr = 0
        c_fr = 0
        has_in_child = False
        bd_s = _INF
        bd_c = 0
        sw = -1
        nchild = 0
        for u in row:
            if u == pv:
                continue
            nchild += 1
            ius = in_s[u]
            iuc = in_c[u]
            dus = dom_s[u]
            duc = dom_c[u]
            # parent IN: child may be anything, a FREE child gets dominated here
            bs = ius
            bc = iuc
            st = 0
            if dus < bs or (dus == bs and duc < bc):
                bs = dus
                bc = duc
                st = 1
            fus = fr_s[u]
            fuc = fr_c[u]
            if fus < bs or (fus == bs and fuc < bc):
                bs = fus
                bc = fuc
                st = 2
            s_in += bs
            c_in += bc
            ch_in[u] = st
            # parent OUT: child must be dominated inside its own subtree
            if ius < dus or (ius == dus and iuc <= duc):
                s_dom += ius
                c_dom += iuc
                ch_out[u] = 0
                has_in_child = True
            else:
                s_dom += dus
                c_dom += duc
                ch_out[u] = 1
                ds = ius - dus
                dc = iuc - duc
                if ds < bd_s or (ds == bd_s and dc < bd_c):
                    bd_s = ds
                    bd_c = dc
                    sw = u
            s_fr += dus
            c_fr += duc
        if nchild == 0:
            in_s[v] = 1
            in_c[v] = sign * len(row)
            dom_s[v] = _INF
            dom_c[v] = 0
            fr_s[v] = 0
            fr_c[v] = 0
            continue
        in_s[v] = s_in
        in_c[v] = c_in
        if not has_in_child:
            s_dom += bd_s
            c_dom += bd_c
            swap[v] = sw
        if s_dom >= _INF:
            dom_s[v] = _INF
            dom_c[v] = 0
        else:
            dom_s[v] = s_dom
            dom_c[v] = c_dom
        if s_fr >= _INF:
            fr_s[v] = _INF
            fr_c[v] = 0
        else:
            fr_s[v] = s_fr
            fr_c[v] = c_fr

    r = tree.root
    if in_s[r] < dom_s[r] or (in_s[r] == dom_s[r] and in_c[r] <= dom_c[r]):
        state, size, scov = 0, in_s[r], in_c[r]
    else:
        state, size, scov = 1, dom_s[r], dom_c[r]

    selected: list[int] = []
    stack = [(r, state)]
    while stack:
        v, st = stack.pop()
        pv = parent[v]
        if st == 0:
            selected.append(v)
            for u in adj[v]:
                if u != pv:
                    stack.append((u, ch_in[u]))
        elif st == 1:
            sw = swap[v]
            for u in adj[v]:
                if u != pv:
                    stack.append((u, 0 if u == sw else ch_out[u]))
        else:
            for u in adj[v]:
                if u != pv:
                    stack.append((u, 1))
    return CoverSolution(objective, size, sign * scov, tuple(sorted(selected)))


def tree_cover_extrema(tree: RootedTree):
    """Both objectives in one report (see oracle.DominationReport)."""
    from .oracle import DominationReport

    lo = solve_tree(tree, "min")
    hi = solve_tree(tree, "max")
    return DominationReport("plain", lo.size, lo.cover, hi.cover, lo.witness, hi.witness)
