"""Maximum matching on general graphs, plus an exhaustive oracle.

``maximum_matching`` implements Edmonds' blossom algorithm (alternating BFS
with blossom contraction via base pointers, O(V^3)), which is correct on
non-bipartite graphs where augmenting-path search alone fails.  Roots and
neighbors are scanned in ascending index order, so the returned edge set is
deterministic; only the matching number itself is canonical.

``matching_oracle`` recomputes the matching number by include/exclude
recursion over the edge list (memoized on the saturated-vertex bitmask) and
is the independent cross-check for small graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Edge, Graph

ORACLE_MAX_N = 12


@dataclass(frozen=True)
class MatchingResult:
    matched_edges: frozenset[Edge]
    mu: int
    saturated: frozenset[int]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.matched_edges:
            if u in seen or v in seen:
                raise ValueError("matched edges share a vertex")
            seen.update((u, v))
        if self.mu != len(self.matched_edges) or self.saturated != frozenset(seen):
            raise ValueError("inconsistent matching result")


def _alternating_bfs(
    root: int, adj: list[tuple[int, ...]], match: list[int]
) -> tuple[int, list[int]]:
    """Grow an alternating tree from an exposed root, contracting blossoms.

    Returns (exposed endpoint of an augmenting path, parent links), or
    (-1, parents) when no augmenting path exists from this root.
    """
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_queue[root] = True
    queue = deque([root])

    def lowest_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        x = a
        while True:
            x = base[x]
            on_path[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if on_path[y]:
                return y
            y = parent[match[y]]

    def contract_path(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if base[v] == base[w] or match[v] == w:
                continue
            if w == root or (match[w] != -1 and parent[match[w]] != -1):
                # even-even edge: contract the blossom around its stem
                stem = lowest_common_base(v, w)
                in_blossom = [False] * n
                contract_path(v, stem, w, in_blossom)
                contract_path(w, stem, v, in_blossom)
                for u in range(n):
                    if in_blossom[base[u]]:
                        base[u] = stem
                        if not in_queue[u]:
                            in_queue[u] = True
                            queue.append(u)
            elif parent[w] == -1:
                parent[w] = v
                if match[w] == -1:
                    return w, parent
                if not in_queue[match[w]]:
                    in_queue[match[w]] = True
                    queue.append(match[w])
    return -1, parent


def maximum_matching(g: Graph) -> MatchingResult:
    """Maximum cardinality matching via the blossom algorithm."""
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    # deterministic greedy seed, lowest indices first
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        exposed, parent = _alternating_bfs(root, adj, match)
        if exposed == -1:
            continue
        v = exposed
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
    edges = frozenset(
        (v, match[v]) for v in range(n) if match[v] > v
    )
    saturated = frozenset(v for v in range(n) if match[v] != -1)
    return MatchingResult(edges, len(edges), saturated)


def has_perfect_matching(g: Graph) -> bool:
    """True iff every vertex is saturated by a maximum matching."""
    return g.n % 2 == 0 and 2 * maximum_matching(g).mu == g.n


def matching_oracle(g: Graph) -> int:
    """Exact matching number by exhaustive include/exclude over edges (n <= 12)."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle supports n <= {ORACLE_MAX_N}, got {g.n}")
    edges = sorted(g.edges)
    memo: dict[tuple[int, int], int] = {}

    def best_from(i: int, used: int) -> int:
        if i == len(edges):
            return 0
        key = (i, used)
        cached = memo.get(key)
        if cached is not None:
            return cached
        u, v = edges[i]
        result = best_from(i + 1, used)
        if not used & (1 << u) and not used & (1 << v):
            result = max(
                result, 1 + best_from(i + 1, used | (1 << u) | (1 << v))
            )
        memo[key] = result
        return result

    return best_from(0, 0)
