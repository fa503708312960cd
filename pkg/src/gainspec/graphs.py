"""Undirected simple graphs and the structural operations used throughout.

Vertices are dense integers 0..n-1 and edges are unordered pairs stored as
(u, v) with u < v.  All named constructions fix a canonical vertex numbering
(documented on each constructor) so that downstream spectra and file fixtures
are reproducible.  Graph values are immutable; every operation returns a new
value.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a frozenset of (u, v), u < v."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing each pair to (min, max). Duplicates collapse."""
        return cls(n, frozenset(_normalize_edge(u, v) for u, v in edges))

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring produced by BFS, with a per-component feasibility flag.

    ``side`` assigns 0/1 to every vertex (the assignment is only a proper
    two-coloring on components whose ``exists`` flag is True).
    """

    components: tuple[tuple[int, ...], ...]
    exists: tuple[bool, ...]
    side: tuple[int, ...]

    @property
    def is_bipartite(self) -> bool:
        return all(self.exists)

    def sides_of(self, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Vertices of component k on side 0 and side 1."""
        comp = self.components[k]
        return (
            tuple(v for v in comp if self.side[v] == 0),
            tuple(v for v in comp if self.side[v] == 1),
        )


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vs``, relabeled to 0..|vs|-1 in sorted order.

    Returns the graph and the old->new vertex relabeling map.
    """
    kept = sorted(set(vs))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    relabel = {old: new for new, old in enumerate(kept)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return Graph.from_edges(len(kept), edges), relabel


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    parts: list[tuple[int, ...]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        comp = [root]
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        parts.append(tuple(sorted(comp)))
    return parts


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def bipartition(g: Graph) -> Bipartition:
    """BFS two-coloring per component; a component fails iff it has an odd cycle."""
    side = [0] * g.n
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    flags: list[bool] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        ok = True
        queue = deque([root])
        comp = [root]
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    side[w] = side[u] ^ 1
                    comp.append(w)
                    queue.append(w)
                elif side[w] == side[u]:
                    ok = False
        comps.append(tuple(sorted(comp)))
        flags.append(ok)
    return Bipartition(tuple(comps), tuple(flags), tuple(side))


def edge_cut(g: Graph, vs: Iterable[int]) -> frozenset[Edge]:
    """All edges with exactly one endpoint in ``vs``."""
    inside = set(vs)
    for v in inside:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return frozenset(e for e in g.edges if (e[0] in inside) != (e[1] in inside))


def delete_edges(g: Graph, cut: Iterable[tuple[int, int]]) -> Graph:
    """Same vertex set, edges minus ``cut``. Raises if ``cut`` contains a non-edge."""
    drop = frozenset(_normalize_edge(u, v) for u, v in cut)
    stray = drop - g.edges
    if stray:
        raise ValueError(f"not edges of the graph: {sorted(stray)}")
    return Graph(g.n, g.edges - drop)


def pendant_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly 1."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


# ---------------------------------------------------------------------------
# Named constructions.  Canonical numbering:
#   path_graph(n):            0-1-...-(n-1)
#   cycle_graph(n):           0-1-...-(n-1)-0
#   complete_graph(n):        all pairs
#   complete_bipartite(s, t): sides {0..s-1} and {s..s+t-1}
#   star_graph(t):            center 0, leaves 1..t
#   chorded_six_cycle():      cycle 0-1-2-3-4-5-0 plus the chord {1, 4}
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("path needs n >= 0")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 0 or t < 0:
        raise ValueError("complete bipartite sides must be nonnegative")
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def star_graph(t: int) -> Graph:
    """Star with t leaves: complete_bipartite(1, t)."""
    if t < 0:
        raise ValueError("star needs t >= 0 leaves")
    return complete_bipartite(1, t)


def chorded_six_cycle() -> Graph:
    """Six-cycle 0-1-2-3-4-5-0 with the extra chord {1, 4}."""
    return Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(1, 4)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of ``h`` are shifted up by ``g.n``."""
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, g.edges | frozenset(shifted))


def named_graph(kind: str, *params: int) -> Graph:
    """Dispatch on a construction name: path, cycle, complete,
    complete_bipartite, star, c6tilde."""
    builders = {
        "path": (path_graph, 1),
        "cycle": (cycle_graph, 1),
        "complete": (complete_graph, 1),
        "complete_bipartite": (complete_bipartite, 2),
        "star": (star_graph, 1),
        "c6tilde": (chorded_six_cycle, 0),
    }
    if kind not in builders:
        raise ValueError(f"unknown graph kind {kind!r}")
    builder, arity = builders[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def kronecker_graph(g: Graph, h: Graph) -> Graph:
    """Tensor (Kronecker) product: (v, u) ~ (v', u') iff vv' in E(g) and uu' in E(h).

    Vertex (v, u) is numbered v * h.n + u.
    """
    m = h.n
    edges = []
    for gv, gw in g.edges:
        for hu, hw in h.edges:
            edges.append((gv * m + hu, gw * m + hw))
            edges.append((gv * m + hw, gw * m + hu))
    return Graph.from_edges(g.n * m, edges)


def gnp_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p); pairs are sampled in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)
