"""Vertex-arrival graph with an irrevocable proper coloring, plus checking oracles.

Vertices are numbered 1..n in arrival order. The oracles here (bipartition,
odd girth, chromatic number) look only at adjacency and colors, never at any
strategy's bookkeeping, so they can be used to verify a finished game.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf  # odd girth of a bipartite graph

CHROMATIC_ORACLE_CAP = 20


class GraphError(Exception):
    pass


class UnknownVertex(GraphError):
    pass


class ImproperColor(GraphError):
    pass


class Irrevocability(GraphError):
    pass


class OddCycle(GraphError):
    pass


class ColoredGraph:
    """Undirected simple graph that only grows, with a partial coloring."""

    def __init__(self) -> None:
        self._adj: list[set[int]] = [set()]  # index 0 unused
        self._color: list[int | None] = [None]
        self._color_count: Counter[int] = Counter()
        self._max_color = 0

    # construction

    def add_vertex(self, neighbors: Iterable[int] = ()) -> int:
        nbrs = set(neighbors)
        n = len(self._adj) - 1
        for u in nbrs:
            if not (isinstance(u, int) and 1 <= u <= n):
                raise UnknownVertex(f"neighbor {u!r} is not a presented vertex (n={n})")
        v = n + 1
        self._adj.append(nbrs)
        self._color.append(None)
        for u in nbrs:
            self._adj[u].add(v)
        return v

    def assign_color(self, v: int, color: int) -> None:
        self._check_vertex(v)
        if not (isinstance(color, int) and color >= 1):
            raise ImproperColor(f"vertex {v}: color {color!r} is not a positive integer")
        if self._color[v] is not None:
            raise Irrevocability(f"vertex {v} already has color {self._color[v]}")
        for u in self._adj[v]:
            if self._color[u] == color:
                raise ImproperColor(f"vertex {v}: color {color} already on neighbor {u}")
        self._color[v] = color
        self._color_count[color] += 1
        self._max_color = max(self._max_color, color)

    # queries

    def __len__(self) -> int:
        return len(self._adj) - 1

    @property
    def n(self) -> int:
        return len(self._adj) - 1

    def vertices(self) -> range:
        return range(1, len(self._adj))

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return sorted(self._adj[v])

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 1 <= u < len(self._adj) and v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(1, len(self._adj)):
            for w in sorted(self._adj[u]):
                if u < w:
                    yield u, w

    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def color(self, v: int) -> int | None:
        self._check_vertex(v)
        return self._color[v]

    def neighbor_colors(self, v: int) -> set[int]:
        self._check_vertex(v)
        col = self._color
        return {col[u] for u in self._adj[v] if col[u] is not None}

    def colors_used(self) -> set[int]:
        return set(self._color_count)

    def num_colors(self) -> int:
        return len(self._color_count)

    @property
    def max_color(self) -> int:
        return self._max_color

    def is_proper(self) -> bool:
        col = self._color
        return all(col[u] is None or col[u] != col[w] for u, w in self.edges())

    def view(self) -> GraphView:
        return GraphView(self)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v < len(self._adj)):
            raise UnknownVertex(f"unknown vertex {v!r}")

    def _raw_adjacency(self) -> list[set[int]]:
        return self._adj


class GraphView:
    """Read-only window onto a ColoredGraph, handed to strategies."""

    __slots__ = ("_g",)

    def __init__(self, g: ColoredGraph) -> None:
        self._g = g

    def __len__(self) -> int:
        return self._g.n

    @property
    def n(self) -> int:
        return self._g.n

    @property
    def max_color(self) -> int:
        return self._g.max_color

    def vertices(self) -> range:
        return self._g.vertices()

    def neighbors(self, v: int) -> list[int]:
        return self._g.neighbors(v)

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._g.neighbor_set(v)

    def degree(self, v: int) -> int:
        return self._g.degree(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self._g.has_edge(u, v)

    def color(self, v: int) -> int | None:
        return self._g.color(v)

    def neighbor_colors(self, v: int) -> set[int]:
        return self._g.neighbor_colors(v)

    def colors_used(self) -> set[int]:
        return self._g.colors_used()

    def num_colors(self) -> int:
        return self._g.num_colors()


GraphLike = ColoredGraph | GraphView


def _adjacency(g: GraphLike) -> list[set[int]] | list[frozenset[int]]:
    if isinstance(g, ColoredGraph):
        return g._raw_adjacency()
    return [frozenset()] + [g.neighbor_set(v) for v in g.vertices()]


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> ColoredGraph:
    """Uncolored graph on 1..n; edges may be given in any order."""
    later: list[list[int]] = [[] for _ in range(n + 1)]
    for u, w in edges:
        if u == w:
            raise GraphError(f"self-loop at {u}")
        lo, hi = sorted((u, w))
        later[hi].append(lo)
    g = ColoredGraph()
    for v in range(1, n + 1):
        g.add_vertex(later[v])
    return g


# bipartition


def bipartition_of_component(g: GraphLike, v: int) -> tuple[set[int], set[int]]:
    """Sides of v's component, v's side first. Raises OddCycle if not bipartite."""
    adj = _adjacency(g)
    if not (1 <= v < len(adj)):
        raise UnknownVertex(f"unknown vertex {v!r}")
    side = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in side:
                side[w] = 1 - side[u]
                queue.append(w)
            elif side[w] == side[u]:
                raise OddCycle(f"component of {v} has an odd cycle through edge {u}-{w}")
    same = {u for u, s in side.items() if s == 0}
    other = {u for u, s in side.items() if s == 1}
    return same, other


def is_bipartite(g: GraphLike) -> bool:
    adj = _adjacency(g)
    side = [-1] * len(adj)
    for s in range(1, len(adj)):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


# odd girth


def _odd_walk_from(adj: Sequence[Iterable[int]], s: int, max_depth: float) -> float:
    """Shortest odd closed walk witnessed by a same-layer edge in the BFS from s.

    Layers deeper than max_depth are not explored.
    """
    dist = {s: 0}
    frontier = [s]
    d = 0
    while frontier and d <= max_depth:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                dw = dist.get(w)
                if dw is None:
                    dist[w] = d + 1
                    nxt.append(w)
                elif dw == d:
                    return 2 * d + 1
        frontier = nxt
        d += 1
    return INFINITE


def odd_girth(g: GraphLike, sources: Iterable[int] | None = None) -> float:
    """Length of the shortest odd cycle, or INFINITE for a bipartite graph.

    Every source is searched breadth first; an edge between two vertices at
    the same depth d closes an odd walk of length 2d + 1, and from any vertex
    of a shortest odd cycle the edge opposite to it is such an edge, so the
    minimum over all sources is exact. Deeper layers are pruned once they can
    no longer beat the best cycle found. Restricting ``sources`` gives an
    upper bound (exact if the sources meet a shortest odd cycle).
    """
    adj = _adjacency(g)
    if sources is None:
        if is_bipartite(g):
            return INFINITE
        sources = range(1, len(adj))
    best = INFINITE
    for s in sources:
        limit = INFINITE if best == INFINITE else (best - 3) // 2
        found = _odd_walk_from(adj, s, limit)
        if found < best:
            best = found
            if best == 3:
                break
    return best


def has_odd_cycle_shorter_than(g: GraphLike, bound: int) -> bool:
    """True iff some odd cycle has length < bound (bound odd, >= 3).

    Cheaper than odd_girth when only class membership matters: the search
    depth is capped at the largest layer that could close such a cycle.
    """
    if bound <= 3:
        return False
    adj = _adjacency(g)
    if bound == 5:
        # triangles: some edge whose endpoints share a neighbor
        for u in range(1, len(adj)):
            au = adj[u]
            for w in au:
                if w > u:
                    aw = adj[w]
                    small, big = (au, aw) if len(au) <= len(aw) else (aw, au)
                    if any(x in big for x in small):
                        return True
        return False
    depth = (bound - 3) // 2
    for s in range(1, len(adj)):
        if _odd_walk_from(adj, s, depth) < bound:
            return True
    return False


# chromatic number


def chromatic_number_oracle(g: GraphLike) -> int:
    """Exact chromatic number by backtracking; refuses graphs above 20 vertices."""
    adj = _adjacency(g)
    n = len(adj) - 1
    if n > CHROMATIC_ORACLE_CAP:
        raise ValueError(f"chromatic oracle refuses n={n} > {CHROMATIC_ORACLE_CAP}")
    if n == 0:
        return 0
    if all(not adj[v] for v in range(1, n + 1)):
        return 1
    order = sorted(range(1, n + 1), key=lambda v: (-len(adj[v]), v))
    k = 2
    while not _colorable(adj, order, k):
        k += 1
    return k


def _colorable(adj, order: list[int], k: int) -> bool:
    col: dict[int, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {col[u] for u in adj[v] if u in col}
        # new colors are interchangeable: only try the first unused one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            col[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            del col[v]
        return False

    return place(0, 0)
