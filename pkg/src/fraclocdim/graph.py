"""Immutable simple graphs on dense vertex indices, with bitset adjacency."""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_N = 4096


class GraphError(ValueError):
    pass


class CeilingError(GraphError):
    """An input exceeds the size limit of an exhaustive or exact routine."""


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertex {v} unreachable from {u}")
        self.u = u
        self.v = v


def size_ceiling(default: int = 200) -> int:
    """Vertex ceiling for the expensive routines; FRACLOCDIM_MAX_N overrides."""
    raw = os.environ.get("FRACLOCDIM_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"FRACLOCDIM_MAX_N must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class VertexSet:
    """A subset of {0, ..., n-1} stored as an int bitmask."""

    bits: int
    n: int

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> VertexSet:
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(bits, n)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1, n)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def issubset(self, other: VertexSet) -> bool:
        return self.bits & ~other.bits == 0

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[u]`` is an int bitmask of the neighbours of ``u``. Instances are
    immutable; the distance matrix is computed lazily and cached.
    """

    n: int
    adj: tuple[int, ...]
    name: str = ""
    _dist: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if self.n > MAX_N:
            raise GraphError(f"n={self.n} exceeds the hard ceiling {MAX_N}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency rows do not match n")
        for u, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError(f"row {u} has neighbours outside 0..{self.n - 1}")
            if (row >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph({self.name or '?'}, n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbours(self, u: int) -> VertexSet:
        return VertexSet(self.adj[u], self.n)

    def closed_neighbourhood(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (min, max) pairs in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def renamed(self, name: str) -> Graph:
        return Graph(self.n, self.adj, name)

    def distances(self) -> list[list[int]]:
        """All-pairs hop distances, cached (see :func:`all_pairs_distances`)."""
        if not self._dist:
            self._dist.append(all_pairs_distances(self))
        return self._dist[0]


def build_graph(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > MAX_N:
        raise GraphError(f"n={n} exceeds the hard ceiling {MAX_N}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """BFS from every vertex. Raises DisconnectedGraphError on the first unreachable pair."""
    rows = []
    for s in range(g.n):
        row = _bfs(g, s)
        for t, d in enumerate(row):
            if d < 0:
                raise DisconnectedGraphError(s, t)
        rows.append(row)
    return rows


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.distances())


def true_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("true_twins needs two distinct vertices")
    return g.closed_neighbourhood(u) == g.closed_neighbourhood(v)


def every_vertex_has_true_twin(g: Graph) -> bool:
    closed = [g.closed_neighbourhood(u) for u in range(g.n)]
    counts: dict[int, int] = {}
    for c in closed:
        counts[c] = counts.get(c, 0) + 1
    return all(counts[c] >= 2 for c in closed)


def induced_subgraph(g: Graph, keep: Sequence[int], name: str = "") -> Graph:
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return build_graph(len(keep), edges, name)


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v with indices above v shifted down by one. May be disconnected."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if g.n == 1:
        raise GraphError("cannot delete the only vertex of a graph")
    keep = [u for u in range(g.n) if u != v]
    name = f"{g.name}-{v}" if g.name else ""
    return induced_subgraph(g, keep, name)


def is_cut_vertex(g: Graph, v: int) -> bool:
    return g.n > 1 and not is_connected(delete_vertex(g, v))


# -- file formats -------------------------------------------------------------

def to_edge_list(g: Graph) -> str:
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, name: str = "") -> Graph:
    rows = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if stripped.startswith("#"):
            if not name and not rows:
                name = stripped[1:].strip()
            continue
        line = stripped.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphError(f"header declares {m} edges but {len(body)} were given")
    return build_graph(n, body, name)


def to_json(g: Graph) -> str:
    return json.dumps({"name": g.name, "n": g.n, "edges": [list(e) for e in g.edges()]})


def parse_json(text: str) -> Graph:
    data = json.loads(text)
    try:
        return build_graph(int(data["n"]), [tuple(e) for e in data["edges"]], data.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None


def load_graph(text: str) -> Graph:
    """Sniff the format: JSON objects start with '{', anything else is an edge list."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edge_list(text)
