"""Resolving neighbourhoods, the parameters l(G) and r(G), and exact integer
(local) metric dimension by hitting-set search."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .graph import CeilingError, Graph, GraphError, VertexSet, iter_bits

SEARCH_CEILING = 24


def _dist_rows(g: Graph, d=None):
    return d if d is not None else g.distances()


def resolving_mask(d: list[list[int]], u: int, v: int) -> int:
    du, dv = d[u], d[v]
    bits = 0
    for x in range(len(du)):
        if du[x] != dv[x]:
            bits |= 1 << x
    return bits


def resolving_pair_set(g: Graph, d, u: int, v: int) -> VertexSet:
    """R(u,v): the vertices whose distances to u and v differ."""
    if u == v:
        raise GraphError("resolving_pair_set needs two distinct vertices")
    return VertexSet(resolving_mask(_dist_rows(g, d), u, v), g.n)


def local_resolving_neighborhood(g: Graph, d, e: tuple[int, int]) -> VertexSet:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return VertexSet(resolving_mask(_dist_rows(g, d), u, v), g.n)


def local_masks(g: Graph) -> dict[tuple[int, int], int]:
    """L(uv) as bitmasks, keyed by canonical edge (min, max)."""
    d = g.distances()
    return {e: resolving_mask(d, *e) for e in g.edges()}


def pair_masks(g: Graph) -> dict[tuple[int, int], int]:
    """R(u,v) as bitmasks for every unordered pair u < v."""
    d = g.distances()
    return {(u, v): resolving_mask(d, u, v) for u, v in combinations(range(g.n), 2)}


def l_parameter(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("l(G) needs at least one edge")
    return min(m.bit_count() for m in local_masks(g).values())


def r_parameter(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("r(G) needs at least two vertices")
    return min(m.bit_count() for m in pair_masks(g).values())


def is_local_resolving_set(g: Graph, w: VertexSet) -> bool:
    return all(m & w.bits for m in local_masks(g).values())


def is_resolving_set(g: Graph, w: VertexSet) -> bool:
    return all(m & w.bits for m in pair_masks(g).values())


def min_hitting_set(rows: list[int], n: int) -> list[int]:
    """Smallest set of indices meeting every bitmask in ``rows``.

    Iterative deepening on the answer size. At each node the first unhit
    row with fewest members is branched on; a candidate vertex is skipped
    when its coverage of the still-unhit rows is contained in that of an
    earlier candidate from the same row.
    """
    rows = sorted(set(rows), key=lambda r: (r.bit_count(), r))
    if any(r == 0 for r in rows):
        raise GraphError("an empty row cannot be hit")
    if not rows:
        return []
    # cover[v]: bitmask over row indices containing v
    cover = [0] * n
    for i, r in enumerate(rows):
        for v in iter_bits(r):
            cover[v] |= 1 << i
    all_rows = (1 << len(rows)) - 1

    def search(unhit: int, budget: int, chosen: list[int]) -> list[int] | None:
        if unhit == 0:
            return chosen
        if budget == 0:
            return None
        # cheap bound: the largest cover cannot finish within budget
        best = max((cover[v] & unhit).bit_count() for v in range(n))
        if best * budget < unhit.bit_count():
            return None
        # rows are sorted by size, so the lowest unhit index is a smallest row
        target = rows[(unhit & -unhit).bit_length() - 1]
        seen_covers: list[int] = []
        for v in iter_bits(target):
            cv = cover[v] & unhit
            if any(cv & ~c == 0 for c in seen_covers):
                continue
            seen_covers.append(cv)
            found = search(unhit & ~cv, budget - 1, chosen + [v])
            if found is not None:
                return found
        return None

    for k in range(1, n + 1):
        found = search(all_rows, k, [])
        if found is not None:
            return sorted(found)
    raise AssertionError("unreachable: the full vertex set hits every nonempty row")


def _check_ceiling(g: Graph) -> None:
    if g.n > SEARCH_CEILING:
        raise CeilingError(f"exhaustive search ceiling is n <= {SEARCH_CEILING}, got n={g.n}")


def local_metric_basis(g: Graph) -> list[int]:
    _check_ceiling(g)
    return min_hitting_set(list(local_masks(g).values()), g.n)


def metric_basis(g: Graph) -> list[int]:
    _check_ceiling(g)
    return min_hitting_set(list(pair_masks(g).values()), g.n)


def integer_ldim(g: Graph) -> int:
    return len(local_metric_basis(g))


def integer_dim(g: Graph) -> int:
    return len(metric_basis(g))


@dataclass
class ResolveReport:
    name: str
    n: int
    local: dict[tuple[int, int], VertexSet]
    l_G: int
    r_G: int
    pairs: dict[tuple[int, int], VertexSet] | None = field(default=None)

    def to_json(self, include_table: bool = False) -> str:
        out = {"graph": self.name, "n": self.n, "l": self.l_G, "r": self.r_G}
        if include_table:
            out["L"] = [{"edge": list(e), "set": s.to_list()} for e, s in self.local.items()]
            if self.pairs is not None:
                out["R"] = [{"pair": list(p), "set": s.to_list()} for p, s in self.pairs.items()]
        return json.dumps(out, indent=2)


def resolve_report(g: Graph, with_pairs: bool = False) -> ResolveReport:
    local = {e: VertexSet(m, g.n) for e, m in local_masks(g).items()}
    pm = pair_masks(g)
    pairs = {p: VertexSet(m, g.n) for p, m in pm.items()} if with_pairs else None
    l_g = min(len(s) for s in local.values())
    r_g = min(m.bit_count() for m in pm.values())
    return ResolveReport(g.name, g.n, local, l_g, r_g, pairs)
