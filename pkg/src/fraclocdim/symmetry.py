"""Automorphism search by backtracking, vertex orbits and vertex-transitivity."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CeilingError, Graph, GraphError

SEARCH_CEILING = 64


def _check(g: Graph) -> None:
    if g.n > SEARCH_CEILING:
        raise CeilingError(f"automorphism search ceiling is n <= {SEARCH_CEILING}, got n={g.n}")


def _profiles(g: Graph) -> list[tuple]:
    d = g.distances()
    return [(g.degree(u), tuple(sorted(d[u]))) for u in range(g.n)]


def _bfs_order(g: Graph, root: int) -> list[int]:
    d = g.distances()[root]
    # ties broken by descending degree so constrained vertices are placed early
    return sorted(range(g.n), key=lambda v: (d[v], -g.degree(v), v))


def find_automorphism(g: Graph, u: int, v: int) -> list[int] | None:
    """An automorphism as an image list with u -> v, or None.

    Vertices are placed in BFS order from u. A candidate image must carry the
    same degree and sorted distance row, and must keep the distance to every
    already placed vertex. Preserving all distances preserves adjacency, so a
    full assignment is an automorphism.
    """
    _check(g)
    prof = _profiles(g)
    if prof[u] != prof[v]:
        return None
    d = g.distances()
    order = _bfs_order(g, u)
    image = [-1] * g.n
    used = [False] * g.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        a = order[k]
        if k == 0:
            candidates = [v]
        else:
            # an image of a must sit next to the image of some earlier neighbour
            anchor = next(b for b in order[:k] if d[a][b] == 1)
            candidates = [c for c in _neighbours(g, image[anchor]) if not used[c]]
        for c in candidates:
            if prof[c] != prof[a]:
                continue
            if any(d[c][image[b]] != d[a][b] for b in order[:k]):
                continue
            image[a] = c
            used[c] = True
            if extend(k + 1):
                return True
            image[a] = -1
            used[c] = False
        return False

    return list(image) if extend(0) else None


def _neighbours(g: Graph, x: int) -> list[int]:
    return [y for y in range(g.n) if g.has_edge(x, y)]


def exists_automorphism_mapping(g: Graph, u: int, v: int) -> bool:
    return find_automorphism(g, u, v) is not None


def is_automorphism(g: Graph, perm: list[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.has_edge(perm[a], perm[b]) for a, b in g.edges())


@dataclass(frozen=True)
class OrbitPartition:
    orbit: tuple[int, ...]

    @property
    def transitive(self) -> bool:
        return len(set(self.orbit)) == 1

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, o in enumerate(self.orbit):
            out.setdefault(o, []).append(v)
        return [out[k] for k in sorted(out)]


def orbits(g: Graph) -> OrbitPartition:
    _check(g)
    reps: list[int] = []
    orbit = [-1] * g.n
    for v in range(g.n):
        for i, r in enumerate(reps):
            if exists_automorphism_mapping(g, r, v):
                orbit[v] = i
                break
        else:
            orbit[v] = len(reps)
            reps.append(v)
    return OrbitPartition(tuple(orbit))


def is_vertex_transitive(g: Graph) -> bool:
    _check(g)
    return all(exists_automorphism_mapping(g, 0, v) for v in range(1, g.n))
