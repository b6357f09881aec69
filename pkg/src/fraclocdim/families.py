"""Named graph families and graph products.

Canonical vertex orders:

* path(n), cycle(n): 0, 1, ..., n-1 along the path / around the cycle.
* complete_multipartite(a1, ..., ak): parts occupy consecutive index blocks.
* star(k): hub 0, leaves 1..k.
* fan(n) = K1 + P_n: path vertices 0..n-1, hub last (index n).
* lollipop(m, n): clique 0..m-1, then path m..m+n-1; the bridge joins m-1 to m.
* hypercube(d): binary codes 0..2^d-1, adjacent at Hamming distance 1.
* petersen: the Kneser graph K(5,2); vertex i is the i-th 2-subset of
  {0..4} in lexicographic order, adjacent when disjoint.
* products: (u, v) -> u * |V(H)| + v.
* generalized lexicographic H[I]: fibres in order of the vertices of H,
  each fibre's vertices consecutive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .graph import Graph, GraphError, build_graph, is_connected

KINDS = (
    "path", "cycle", "complete", "complete_multipartite", "star", "fan",
    "lollipop", "hypercube", "petersen", "join", "strong_product",
    "cartesian_product", "generalized_lexicographic",
)

# short names used in family strings
ALIASES = {
    "multipartite": "complete_multipartite",
    "strong": "strong_product",
    "cartesian": "cartesian_product",
    "lex": "generalized_lexicographic",
}
SHORT = {
    "complete_multipartite": "multipartite",
    "strong_product": "strong",
    "cartesian_product": "cartesian",
    "generalized_lexicographic": "lex",
}

Param = Union[int, "FamilySpec"]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        kind = ALIASES.get(self.kind, self.kind)
        if kind not in KINDS:
            raise GraphError(f"unknown family {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(self.params))
        _validate(self)

    def __str__(self) -> str:
        name = SHORT.get(self.kind, self.kind)
        if not self.params:
            return name
        return f"{name}({','.join(str(p) for p in self.params)})"


def _validate(spec: FamilySpec) -> None:
    k, p = spec.kind, spec.params
    ints = all(isinstance(x, int) and not isinstance(x, bool) for x in p)
    graphs = all(isinstance(x, FamilySpec) for x in p)

    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise GraphError(f"{k}: {msg} (got {p!r})")

    if k in ("path", "complete", "star", "fan", "hypercube"):
        need(ints and len(p) == 1, "expects one integer")
        lo = {"path": 1, "complete": 1, "star": 1, "fan": 1, "hypercube": 1}[k]
        need(p[0] >= lo, f"needs n >= {lo}")
    elif k == "cycle":
        need(ints and len(p) == 1 and p[0] >= 3, "needs n >= 3")
    elif k == "complete_multipartite":
        need(ints and len(p) >= 2 and min(p) >= 1, "needs at least two parts of size >= 1")
    elif k == "lollipop":
        need(ints and len(p) == 2, "expects (m, n)")
        need(p[0] >= 3 and p[1] >= 1, "needs m >= 3 and n >= 1")
    elif k == "petersen":
        need(not p, "takes no parameters")
    elif k in ("join", "strong_product", "cartesian_product"):
        need(graphs and len(p) == 2, "expects two graph operands")
    elif k == "generalized_lexicographic":
        need(graphs and len(p) >= 2, "expects a base graph followed by one fibre per vertex")


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], f"path({n})")


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2), f"complete({n})")


def complete_multipartite(*parts: int) -> Graph:
    owner = [i for i, a in enumerate(parts) for _ in range(a)]
    n = len(owner)
    edges = [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]]
    return build_graph(n, edges, f"multipartite({','.join(map(str, parts))})")


def star(k: int) -> Graph:
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)], f"star({k})")


def fan(n: int) -> Graph:
    g = join(path(n), complete(1))
    return g.renamed(f"fan({n})")


def lollipop(m: int, n: int) -> Graph:
    edges = list(combinations(range(m), 2))
    edges += [(i, i + 1) for i in range(m - 1, m + n - 1)]
    return build_graph(m + n, edges, f"lollipop({m},{n})")


def hypercube(d: int) -> Graph:
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    return build_graph(n, edges, f"hypercube({d})")


def petersen() -> Graph:
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return build_graph(10, edges, "petersen")


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 (g2 shifted by |V(g1)|) plus every cross edge."""
    n1 = g1.n
    edges = list(g1.edges())
    edges += [(n1 + u, n1 + v) for u, v in g2.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(g2.n)]
    return build_graph(n1 + g2.n, edges, f"join({g1.name},{g2.name})")


def _require_connected(*gs: Graph) -> None:
    for g in gs:
        if not is_connected(g):
            raise GraphError(f"product operand {g.name or g!r} is not connected")


def strong_product(g: Graph, h: Graph) -> Graph:
    _require_connected(g, h)
    m = h.n
    edges = []
    for u1 in range(g.n):
        for u2 in range(g.n):
            same_u = u1 == u2
            adj_u = g.has_edge(u1, u2)
            if not (same_u or adj_u):
                continue
            for v1 in range(m):
                for v2 in range(m):
                    a, b = u1 * m + v1, u2 * m + v2
                    if a >= b:
                        continue
                    if (adj_u and v1 == v2) or (same_u and h.has_edge(v1, v2)) \
                            or (adj_u and h.has_edge(v1, v2)):
                        edges.append((a, b))
    return build_graph(g.n * m, edges, f"strong({g.name},{h.name})")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    _require_connected(g, h)
    m = h.n
    edges = [(u1 * m + v, u2 * m + v) for u1, u2 in g.edges() for v in range(m)]
    edges += [(u * m + v1, u * m + v2) for u in range(g.n) for v1, v2 in h.edges()]
    return build_graph(g.n * m, edges, f"cartesian({g.name},{h.name})")


def generalized_lexicographic(h: Graph, fibres: list[Graph]) -> Graph:
    if len(fibres) != h.n:
        raise GraphError(f"need one fibre per vertex of H: {h.n} vertices, {len(fibres)} fibres")
    offset = []
    total = 0
    for f in fibres:
        offset.append(total)
        total += f.n
    edges = []
    for v, f in enumerate(fibres):
        edges += [(offset[v] + a, offset[v] + b) for a, b in f.edges()]
    for v1, v2 in h.edges():
        edges += [(offset[v1] + a, offset[v2] + b)
                  for a in range(fibres[v1].n) for b in range(fibres[v2].n)]
    name = f"lex({','.join([h.name] + [f.name for f in fibres])})"
    return build_graph(total, edges, name)


def layer_index(u: int, v: int, h_order: int) -> int:
    return u * h_order + v


def make_family(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "path":
        g = path(*p)
    elif k == "cycle":
        g = cycle(*p)
    elif k == "complete":
        g = complete(*p)
    elif k == "complete_multipartite":
        g = complete_multipartite(*p)
    elif k == "star":
        g = star(*p)
    elif k == "fan":
        g = fan(*p)
    elif k == "lollipop":
        g = lollipop(*p)
    elif k == "hypercube":
        g = hypercube(*p)
    elif k == "petersen":
        g = petersen()
    else:
        operands = [make_family(q) for q in p]
        if k == "join":
            g = join(*operands)
        elif k == "strong_product":
            g = strong_product(*operands)
        elif k == "cartesian_product":
            g = cartesian_product(*operands)
        else:
            g = generalized_lexicographic(operands[0], operands[1:])
    return g.renamed(str(spec))


# -- family strings -----------------------------------------------------------

class FamilyParseError(GraphError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


def parse_family_string(s: str) -> FamilySpec:
    """Parse ``name(args)`` where args are integers or nested family strings.

    >>> str(parse_family_string("cartesian(complete(2), cycle(5))"))
    'cartesian(complete(2),cycle(5))'
    """
    text = s
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_item():
        nonlocal pos
        skip_ws()
        start = pos
        if pos < len(text) and (text[pos].isdigit() or text[pos] == "-"):
            pos += 1
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            try:
                return int(text[start:pos])
            except ValueError:
                raise FamilyParseError("bad integer", text, start) from None
        while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        name = text[start:pos]
        if not name:
            raise FamilyParseError("expected a family name or integer", text, start)
        kind = ALIASES.get(name, name)
        if kind not in KINDS:
            raise FamilyParseError(f"unknown family {name!r}", text, start)
        skip_ws()
        args = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            skip_ws()
            if pos < len(text) and text[pos] == ")":
                pos += 1
            else:
                while True:
                    args.append(parse_item())
                    skip_ws()
                    if pos < len(text) and text[pos] == ",":
                        pos += 1
                    elif pos < len(text) and text[pos] == ")":
                        pos += 1
                        break
                    else:
                        raise FamilyParseError("expected ',' or ')'", text, pos)
        try:
            return FamilySpec(kind, tuple(args))
        except GraphError as exc:
            raise FamilyParseError(str(exc), text, start) from None

    spec = parse_item()
    skip_ws()
    if pos != len(text):
        raise FamilyParseError("trailing input", text, pos)
    if not isinstance(spec, FamilySpec):
        raise FamilyParseError("expected a family, not a bare integer", text, 0)
    return spec


def family(s: str) -> Graph:
    """Shorthand: build a graph straight from a family string."""
    return make_family(parse_family_string(s))
