"""Machine-checkable predicates for the structural claims about ldim_f.

Every claim is a function of one subject graph (products and joins carry
their operands through the FamilySpec they were built from). A claim whose
hypothesis does not hold on the subject is reported as skipped, never as a
pass, and a failing claim always carries a witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Callable

from .families import (
    FamilySpec, complete, cycle, generalized_lexicographic, join, make_family, strong_product,
    cartesian_product, complete_multipartite,
)
from .graph import (
    CeilingError, Graph, GraphError, build_graph, delete_vertex, diameter, every_vertex_has_true_twin,
    is_bipartite, is_connected, iter_bits, true_twins,
)
from .lp import dim_f, format_rational, ldim_f
from .resolve import integer_ldim, local_masks, pair_masks
from .symmetry import is_vertex_transitive

PASS = "pass"
FAIL = "fail"
SKIP_HYPOTHESIS = "skipped(hypothesis-unmet)"
SKIP_CEILING = "skipped(ceiling)"

PRODUCT_CEILING = 400
SUBSET_CEILING = 16


@dataclass
class TheoremReport:
    claim: str
    graphs: tuple[str, ...]
    status: str
    witness: object = None
    values: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"{self.claim}: a failing report needs a witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "graphs": list(self.graphs),
            "status": self.status,
            "values": {k: _render(v) for k, v in self.values.items()},
            "witness": _render(self.witness),
            "note": self.note,
        }


def _render(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, dict):
        return {str(k): _render(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    return v


def _verdict(claim, names, holds: bool, witness, values, note="") -> TheoremReport:
    return TheoremReport(claim, tuple(names), PASS if holds else FAIL,
                         None if holds else (witness if witness is not None else values), values, note)


def _skip(claim, names, why: str, status: str = SKIP_HYPOTHESIS) -> TheoremReport:
    return TheoremReport(claim, tuple(names), status, note=why)


# -- cached per-graph facts ---------------------------------------------------

class Facts:
    """Lazily computed invariants of one graph, shared across claims."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def L(self) -> dict[tuple[int, int], int]:
        return local_masks(self.g)

    @cached_property
    def R(self) -> dict[tuple[int, int], int]:
        return pair_masks(self.g)

    @cached_property
    def l(self) -> int:
        return min(m.bit_count() for m in self.L.values())

    @cached_property
    def r(self) -> int:
        return min(m.bit_count() for m in self.R.values())

    @cached_property
    def ldim_f(self) -> Fraction:
        return ldim_f(self.g).value

    @cached_property
    def dim_f(self) -> Fraction:
        return dim_f(self.g).value

    @cached_property
    def ldim(self) -> int:
        return integer_ldim(self.g)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.g)

    @cached_property
    def transitive(self) -> bool:
        return is_vertex_transitive(self.g)


@lru_cache(maxsize=None)
def facts(g: Graph) -> Facts:
    return Facts(g)


class HypothesisUnmet(GraphError):
    """A claim was run on a graph outside its precondition."""


def _require(g: Graph, min_n: int = 2) -> None:
    if g.n < min_n:
        raise HypothesisUnmet(f"claim needs n >= {min_n}")
    if not is_connected(g):
        raise HypothesisUnmet("claim needs a connected graph")


# -- shape predicates ---------------------------------------------------------

def is_complete_graph(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(u) == 2 for u in range(g.n))


def is_odd_cycle(g: Graph) -> bool:
    return is_cycle_graph(g) and g.n % 2 == 1


def is_path_graph(g: Graph) -> bool:
    return is_connected(g) and g.num_edges == g.n - 1 and all(g.degree(u) <= 2 for u in range(g.n))


def is_k2(g: Graph) -> bool:
    return g.n == 2 and g.num_edges == 1


# -- single-graph claims ------------------------------------------------------

def check_basic_chain(g: Graph) -> TheoremReport:
    """1 <= ldim_f <= ldim <= n-1 and ldim_f <= dim_f."""
    claim = "basic-chain"
    _require(g)
    f = facts(g)
    values = {"ldim_f": f.ldim_f, "dim_f": f.dim_f}
    holds = 1 <= f.ldim_f <= f.dim_f
    if g.n <= 24:
        values["ldim"] = f.ldim
        holds = holds and f.ldim_f <= f.ldim <= g.n - 1
    else:
        values["ldim"] = "not computed (n > 24)"
    return _verdict(claim, [g.name], holds, None, values)


def check_bipartite_iff_one(g: Graph) -> TheoremReport:
    claim = "bipartite-iff-one"
    _require(g)
    f = facts(g)
    values = {"ldim_f": f.ldim_f, "bipartite": f.bipartite}
    return _verdict(claim, [g.name], (f.ldim_f == 1) == f.bipartite, None, values)


def check_twin_neighbourhoods(g: Graph) -> TheoremReport:
    """{u,v} within L(uv) on every edge, with equality exactly for true twins."""
    claim = "twin-neighbourhood"
    _require(g)
    for (u, v), m in facts(g).L.items():
        pair = (1 << u) | (1 << v)
        if m & pair != pair:
            return _verdict(claim, [g.name], False, {"edge": [u, v], "L": list(iter_bits(m))}, {})
        if (m == pair) != true_twins(g, u, v):
            return _verdict(claim, [g.name], False,
                            {"edge": [u, v], "L": list(iter_bits(m)), "true_twins": true_twins(g, u, v)}, {})
    return _verdict(claim, [g.name], True, None, {"edges": g.num_edges})


def check_bipartite_iff_full(g: Graph) -> TheoremReport:
    """L(uv) = V(G) on every edge exactly when G is bipartite."""
    claim = "bipartite-iff-full-neighbourhoods"
    _require(g)
    f = facts(g)
    full = (1 << g.n) - 1
    all_full = all(m == full for m in f.L.values())
    values = {"all_full": all_full, "bipartite": f.bipartite}
    return _verdict(claim, [g.name], all_full == f.bipartite, None, values)


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of x == y iff x = y or x, y true twins, ordered by least member."""
    by_closed: dict[int, list[int]] = {}
    for u in range(g.n):
        by_closed.setdefault(g.closed_neighbourhood(u), []).append(u)
    return sorted(by_closed.values())


def twin_quotient(g: Graph) -> tuple[Graph, list[list[int]]]:
    classes = twin_classes(g)
    owner = {v: i for i, cls in enumerate(classes) for v in cls}
    edges = {(min(owner[u], owner[v]), max(owner[u], owner[v]))
             for u, v in g.edges() if owner[u] != owner[v]}
    return build_graph(len(classes), sorted(edges), f"quotient({g.name})"), classes


def rebuilds_as_lexicographic(g: Graph) -> bool:
    """All twin classes non-trivial and H[cliques] reproduces G under the class order."""
    quotient, classes = twin_quotient(g)
    if any(len(c) < 2 for c in classes):
        return False
    if any(not g.has_edge(a, b) for c in classes for a, b in combinations(c, 2)):
        return False
    rebuilt = generalized_lexicographic(quotient, [complete(len(c)) for c in classes])
    order = [v for c in classes for v in c]  # rebuilt index -> vertex of g
    return all(rebuilt.has_edge(i, j) == g.has_edge(order[i], order[j])
               for i, j in combinations(range(g.n), 2))


def check_half_n_characterization(g: Graph) -> TheoremReport:
    claim = "half-order-characterization"
    _require(g)
    f = facts(g)
    i = f.ldim_f == Fraction(g.n, 2)
    ii = every_vertex_has_true_twin(g)
    iii = rebuilds_as_lexicographic(g)
    values = {"ldim_f": f.ldim_f, "half_order": i, "all_have_true_twin": ii, "lexicographic_form": iii}
    return _verdict(claim, [g.name], i == ii == iii, None, values)


def check_clique_theorem(g: Graph, cliques: list[list[int]]) -> TheoremReport:
    claim = "clique-sum"
    _require(g)
    if not cliques:
        return _skip(claim, [g.name], "no vertex-disjoint cliques of size >= 3 supplied")
    seen: set[int] = set()
    for c in cliques:
        if len(c) < 3:
            return _skip(claim, [g.name], f"clique {sorted(c)} has fewer than 3 vertices")
        if seen & set(c):
            raise GraphError("cliques must be vertex-disjoint")
        if any(not g.has_edge(a, b) for a, b in combinations(c, 2)):
            raise GraphError(f"{sorted(c)} is not a clique")
        seen |= set(c)
    f = facts(g)
    inside = {(min(a, b), max(a, b)) for c in cliques for a, b in combinations(c, 2)}
    clique_L = [f.L[e] for e in sorted(inside)]
    uncovered = None
    for e, m in f.L.items():
        if e in inside:
            continue
        if not any(k & ~m == 0 for k in clique_L):
            uncovered = e
            break
    condition = uncovered is None
    target = Fraction(sum(len(c) for c in cliques), 2)
    value_matches = f.ldim_f == target
    values = {"ldim_f": f.ldim_f, "half_clique_total": target, "containment_condition": condition}
    witness = {"ldim_f": f.ldim_f, "expected": target, "condition": condition}
    if uncovered is not None:
        witness["edge_without_contained_clique_L"] = list(uncovered)
    return _verdict(claim, [g.name], value_matches == condition, witness, values)


def check_r_le_l(g: Graph) -> TheoremReport:
    _require(g)
    f = facts(g)
    return _verdict("r-le-l", [g.name], f.r <= f.l, None, {"l": f.l, "r": f.r})


def check_inverse_l_upper(g: Graph) -> TheoremReport:
    _require(g)
    f = facts(g)
    bound = Fraction(g.n, f.l)
    return _verdict("inverse-l-upper", [g.name], f.ldim_f <= bound, None,
                    {"ldim_f": f.ldim_f, "n_over_l": bound})


def check_half_order_upper(g: Graph) -> TheoremReport:
    _require(g)
    f = facts(g)
    return _verdict("half-order-upper", [g.name], f.ldim_f <= Fraction(g.n, 2), None,
                    {"ldim_f": f.ldim_f, "half_order": Fraction(g.n, 2)})


def check_subset_contains_neighbourhood(g: Graph) -> TheoremReport:
    """Every vertex subset of size n - ldim + 1 contains some L(xy)."""
    claim = "subset-contains-neighbourhood"
    _require(g)
    if g.n > SUBSET_CEILING:
        return _skip(claim, [g.name], f"exhaustive subset check limited to n <= {SUBSET_CEILING}",
                     SKIP_CEILING)
    f = facts(g)
    size = g.n - f.ldim + 1
    masks = list(set(f.L.values()))
    checked = 0
    for subset in combinations(range(g.n), size):
        u = sum(1 << v for v in subset)
        checked += 1
        if not any(m & ~u == 0 for m in masks):
            return _verdict(claim, [g.name], False, {"subset": list(subset)}, {"size": size})
    return _verdict(claim, [g.name], True, None, {"size": size, "subsets": checked})


def check_odd_cycle_iff(g: Graph) -> TheoremReport:
    claim = "odd-cycle-iff-l-n-minus-1"
    _require(g)
    f = facts(g)
    lhs = f.l == g.n - 1
    rhs = is_odd_cycle(g)
    return _verdict(claim, [g.name], lhs == rhs, None, {"l": f.l, "n": g.n, "odd_cycle": rhs})


def check_ldim_lower_bound(g: Graph) -> TheoremReport:
    claim = "ldim-lower-bound"
    _require(g)
    if g.n > 24:
        return _skip(claim, [g.name], "integer ldim needs n <= 24", SKIP_CEILING)
    f = facts(g)
    bound = Fraction(g.n, g.n - f.ldim + 1)
    return _verdict(claim, [g.name], f.ldim_f >= bound, None,
                    {"ldim_f": f.ldim_f, "ldim": f.ldim, "bound": bound})


def check_vertex_transitive_value(g: Graph) -> TheoremReport:
    claim = "vertex-transitive-value"
    _require(g)
    f = facts(g)
    if not f.transitive:
        return _skip(claim, [g.name], "not vertex-transitive")
    target = Fraction(g.n, f.l)
    return _verdict(claim, [g.name], f.ldim_f == target, None, {"ldim_f": f.ldim_f, "n_over_l": target})


def check_vertex_transitive_l_eq_r(g: Graph) -> TheoremReport:
    claim = "vertex-transitive-l-eq-r"
    _require(g)
    f = facts(g)
    if not f.transitive or f.l != f.r:
        return _skip(claim, [g.name], "needs a vertex-transitive graph with l(G) = r(G)")
    return _verdict(claim, [g.name], f.ldim_f == f.dim_f, None, {"ldim_f": f.ldim_f, "dim_f": f.dim_f})


def check_vertex_deletion(g: Graph) -> TheoremReport:
    """ldim_f(G) - 1 <= ldim_f(G - v) for every non-cut vertex v."""
    claim = "vertex-deletion"
    _require(g, 3)
    base = facts(g).ldim_f
    skipped, checked = [], {}
    for v in range(g.n):
        h = delete_vertex(g, v)
        if not is_connected(h):
            skipped.append(v)
            continue
        val = facts(h).ldim_f
        checked[v] = val
        if base - 1 > val:
            return _verdict(claim, [g.name], False, {"vertex": v, "ldim_f": base, "ldim_f_minus_v": val},
                            {"ldim_f": base})
    return TheoremReport(claim, (g.name,), PASS, None,
                         {"ldim_f": base, "checked": len(checked), "cut_vertices_skipped": skipped})


def adjacency_k_resolved(g: Graph, k: int) -> bool:
    """Every edge xy has some w with d(y,w) >= k and x on a y-w geodesic, or the mirror image."""
    d = g.distances()
    for x, y in g.edges():
        ok = False
        for w in range(g.n):
            if d[y][w] >= k and d[y][x] + d[x][w] == d[y][w]:
                ok = True
                break
            if d[x][w] >= k and d[x][y] + d[y][w] == d[x][w]:
                ok = True
                break
        if not ok:
            return False
    return True


check_adjacency_k_resolved = adjacency_k_resolved


def check_adjacency_resolved_examples(g: Graph) -> TheoremReport:
    """Paths and cycles on n >= 2 vertices are adjacency ceil(n/2)-resolved."""
    claim = "paths-cycles-adjacency-resolved"
    if not (is_path_graph(g) and g.n >= 2) and not is_cycle_graph(g):
        return _skip(claim, [g.name], "not a path or cycle")
    k = -(-g.n // 2)
    holds = adjacency_k_resolved(g, k)
    return _verdict(claim, [g.name], holds, {"k": k, "diameter": diameter(g)}, {"k": k})


# -- family-specific closed forms ---------------------------------------------

def check_lollipop_value(g: Graph, m: int, n: int) -> TheoremReport:
    claim = "lollipop-value"
    if m < 3 or n < 2:
        return _skip(claim, [g.name], "needs m >= 3 and n >= 2")
    f = facts(g)
    target = Fraction(m, 2)
    return _verdict(claim, [g.name], f.ldim_f == target, None, {"ldim_f": f.ldim_f, "expected": target})


def check_multipartite_value(g: Graph, parts: tuple[int, ...]) -> TheoremReport:
    claim = "multipartite-value"
    k = len(parts)
    if k <= 2:
        return _skip(claim, [g.name], "needs more than two parts")
    f = facts(g)
    target = Fraction(k - 1)
    return _verdict(claim, [g.name], f.ldim_f == target, None, {"ldim_f": f.ldim_f, "expected": target})


def fan_expected(n: int) -> Fraction:
    return Fraction(2) if n == 3 else Fraction(n, 3)


def check_fan_value(g: Graph, n: int) -> TheoremReport:
    claim = "fan-value"
    if n < 3:
        return _skip(claim, [g.name], "needs n >= 3")
    f = facts(g)
    target = fan_expected(n)
    return _verdict(claim, [g.name], f.ldim_f == target, None, {"ldim_f": f.ldim_f, "expected": target})


def check_gap_witnesses(n: int) -> TheoremReport:
    """dim_f(K_{n,n}) = n with ldim_f = 1, and for even n dim_f(C_n) = n/(n-2) with ldim_f = 1."""
    claim = "gap-witnesses"
    values = {}
    holds = True
    if n >= 2:
        knn = complete_multipartite(n, n)
        values["dim_f(K_n,n)"] = facts(knn).dim_f
        values["ldim_f(K_n,n)"] = facts(knn).ldim_f
        holds &= values["dim_f(K_n,n)"] == n and values["ldim_f(K_n,n)"] == 1
    if n >= 4 and n % 2 == 0:
        cn = cycle(n)
        values["dim_f(C_n)"] = facts(cn).dim_f
        values["ldim_f(C_n)"] = facts(cn).ldim_f
        holds &= values["dim_f(C_n)"] == Fraction(n, n - 2) and values["ldim_f(C_n)"] == 1
    if not values:
        return _skip(claim, [f"n={n}"], "needs n >= 2")
    return _verdict(claim, [f"n={n}"], holds, None, values)


def check_gap_graph(g: Graph, spec: FamilySpec | None) -> TheoremReport:
    claim = "gap-witnesses"
    f = facts(g)
    if spec is not None and spec.kind == "complete_multipartite" and len(spec.params) == 2 \
            and spec.params[0] == spec.params[1]:
        n = spec.params[0]
        values = {"dim_f": f.dim_f, "ldim_f": f.ldim_f, "expected_dim_f": Fraction(n)}
        return _verdict(claim, [g.name], f.dim_f == n and f.ldim_f == 1, None, values)
    if is_cycle_graph(g) and g.n % 2 == 0:
        target = Fraction(g.n, g.n - 2)
        values = {"dim_f": f.dim_f, "ldim_f": f.ldim_f, "expected_dim_f": target}
        return _verdict(claim, [g.name], f.dim_f == target and f.ldim_f == 1, None, values)
    return _skip(claim, [g.name], "not K_{n,n} or an even cycle")


# -- joins --------------------------------------------------------------------

def check_join_theta(g1: Graph, g2: Graph) -> TheoremReport:
    claim = "join-closure"
    names = [g1.name, g2.name]
    if g1.n < 2 or g2.n < 2 or not is_connected(g1) or not is_connected(g2):
        return _skip(claim, names, "operands must be connected with n >= 2")
    a, b = facts(g1).ldim_f, facts(g2).ldim_f
    if a != Fraction(g1.n, 2) or b != Fraction(g2.n, 2):
        return _skip(claim, names, "an operand has ldim_f below half its order")
    joined = join(g1, g2)
    val = facts(joined).ldim_f
    target = Fraction(g1.n + g2.n, 2)
    return _verdict(claim, names, val == target, None, {"ldim_f(join)": val, "expected": target})


# -- strong products ----------------------------------------------------------

def _product_guard(claim, g: Graph, h: Graph):
    names = [g.name, h.name]
    if g.n * h.n > PRODUCT_CEILING:
        return _skip(claim, names, f"product exceeds {PRODUCT_CEILING} vertices", SKIP_CEILING)
    if g.n < 2 or h.n < 2:
        return _skip(claim, names, "both factors need at least two vertices")
    return None


def _layer_mask(n1: int, n2: int, rows: int, cols: int) -> int:
    """Vertices (a, b) with a in ``rows`` (mask over G) and b in ``cols`` (mask over H)."""
    out = 0
    for a in iter_bits(rows):
        out |= cols << (a * n2)
    return out


def distance_check_products(g: Graph, h: Graph) -> bool:
    """Strong-product distances are the max of factor distances, cartesian ones the sum."""
    if g.n * h.n > PRODUCT_CEILING:
        raise CeilingError(f"product exceeds {PRODUCT_CEILING} vertices")
    return strong_distance_law(g, h) is None and cartesian_distance_law(g, h) is None


def strong_distance_law(g: Graph, h: Graph):
    dg, dh = g.distances(), h.distances()
    dp = strong_product(g, h).distances()
    m = h.n
    for a in range(g.n * m):
        for b in range(g.n * m):
            if dp[a][b] != max(dg[a // m][b // m], dh[a % m][b % m]):
                return [a, b]
    return None


def cartesian_distance_law(g: Graph, h: Graph):
    dg, dh = g.distances(), h.distances()
    dp = cartesian_product(g, h).distances()
    m = h.n
    for a in range(g.n * m):
        for b in range(g.n * m):
            if dp[a][b] != dg[a // m][b // m] + dh[a % m][b % m]:
                return [a, b]
    return None


def check_strong_distance_law(g: Graph, h: Graph) -> TheoremReport:
    claim = "strong-distance-law"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    bad = strong_distance_law(g, h)
    return _verdict(claim, [g.name, h.name], bad is None, {"pair": bad}, {})


def check_cartesian_distance_law(g: Graph, h: Graph) -> TheoremReport:
    claim = "cartesian-distance-law"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    bad = cartesian_distance_law(g, h)
    return _verdict(claim, [g.name, h.name], bad is None, {"pair": bad}, {})


def check_strong_layer_lemma(g: Graph, h: Graph) -> TheoremReport:
    """L in G x H lies in the layer sets built from L_G and L_H, case by case."""
    claim = "strong-layer-containment"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    p = strong_product(g, h)
    n1, n2 = g.n, h.n
    LG, LH = facts(g).L, facts(h).L
    all_g, all_h = (1 << n1) - 1, (1 << n2) - 1
    equal_cases = 0
    for (a, b), m in facts(p).L.items():
        i, j = divmod(a, n2)
        k, l = divmod(b, n2)
        if i == k:
            bound = _layer_mask(n1, n2, all_g, LH[(min(j, l), max(j, l))])
        elif j == l:
            bound = _layer_mask(n1, n2, LG[(min(i, k), max(i, k))], all_h)
        else:
            bound = (_layer_mask(n1, n2, all_g, LH[(min(j, l), max(j, l))])
                     | _layer_mask(n1, n2, LG[(min(i, k), max(i, k))], all_h))
        if m & ~bound:
            return _verdict(claim, [g.name, h.name], False,
                            {"edge": [[i, j], [k, l]], "outside": [divmod(x, n2) for x in iter_bits(m & ~bound)]},
                            {})
        equal_cases += m == bound
    return _verdict(claim, [g.name, h.name], True, None,
                    {"edges": p.num_edges, "edges_with_equality": equal_cases})


def resolved_k(g: Graph, h: Graph) -> int | None:
    """Least k in diam(G)+1 .. |V(H)| with H adjacency k-resolved, else None."""
    for k in range(diameter(g) + 1, h.n + 1):
        if adjacency_k_resolved(h, k):
            return k
    return None


def check_strong_resolved_containment(g: Graph, h: Graph) -> TheoremReport:
    """With diam(G) < k and H adjacency k-resolved: L in G x H within L_G(u_i u_r) x V(H).

    The right-hand side only makes sense when u_i u_r is an edge of G, so
    product edges inside one H-layer are outside the statement and not checked.
    """
    claim = "strong-resolved-containment"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    k = resolved_k(g, h)
    if k is None:
        return _skip(claim, [g.name, h.name], "H is not adjacency k-resolved for any k > diam(G)")
    p = strong_product(g, h)
    n1, n2 = g.n, h.n
    LG = facts(g).L
    all_h = (1 << n2) - 1
    checked = 0
    for (a, b), m in facts(p).L.items():
        i, j = divmod(a, n2)
        r, l = divmod(b, n2)
        if i == r:
            continue
        checked += 1
        bound = _layer_mask(n1, n2, LG[(min(i, r), max(i, r))], all_h)
        if m & ~bound:
            return _verdict(claim, [g.name, h.name], False,
                            {"k": k, "edge": [[i, j], [r, l]],
                             "outside": [divmod(x, n2) for x in iter_bits(m & ~bound)]},
                            {"k": k})
    return _verdict(claim, [g.name, h.name], True, None, {"k": k, "edges_checked": checked})


def check_strong_resolved_bound(g: Graph, h: Graph) -> TheoremReport:
    claim = "strong-resolved-bound"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    k = resolved_k(g, h)
    if k is None:
        return _skip(claim, [g.name, h.name], "H is not adjacency k-resolved for any k > diam(G)")
    val = facts(strong_product(g, h)).ldim_f
    bound = h.n * facts(g).ldim_f
    return _verdict(claim, [g.name, h.name], val <= bound, None,
                    {"k": k, "ldim_f(product)": val, "bound": bound})


def check_strong_sandwich(g: Graph, h: Graph) -> TheoremReport:
    claim = "strong-sandwich"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    a, b = facts(g).ldim_f, facts(h).ldim_f
    upper = g.n * b + h.n * a - 2 * a * b
    val = facts(strong_product(g, h)).ldim_f
    return _verdict(claim, [g.name, h.name], 2 <= val <= upper, None,
                    {"ldim_f(product)": val, "upper": upper, "tight_upper": val == upper})


def check_strong_bounds(g: Graph, h: Graph) -> TheoremReport:
    """The sandwich always; under the k-resolved hypothesis also the layer bound and containment."""
    parts = [check_strong_sandwich(g, h), check_strong_resolved_bound(g, h),
             check_strong_resolved_containment(g, h)]
    return _combine("strong-bounds", [g.name, h.name], parts)


# -- cartesian products -------------------------------------------------------

def check_cartesian_formula(g: Graph, h: Graph) -> TheoremReport:
    """Exact L in G box H: V(G) x L_H on H-edges, L_G x V(H) on G-edges."""
    claim = "cartesian-neighbourhood-formula"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    p = cartesian_product(g, h)
    n1, n2 = g.n, h.n
    LG, LH = facts(g).L, facts(h).L
    for (a, b), m in facts(p).L.items():
        i, j = divmod(a, n2)
        k, l = divmod(b, n2)
        if i == k:
            expected = _layer_mask(n1, n2, (1 << n1) - 1, LH[(min(j, l), max(j, l))])
        else:
            expected = _layer_mask(n1, n2, LG[(min(i, k), max(i, k))], (1 << n2) - 1)
        if m != expected:
            return _verdict(claim, [g.name, h.name], False,
                            {"edge": [[i, j], [k, l]],
                             "symmetric_difference": [divmod(x, n2) for x in iter_bits(m ^ expected)]}, {})
    return _verdict(claim, [g.name, h.name], True, None, {"edges": p.num_edges})


def _cart(g, h) -> Fraction:
    return facts(cartesian_product(g, h)).ldim_f


def check_cartesian_monotone(g: Graph, h: Graph) -> TheoremReport:
    claim = "cartesian-monotone"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    val, a = _cart(g, h), facts(g).ldim_f
    return _verdict(claim, [g.name, h.name], val >= a, None, {"ldim_f(product)": val, "ldim_f(G)": a})


def check_grid_value(g: Graph, h: Graph) -> TheoremReport:
    claim = "grid-value"
    if not (is_path_graph(g) and is_path_graph(h)):
        return _skip(claim, [g.name, h.name], "factors are not both paths")
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    val = _cart(g, h)
    return _verdict(claim, [g.name, h.name], val == 1, None, {"ldim_f(product)": val})


def check_prism_bound(g: Graph, h: Graph) -> TheoremReport:
    claim = "prism-bound"
    if not is_k2(g):
        return _skip(claim, [g.name, h.name], "first factor is not K2")
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    val, b = _cart(g, h), facts(h).ldim_f
    return _verdict(claim, [g.name, h.name], val <= b, None, {"ldim_f(product)": val, "ldim_f(H)": b})


def check_prism_sharpness(g: Graph, h: Graph) -> TheoremReport:
    """K2 box G equals ldim_f(G) = 1 for bipartite G, and n/(n-1) for odd cycles C_n."""
    claim = "prism-sharpness"
    if not is_k2(g) or not (is_bipartite(h) or is_odd_cycle(h)):
        return _skip(claim, [g.name, h.name], "needs K2 with a bipartite graph or an odd cycle")
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    val = _cart(g, h)
    target = Fraction(1) if is_bipartite(h) else Fraction(h.n, h.n - 1)
    return _verdict(claim, [g.name, h.name], val == target, None, {"ldim_f(product)": val, "expected": target})


def check_cartesian_half_order(g: Graph, h: Graph) -> TheoremReport:
    claim = "cartesian-half-order"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    half = Fraction(h.n, 2)
    if facts(h).ldim_f != half:
        return _skip(claim, [g.name, h.name], "ldim_f(H) is not half the order of H")
    val = _cart(g, h)
    return _verdict(claim, [g.name, h.name], val >= half, None, {"ldim_f(product)": val, "half_order_H": half})


def check_cartesian_max(g: Graph, h: Graph) -> TheoremReport:
    claim = "cartesian-max"
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    a, b = facts(g).ldim_f, facts(h).ldim_f
    if a != Fraction(g.n, 2) or b != Fraction(h.n, 2):
        return _skip(claim, [g.name, h.name], "a factor has ldim_f below half its order")
    val = _cart(g, h)
    return _verdict(claim, [g.name, h.name], val >= max(a, b), None,
                    {"ldim_f(product)": val, "max_factor": max(a, b)})


def check_cartesian_complete_factor(g: Graph, h: Graph) -> TheoremReport:
    claim = "cartesian-complete-factor"
    if not (is_complete_graph(h) and h.n >= 3 and g.n < h.n):
        return _skip(claim, [g.name, h.name], "needs H = K_n, n >= 3, and |V(G)| < n")
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    val, target = _cart(g, h), Fraction(h.n, 2)
    return _verdict(claim, [g.name, h.name], val == target, None, {"ldim_f(product)": val, "expected": target})


def check_complete_cartesian_complete(g: Graph, h: Graph) -> TheoremReport:
    claim = "complete-cartesian-complete"
    if not (is_complete_graph(g) and is_complete_graph(h) and 2 <= g.n <= h.n and h.n >= 3):
        return _skip(claim, [g.name, h.name], "needs K_k box K_n with 2 <= k <= n, n >= 3")
    skip = _product_guard(claim, g, h)
    if skip:
        return skip
    val, target = _cart(g, h), Fraction(h.n, 2)
    note = "k = n case" if g.n == h.n else ""
    return _verdict(claim, [g.name, h.name], val == target, None,
                    {"ldim_f(product)": val, "expected": target}, note)


def check_cartesian_claims(g: Graph, h: Graph) -> TheoremReport:
    parts = [
        check_cartesian_formula(g, h), check_cartesian_monotone(g, h), check_cartesian_max(g, h),
        check_prism_bound(g, h), check_cartesian_complete_factor(g, h),
        check_complete_cartesian_complete(g, h),
    ]
    return _combine("cartesian-claims", [g.name, h.name], parts)


def _combine(claim, names, parts: list[TheoremReport]) -> TheoremReport:
    values = {p.claim: p.status for p in parts}
    failed = [p for p in parts if p.status == FAIL]
    if failed:
        return TheoremReport(claim, tuple(names), FAIL, {p.claim: p.witness for p in failed}, values)
    if all(p.status == SKIP_CEILING for p in parts):
        return TheoremReport(claim, tuple(names), SKIP_CEILING, None, values)
    if all(p.status != PASS for p in parts):
        return TheoremReport(claim, tuple(names), SKIP_HYPOTHESIS, None, values)
    return TheoremReport(claim, tuple(names), PASS, None, values)


# -- exhaustive odd-cycle characterisation ------------------------------------

def connected_graphs_upto_iso(n: int):
    """Every connected graph on n vertices, at least once per isomorphism class.

    n <= 7 comes from the networkx graph atlas (complete up to isomorphism);
    n = 8 extends every 7-vertex atlas graph by one vertex with each possible
    neighbourhood, which reaches every 8-vertex graph.
    """
    import networkx as nx

    if n <= 7:
        for a in nx.graph_atlas_g():
            if a.number_of_nodes() == n and (n == 1 or nx.is_connected(a)):
                yield build_graph(n, list(a.edges()))
        return
    if n != 8:
        raise CeilingError("exhaustive enumeration supports n <= 8")
    for a in nx.graph_atlas_g():
        if a.number_of_nodes() != 7:
            continue
        base = [0] * 8
        for u, v in a.edges():
            base[u] |= 1 << v
            base[v] |= 1 << u
        for nb in range(1, 1 << 7):
            adj = list(base)
            adj[7] = nb
            for u in iter_bits(nb):
                adj[u] |= 1 << 7
            g = Graph(8, tuple(adj))
            if is_connected(g):
                yield g


def _l_value(g: Graph) -> int:
    d = g.distances()
    best = g.n
    for u, v in g.edges():
        du, dv = d[u], d[v]
        c = sum(1 for x in range(g.n) if du[x] != dv[x])
        if c < best:
            best = c
    return best


def exhaustive_odd_cycle_check(max_n: int = 8) -> TheoremReport:
    """l(G) = n - 1 exactly for odd cycles, over all connected graphs with 2 <= n <= max_n."""
    claim = "odd-cycle-iff-l-n-minus-1"
    counts = {}
    for n in range(2, max_n + 1):
        seen = 0
        for g in connected_graphs_upto_iso(n):
            seen += 1
            if (_l_value(g) == n - 1) != is_odd_cycle(g):
                return TheoremReport(claim, (f"all connected n<={max_n}",), FAIL,
                                     {"n": n, "edges": g.edges(), "l": _l_value(g)}, counts)
        counts[f"n={n}"] = seen
    return TheoremReport(claim, (f"all connected n<={max_n}",), PASS, None, counts)


# -- registry and suites ------------------------------------------------------

@dataclass(frozen=True)
class Subject:
    spec: FamilySpec | None
    graph: Graph

    @property
    def operands(self) -> list[Graph] | None:
        if self.spec is not None and self.spec.kind in ("strong_product", "cartesian_product", "join"):
            return [make_family(q) for q in self.spec.params]
        return None


def _single(fn):
    return lambda s: fn(s.graph)


def _on_kind(kind: str, fn, claim: str):
    def run(s: Subject):
        ops = s.operands
        if ops is None or s.spec.kind != kind:
            return _skip(claim, [s.graph.name], f"subject is not a {kind.replace('_', ' ')}")
        report = fn(*ops)
        report.graphs = (s.graph.name,)
        return report
    return run


def _on_family(kind: str, fn, claim: str):
    def run(s: Subject):
        if s.spec is None or s.spec.kind != kind:
            return _skip(claim, [s.graph.name], f"subject is not a {kind} family graph")
        return fn(s.graph, *s.spec.params) if kind != "complete_multipartite" \
            else fn(s.graph, s.spec.params)
    return run


def _cliques_for(s: Subject) -> list[list[int]]:
    if s.spec is not None and s.spec.kind == "lollipop":
        return [list(range(s.spec.params[0]))]
    if is_complete_graph(s.graph) and s.graph.n >= 3:
        return [list(range(s.graph.n))]
    return []


def _clique_claim(s: Subject) -> TheoremReport:
    return check_clique_theorem(s.graph, _cliques_for(s))


# claim id -> (description, runner)
CLAIMS: dict[str, tuple[str, Callable[[Subject], TheoremReport]]] = {
    "basic-chain": ("1 <= ldim_f <= ldim <= n-1 and ldim_f <= dim_f", _single(check_basic_chain)),
    "bipartite-iff-one": ("ldim_f = 1 iff bipartite", _single(check_bipartite_iff_one)),
    "bipartite-iff-full-neighbourhoods": ("L(uv) = V for all edges iff bipartite",
                                          _single(check_bipartite_iff_full)),
    "twin-neighbourhood": ("{u,v} in L(uv); equality iff true twins", _single(check_twin_neighbourhoods)),
    "half-order-characterization": ("ldim_f = n/2 iff all vertices have true twins iff H[cliques] form",
                                    _single(check_half_n_characterization)),
    "join-closure": ("joins of half-order graphs are half-order",
                     _on_kind("join", check_join_theta, "join-closure")),
    "clique-sum": ("ldim_f = half the clique total iff clique L-sets sit inside every other L",
                   _clique_claim),
    "lollipop-value": ("ldim_f(L_{m,n}) = m/2", _on_family("lollipop", check_lollipop_value, "lollipop-value")),
    "r-le-l": ("r(G) <= l(G)", _single(check_r_le_l)),
    "inverse-l-upper": ("ldim_f <= n/l(G)", _single(check_inverse_l_upper)),
    "half-order-upper": ("ldim_f <= n/2", _single(check_half_order_upper)),
    "subset-contains-neighbourhood": ("every (n-ldim+1)-subset contains some L(xy)",
                                      _single(check_subset_contains_neighbourhood)),
    "odd-cycle-iff-l-n-minus-1": ("l(G) = n-1 iff odd cycle", _single(check_odd_cycle_iff)),
    "ldim-lower-bound": ("ldim_f >= n/(n-ldim+1)", _single(check_ldim_lower_bound)),
    "gap-witnesses": ("dim_f(K_n,n) = n, dim_f(C_2k) = n/(n-2), both with ldim_f = 1",
                      lambda s: check_gap_graph(s.graph, s.spec)),
    "multipartite-value": ("ldim_f(K_{a1..ak}) = k-1 for k > 2",
                           _on_family("complete_multipartite", check_multipartite_value, "multipartite-value")),
    "vertex-transitive-value": ("vertex-transitive => ldim_f = n/l", _single(check_vertex_transitive_value)),
    "vertex-transitive-l-eq-r": ("vertex-transitive and l = r => ldim_f = dim_f",
                                 _single(check_vertex_transitive_l_eq_r)),
    "vertex-deletion": ("ldim_f(G) - 1 <= ldim_f(G - v)", _single(check_vertex_deletion)),
    "fan-value": ("ldim_f(F_{1,n}) = 2 (n=3), n/3 (n>=4)", _on_family("fan", check_fan_value, "fan-value")),
    "paths-cycles-adjacency-resolved": ("paths and cycles are adjacency ceil(n/2)-resolved",
                                        _single(check_adjacency_resolved_examples)),
    "strong-distance-law": ("strong product distance = max",
                            _on_kind("strong_product", check_strong_distance_law, "strong-distance-law")),
    "strong-layer-containment": ("L in a strong product lies in the layer sets",
                                 _on_kind("strong_product", check_strong_layer_lemma, "strong-layer-containment")),
    "strong-resolved-containment": ("diam(G) < k, H k-resolved => L within L_G x V(H)",
                                    _on_kind("strong_product", check_strong_resolved_containment,
                                             "strong-resolved-containment")),
    "strong-resolved-bound": ("diam(G) < k, H k-resolved => ldim_f(G x H) <= n2 ldim_f(G)",
                              _on_kind("strong_product", check_strong_resolved_bound, "strong-resolved-bound")),
    "strong-sandwich": ("2 <= ldim_f(G x H) <= n1 b + n2 a - 2ab",
                        _on_kind("strong_product", check_strong_sandwich, "strong-sandwich")),
    "cartesian-distance-law": ("cartesian product distance = sum",
                               _on_kind("cartesian_product", check_cartesian_distance_law, "cartesian-distance-law")),
    "cartesian-neighbourhood-formula": ("exact L in a cartesian product",
                                        _on_kind("cartesian_product", check_cartesian_formula,
                                                 "cartesian-neighbourhood-formula")),
    "cartesian-monotone": ("ldim_f(G box H) >= ldim_f(G)",
                           _on_kind("cartesian_product", check_cartesian_monotone, "cartesian-monotone")),
    "grid-value": ("ldim_f(P_n box P_t) = 1", _on_kind("cartesian_product", check_grid_value, "grid-value")),
    "prism-bound": ("ldim_f(K2 box G) <= ldim_f(G)",
                    _on_kind("cartesian_product", check_prism_bound, "prism-bound")),
    "prism-sharpness": ("K2 box G: 1 for bipartite G, n/(n-1) for odd cycles",
                        _on_kind("cartesian_product", check_prism_sharpness, "prism-sharpness")),
    "cartesian-half-order": ("ldim_f(H) = n/2 => ldim_f(G box H) >= n/2",
                             _on_kind("cartesian_product", check_cartesian_half_order, "cartesian-half-order")),
    "cartesian-max": ("both factors half-order => ldim_f(G box H) >= max",
                      _on_kind("cartesian_product", check_cartesian_max, "cartesian-max")),
    "cartesian-complete-factor": ("|V(G)| < n => ldim_f(G box K_n) = n/2",
                                  _on_kind("cartesian_product", check_cartesian_complete_factor,
                                           "cartesian-complete-factor")),
    "complete-cartesian-complete": ("2 <= k <= n => ldim_f(K_k box K_n) = n/2",
                                    _on_kind("cartesian_product", check_complete_cartesian_complete,
                                             "complete-cartesian-complete")),
}


def run_claim(claim: str, subject: Subject) -> TheoremReport:
    _, runner = CLAIMS[claim]
    try:
        return runner(subject)
    except CeilingError as exc:
        return _skip(claim, [subject.graph.name], str(exc), SKIP_CEILING)
    except HypothesisUnmet as exc:
        return _skip(claim, [subject.graph.name], str(exc))


def run_suite(corpus: list, claims: list[str] | None = None) -> list[TheoremReport]:
    """Every claim against every corpus entry, ordered by claim then corpus position.

    Corpus entries are FamilySpecs or bare Graphs (family-specific claims
    then skip).
    """
    claims = list(CLAIMS) if claims is None else claims
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise GraphError(f"unknown claim ids: {', '.join(unknown)}")
    subjects = []
    for entry in corpus:
        if isinstance(entry, FamilySpec):
            subjects.append(Subject(entry, make_family(entry)))
        else:
            subjects.append(Subject(None, entry))
    return [run_claim(c, s) for c in claims for s in subjects]


def reports_to_json(reports: list[TheoremReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
