"""The builtin verification corpus and corpus-file loading."""

from __future__ import annotations

from .families import FamilySpec, parse_family_string
from .graph import GraphError

BUILTIN_GRAPHS = [
    "path(2)", "path(3)", "path(4)", "path(6)",
    "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "cycle(7)", "cycle(8)", "cycle(9)",
    "complete(3)", "complete(4)", "complete(5)", "complete(6)", "complete(7)", "complete(8)",
    "star(3)", "star(4)",
    "fan(3)", "fan(4)", "fan(5)", "fan(6)", "fan(7)",
    "lollipop(3,2)", "lollipop(4,3)", "lollipop(5,2)",
    "multipartite(2,2)", "multipartite(2,3)", "multipartite(3,3)", "multipartite(4,4)",
    "multipartite(2,2,2)", "multipartite(2,3,4)", "multipartite(2,2,3,3)",
    "hypercube(2)", "hypercube(3)", "hypercube(4)",
    "petersen",
    "join(complete(3),complete(4))",
    "join(strong(complete(2),complete(2)),complete(2))",
    "join(path(3),complete(3))",
    "join(cycle(4),complete(1))",
    "lex(path(3),complete(2),complete(2),complete(2))",
]

BUILTIN_PRODUCTS = [
    "strong(complete(2),complete(2))",
    "strong(complete(2),complete(3))",
    "strong(complete(3),complete(4))",
    "strong(path(2),path(3))",
    "strong(cycle(5),complete(2))",
    "strong(cycle(4),complete(2))",
    "strong(complete(3),path(6))",
    "strong(path(3),path(3))",
    "strong(complete(3),complete(3))",
    "strong(petersen,complete(2))",
    "strong(complete(2),cycle(6))",
    "strong(cycle(5),cycle(5))",
    "cartesian(path(4),path(5))",
    "cartesian(path(3),path(3))",
    "cartesian(complete(2),cycle(3))",
    "cartesian(complete(2),cycle(5))",
    "cartesian(complete(2),cycle(7))",
    "cartesian(complete(2),cycle(6))",
    "cartesian(complete(2),petersen)",
    "cartesian(path(3),complete(4))",
    "cartesian(complete(3),complete(5))",
    "cartesian(cycle(4),complete(5))",
    "cartesian(complete(2),complete(3))",
    "cartesian(complete(3),complete(3))",
    "cartesian(complete(4),complete(4))",
    "cartesian(cycle(5),cycle(5))",
    "cartesian(complete(3),cycle(4))",
    "cartesian(complete(2),complete(4))",
]


def builtin_corpus() -> list[FamilySpec]:
    seen, out = set(), []
    for s in BUILTIN_GRAPHS + BUILTIN_PRODUCTS:
        spec = parse_family_string(s)
        if spec not in seen:
            seen.add(spec)
            out.append(spec)
    return out


def parse_corpus(text: str) -> list[FamilySpec]:
    """One family string per line; '#' starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_family_string(line))
        except GraphError as exc:
            raise GraphError(f"corpus line {lineno}: {exc}") from None
    return out
