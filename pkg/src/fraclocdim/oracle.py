"""Brute-force covering-LP optimum by vertex enumeration.

Shares nothing with the simplex in :mod:`fraclocdim.lp`. For every support
pattern S (a subset of the variables) the candidate vertices with exactly
that support are the solutions of A_T x = 1 restricted to S, where T ranges
over |S|-sets of rows. At such a vertex a row that strictly contains another
row (after restriction to S) cannot be tight, because x is positive on S, so
only inclusion-minimal restricted rows are tried. Meant for n <= 8 or so.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def _bits(mask: int, n: int) -> list[int]:
    return [v for v in range(n) if (mask >> v) & 1]


def _solve_square(rows: list[list[int]]) -> list[Fraction] | None:
    """Solve rows @ x = 1 exactly; None when singular."""
    k = len(rows)
    m = [[Fraction(a) for a in r] + [Fraction(1)] for r in rows]
    for col in range(k):
        piv = next((i for i in range(col, k) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pr = m[col]
        inv = 1 / pr[col]
        for i in range(k):
            if i != col and m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
    return [m[i][k] / m[i][i] for i in range(k)]


def covering_optimum(rows: list[int], n: int) -> Fraction:
    rows = list(set(rows))
    if not rows or any(r == 0 for r in rows):
        raise ValueError("oracle needs nonempty rows")
    best = None
    for support in range(1, 1 << n):
        restricted = {r & support for r in rows}
        if 0 in restricted:
            continue
        minimal = [r for r in restricted if not any(o != r and o & ~r == 0 for o in restricted)]
        cols = _bits(support, n)
        k = len(cols)
        if len(minimal) < k:
            continue
        vecs = [[(r >> c) & 1 for c in cols] for r in minimal]
        for choice in combinations(range(len(vecs)), k):
            sol = _solve_square([vecs[i] for i in choice])
            if sol is None or any(s <= 0 for s in sol):
                continue
            x = dict(zip(cols, sol))
            if all(sum(x.get(v, 0) for v in _bits(r, n)) >= 1 for r in rows):
                total = sum(sol)
                if best is None or total < best:
                    best = total
    if best is None:
        raise AssertionError("no vertex found; the covering polyhedron always has one")
    return best
