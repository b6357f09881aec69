"""Exact covering LPs and the simplex solver behind ldim_f and dim_f.

A covering LP here is always

    minimise  sum_v x_v   subject to  sum_{v in row} x_v >= 1  for every row,
                                      x >= 0,

with 0/1 rows given as bitmasks over the vertex indices. It is solved through
its packing dual

    maximise  sum_r y_r   subject to  sum_{r containing v} y_r <= 1  for every v,
                                      y >= 0,

whose origin is feasible, so no phase one is needed. The tableau is kept
fraction-free: all entries are integers over one shared positive denominator
(the determinant of the current basis), and every pivot divides exactly by
the previous denominator. Bland's rule picks both the entering and the
leaving variable, which rules out cycling on degenerate pivots.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import CeilingError, Graph, GraphError, iter_bits, size_ceiling
from .resolve import local_masks, pair_masks

Rational = Fraction

ROW_CEILING = 20000

_OPS = {"+": operator.add, "-": operator.sub, "*": operator.mul, "/": operator.truediv}


class SolverError(RuntimeError):
    """The solver's own certificate check failed. Always a bug, never a result."""


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    if op == "/" and b == 0:
        raise ZeroDivisionError("division of a rational by zero")
    return fn(Fraction(a), Fraction(b))


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    rows: tuple[int, ...]

    def row_sets(self) -> list[list[int]]:
        return [list(iter_bits(r)) for r in self.rows]

    def to_text(self) -> str:
        """One line per row listing its vertex indices."""
        return "".join(" ".join(map(str, iter_bits(r))) + "\n" for r in self.rows)


def parse_lp_text(text: str, num_vars: int) -> LinearProgram:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            bits = 0
            for tok in line.split():
                bits |= 1 << int(tok)
            rows.append(bits)
    return build_covering_lp(rows, num_vars, reduce=False)


def drop_dominated(rows: Iterable[int]) -> list[int]:
    """Deduplicate, then remove every row that strictly contains another row."""
    uniq = sorted(set(rows), key=lambda r: (r.bit_count(), r))
    kept: list[int] = []
    for r in uniq:
        if not any(k & ~r == 0 for k in kept):
            kept.append(r)
    return kept


def build_covering_lp(rows: Iterable[int], n: int, reduce: bool = True) -> LinearProgram:
    rows = list(rows)
    full = (1 << n) - 1
    for r in rows:
        if r == 0:
            raise GraphError("empty covering row: the input is disconnected or malformed")
        if r & ~full:
            raise GraphError(f"row {sorted(iter_bits(r))} has indices outside 0..{n - 1}")
    if reduce:
        rows = drop_dominated(rows)
    else:
        rows = sorted(set(rows), key=lambda r: (r.bit_count(), r))
    return LinearProgram(n, tuple(rows))


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    assignment: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    basis: tuple[int, ...]
    tight_rows: tuple[int, ...]
    pivots: int

    def __str__(self) -> str:
        return format_rational(self.value)


def _pivot(tab: list[list[int]], obj: list[int], p: int, q: int, denom: int) -> int:
    prow = tab[p]
    piv = prow[q]
    for i, row in enumerate(tab):
        if i == p:
            continue
        f = row[q]
        if f == 0:
            if piv != denom:
                tab[i] = [a * piv // denom for a in row]
        else:
            tab[i] = [(a * piv - f * b) // denom for a, b in zip(row, prow)]
    f = obj[q]
    obj[:] = [(a * piv - f * b) // denom for a, b in zip(obj, prow)]
    return piv


def solve_lp(lp: LinearProgram) -> LpSolution:
    """Exact optimum of the covering LP, with a verified duality certificate."""
    if not lp.rows:
        raise GraphError("covering LP has no rows")
    n = lp.num_vars
    R = len(lp.rows)
    width = R + n + 1
    rhs = width - 1
    # one packing constraint per vertex; columns: y_0..y_{R-1}, s_0..s_{n-1}, rhs
    tab = []
    for v in range(n):
        row = [0] * width
        for j, r in enumerate(lp.rows):
            if (r >> v) & 1:
                row[j] = 1
        row[R + v] = 1
        row[rhs] = 1
        tab.append(row)
    obj = [-1] * R + [0] * (n + 1)
    basis = [R + v for v in range(n)]
    denom = 1
    pivots = 0
    while True:
        q = next((j for j in range(rhs) if obj[j] < 0), None)
        if q is None:
            break
        p = None
        for i in range(n):
            a = tab[i][q]
            if a <= 0:
                continue
            if p is None:
                p = i
                continue
            # compare rhs_i / a_i against rhs_p / a_p without dividing
            lhs = tab[i][rhs] * tab[p][q]
            cur = tab[p][rhs] * a
            if lhs < cur or (lhs == cur and basis[i] < basis[p]):
                p = i
        if p is None:
            raise SolverError("packing dual is unbounded, impossible for a nonempty 0/1 system")
        denom = _pivot(tab, obj, p, q, denom)
        basis[p] = q
        pivots += 1

    value = Fraction(obj[rhs], denom)
    dual = [Fraction(0)] * R
    for i, b in enumerate(basis):
        if b < R:
            dual[b] = Fraction(tab[i][rhs], denom)
    x = [min(Fraction(obj[R + v], denom), Fraction(1)) for v in range(n)]
    sol = LpSolution(
        value=value,
        assignment=tuple(x),
        dual=tuple(dual),
        basis=tuple(sorted(b for b in basis if b < R)),
        tight_rows=tuple(j for j, r in enumerate(lp.rows) if sum(x[v] for v in iter_bits(r)) == 1),
        pivots=pivots,
    )
    verify_solution(lp, sol)
    return sol


def verify_solution(lp: LinearProgram, sol: LpSolution) -> None:
    """Primal feasibility, dual feasibility and equal objectives, or SolverError."""
    x, y = sol.assignment, sol.dual
    if any(not 0 <= xv <= 1 for xv in x):
        raise SolverError(f"assignment leaves [0,1]: {x}")
    for j, r in enumerate(lp.rows):
        if sum(x[v] for v in iter_bits(r)) < 1:
            raise SolverError(f"row {j} {sorted(iter_bits(r))} is not covered")
    if any(yj < 0 for yj in y):
        raise SolverError("negative dual value")
    load = [Fraction(0)] * lp.num_vars
    for yj, r in zip(y, lp.rows):
        if yj:
            for v in iter_bits(r):
                load[v] += yj
    if any(lv > 1 for lv in load):
        raise SolverError("dual packing constraint violated")
    primal, dual = sum(x, Fraction(0)), sum(y, Fraction(0))
    if not primal == dual == sol.value:
        raise SolverError(f"duality gap: primal {primal}, dual {dual}, reported {sol.value}")


def _check_size(g: Graph, rows: int) -> None:
    if g.n < 2:
        raise GraphError("fractional dimensions need a graph with at least two vertices")
    limit = size_ceiling()
    if g.n > limit:
        raise CeilingError(f"n={g.n} exceeds the LP ceiling {limit} (set FRACLOCDIM_MAX_N)")
    if rows > ROW_CEILING:
        raise CeilingError(f"{rows} covering rows exceed the ceiling {ROW_CEILING}")


def ldim_f_lp(g: Graph, reduce: bool = True) -> LinearProgram:
    masks = list(local_masks(g).values())
    _check_size(g, len(masks))
    return build_covering_lp(masks, g.n, reduce)


def dim_f_lp(g: Graph, reduce: bool = True) -> LinearProgram:
    masks = list(pair_masks(g).values())
    _check_size(g, len(masks))
    return build_covering_lp(masks, g.n, reduce)


def ldim_f(g: Graph) -> LpSolution:
    """Fractional local metric dimension: rows L(uv) over the edges."""
    return solve_lp(ldim_f_lp(g))


def dim_f(g: Graph) -> LpSolution:
    """Fractional metric dimension: rows R(u,v) over all vertex pairs."""
    return solve_lp(dim_f_lp(g))
