"""Invariant tables and report rendering (json, csv, aligned text)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .graph import CeilingError, Graph
from .harness import TheoremReport
from .lp import dim_f, format_rational, ldim_f
from .resolve import integer_ldim, l_parameter, r_parameter

TABLE_COLUMNS = ["graph", "n", "m", "l", "r", "ldim", "ldim_f", "dim_f"]
REPORT_COLUMNS = ["claim", "graphs", "status", "values", "witness"]


@dataclass(frozen=True)
class TableRow:
    graph: str
    n: int
    m: int
    l: int
    r: int
    ldim: int | None  # None when over the exhaustive-search ceiling
    ldim_f: Fraction
    dim_f: Fraction

    def cells(self, decimal: bool = False) -> list[str]:
        out = [self.graph, str(self.n), str(self.m), str(self.l), str(self.r),
               "-" if self.ldim is None else str(self.ldim),
               format_rational(self.ldim_f), format_rational(self.dim_f)]
        if decimal:
            out += [f"{float(self.ldim_f):.6f}", f"{float(self.dim_f):.6f}"]
        return out


def table_row(g: Graph) -> TableRow:
    try:
        ldim = integer_ldim(g)
    except CeilingError:
        ldim = None
    return TableRow(g.name, g.n, g.num_edges, l_parameter(g), r_parameter(g), ldim,
                    ldim_f(g).value, dim_f(g).value)


def _columns(decimal: bool) -> list[str]:
    return TABLE_COLUMNS + (["ldim_f_decimal", "dim_f_decimal"] if decimal else [])


def _aligned(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _report_cells(r: TheoremReport) -> list[str]:
    d = r.to_dict()
    return [r.claim, ";".join(r.graphs), r.status,
            json.dumps(d["values"], sort_keys=True, separators=(",", ":")),
            "" if d["witness"] is None else json.dumps(d["witness"], sort_keys=True, separators=(",", ":"))]


def emit_report(results: list, fmt: str = "csv", decimal: bool = False) -> str:
    """Render TableRows or TheoremReports. Fractions always appear as p/q."""
    if fmt not in ("json", "csv", "table"):
        raise ValueError(f"unknown format {fmt!r}")
    if results and isinstance(results[0], TheoremReport):
        if fmt == "json":
            return json.dumps([r.to_dict() for r in results], indent=2, sort_keys=True) + "\n"
        rows = [_report_cells(r) for r in results]
        return _csv(REPORT_COLUMNS, rows) if fmt == "csv" else _aligned(REPORT_COLUMNS, rows)
    header = _columns(decimal)
    rows = [r.cells(decimal) for r in results]
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    return _csv(header, rows) if fmt == "csv" else _aligned(header, rows)


def summary_line(reports: list[TheoremReport]) -> str:
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    return ", ".join(f"{k}={counts[k]}" for k in sorted(counts))
