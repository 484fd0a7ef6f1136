"""
Text rendering of reports for the command line.
"""

from typing import List, Sequence

from lzcheck.models.descriptors import GermReport
from lzcheck.models.rational import RationalFunction

CHECK = '✓'
DASH = '---'


def mark(value: bool) -> str:
    return CHECK if value else DASH


def format_check_report(report: GermReport) -> str:
    """Session-style report of a single germ."""
    header = f"f = {report.f} in characteristic p = {report.p}"
    if report.extension:
        header += f" over {report.f.field}"
    lines = [
        header,
        f"X = {{ f = 0 }} is {'' if report.f_pure else 'not '}F-pure.",
        f"T_X is {'' if report.tangent_free else 'not '}free.",
        "Minimal generating set for T_X:",
    ]
    lines.extend(str(d) for d in report.tangent_generators)
    return '\n'.join(lines)


def format_table(rows, p: int) -> str:
    """Fixed-width table of catalog rows with computed and published columns."""
    header = ('name', 'equation', 'F-pure', 'LZ holds', 'almost equiv.', 'min gens', 'diff')
    body = []
    for row in rows:
        d, c = row.descriptor, row.computed
        almost = mark(d.literature.almost_equivariant) if d.literature else '?'
        body.append((d.name, d.equation_text, mark(c.f_pure), mark(c.lz_holds), almost,
                     str(c.min_gens), ','.join(row.diffs)))
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = [f"characteristic p = {p}"]
    for r in [header] + body:
        lines.append('  '.join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    mismatches = sum(1 for row in rows if row.diffs)
    lines.append(f"{len(rows)} rows, {mismatches} differing from published values")
    return '\n'.join(lines)


def format_matrix(matrix: Sequence[Sequence[RationalFunction]], rows: List[str], cols: List[str]) -> str:
    cells = [[str(e) for e in r] for r in matrix]
    width = max([len(c) for r in cells for c in r] + [len(c) for c in cols] + [1])
    label = max(len(r) for r in rows)
    lines = [' ' * label + '  ' + '  '.join(c.ljust(width) for c in cols)]
    for name, r in zip(rows, cells):
        lines.append(name.ljust(label) + '  ' + '  '.join(c.ljust(width) for c in r))
    return '\n'.join(line.rstrip() for line in lines)
