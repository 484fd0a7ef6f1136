"""
Export utilities for generating machine-readable reports.
Supports JSON and Markdown exports.
"""

import json
import logging
from typing import Dict, List, Optional

from lzcheck.utils.formatting import mark

logger = logging.getLogger(__name__)


def export_report_json(report) -> str:
    """Export a germ report as JSON."""
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)


def export_table_json(rows, p: int, schema_version: str) -> str:
    """Export evaluated table rows as JSON."""
    export_data = {
        'schema_version': schema_version,
        'characteristic': p,
        'entries': [row.to_dict() for row in rows],
    }
    return json.dumps(export_data, indent=2, ensure_ascii=False)


def export_table_markdown(rows, p: int) -> str:
    """Export evaluated table rows as Markdown."""
    md = f"# Rational double points in characteristic {p}\n\n"
    md += "| RDP | equation | F-pure | LZ holds | almost equiv. | min gens |\n"
    md += "|---|---|---|---|---|---|\n"
    for row in rows:
        d, c = row.descriptor, row.computed
        almost = mark(d.literature.almost_equivariant) if d.literature else '?'
        md += (f"| ${d.name}$ | `{d.equation_text}` | {mark(c.f_pure)} | {mark(c.lz_holds)} "
               f"| {almost} | {c.min_gens} |\n")
    mismatches = [row.descriptor.name for row in rows if row.diffs]
    if mismatches:
        md += f"\n**Differs from published values:** {', '.join(mismatches)}\n"
    return md


def export_catalog_json(tables: Dict[int, List], schema_version: str,
                        cone: Optional[dict] = None) -> str:
    """Export the whole catalog with computed columns."""
    entries = []
    for p in sorted(tables):
        entries.extend(row.to_dict() for row in tables[p])
    export_data = {
        'schema_version': schema_version,
        'entries': entries,
    }
    if cone is not None:
        export_data['extra'] = [cone]
    logger.debug(f"[export] {len(entries)} catalog entries")
    return json.dumps(export_data, indent=2, ensure_ascii=False)
