"""
Report output in JSON, TSV and Markdown.

All three are pure functions of the report, so identical reports give
byte-identical text.
"""

import csv
import io
import json
from typing import Iterator, Optional, Tuple

from config.constants import (
    EDGE_LEVEL_METRICS, GRAPH_LEVEL_METRICS, METRIC_DISPLAY_NAMES, NODE_LEVEL_METRICS,
    POS_BUCKETS, TSV_HEADERS,
)
from config.settings import settings
from src.models import FineGrainedReport, RunConfig, Score


def iter_metrics(report: FineGrainedReport) -> Iterator[Tuple[str, str, Score]]:
    """(level, metric, score) rows in rendering order."""
    for metric in GRAPH_LEVEL_METRICS:
        yield 'graph', metric, getattr(report.graph_level, metric)
    for metric in NODE_LEVEL_METRICS:
        yield 'node', metric, getattr(report.node_level, metric)
    for metric in EDGE_LEVEL_METRICS:
        yield 'edge', metric, getattr(report.edge_level, metric)


def to_json(report: FineGrainedReport, run_config: Optional[RunConfig] = None) -> str:
    payload = report.model_dump(mode='json')
    if run_config is not None:
        payload['run_config'] = run_config.model_dump(mode='json')
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def to_tsv(report: FineGrainedReport, precision: Optional[int] = None) -> str:
    precision = settings.report.tsv_precision if precision is None else precision
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
    writer.writerow(TSV_HEADERS['report'])
    for level, metric, score in iter_metrics(report):
        writer.writerow([
            level, metric,
            f"{score.precision:.{precision}f}", f"{score.recall:.{precision}f}", f"{score.f1:.{precision}f}",
        ])
    writer.writerow(['overall', 'well_formed', '', '', f"{report.well_formed_rate:.{precision}f}"])
    return buffer.getvalue()


def _percent(value: float, precision: int) -> str:
    return f"{value * 100:.{precision}f}"


def to_markdown(report: FineGrainedReport, precision: Optional[int] = None) -> str:
    """
    Three blocks: overall/graph-level, node-level with the POS rows indented
    under Concepts, and edge-level. Values are percentages.
    """
    precision = settings.report.markdown_precision if precision is None else precision
    pos_rows = set(POS_BUCKETS.values())

    def table(title: str, rows) -> list:
        lines = [f"### {title}", "", "| Metric | P | R | F1 |", "|---|---:|---:|---:|"]
        for metric, score in rows:
            name = METRIC_DISPLAY_NAMES.get(metric, metric)
            if metric in pos_rows:
                name = "&nbsp;&nbsp;" + name
            lines.append(
                f"| {name} | {_percent(score.precision, precision)} | "
                f"{_percent(score.recall, precision)} | {_percent(score.f1, precision)} |"
            )
        return lines

    lines = table("Graph level", [(m, getattr(report.graph_level, m)) for m in GRAPH_LEVEL_METRICS])
    lines.append(f"| Well-formed | | | {_percent(report.well_formed_rate, precision)} |")
    lines.append("")
    lines += table("Node level", [(m, getattr(report.node_level, m)) for m in NODE_LEVEL_METRICS])
    lines.append("")
    lines += table("Edge level", [(m, getattr(report.edge_level, m)) for m in EDGE_LEVEL_METRICS])
    meta = report.metadata
    lines += [
        "",
        f"_{meta.documents} documents, {len(meta.unparseable)} unparseable; "
        f"seed {meta.seed}, {meta.restarts} restarts; {meta.aggregation} aggregation, "
        f"{meta.triple_matching} triple matching._",
    ]
    return "\n".join(lines) + "\n"


def render_report(report: FineGrainedReport, output_format: str, run_config: Optional[RunConfig] = None) -> str:
    if output_format == 'tsv':
        return to_tsv(report)
    if output_format == 'md':
        return to_markdown(report)
    return to_json(report, run_config)
