"""
Rich tables for validation summaries, score reports and pipeline audits.
"""

from typing import List, Optional, Sequence, Tuple

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from config.constants import METRIC_DISPLAY_NAMES, POS_BUCKETS
from src.metrics.formatters import iter_metrics
from src.models import FineGrainedReport, ReplacementAction, ReplacementReport, WellFormedReport
from src.utils.error_handler import console as stderr_console

_LEVEL_TITLES = {'graph': 'Graph level', 'node': 'Node level', 'edge': 'Edge level'}


def show_validation(
    reports: Sequence[WellFormedReport],
    console: Optional[Console] = None,
    max_rows: int = 20,
) -> None:
    """Problem documents (first ``max_rows``) followed by the well-formed rate."""
    console = console or stderr_console
    problems = [r for r in reports if r.errors or r.warnings]

    if problems:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Document", style="cyan")
        table.add_column("Position", justify="right")
        table.add_column("Code", style="yellow")
        table.add_column("Message", style="white")
        rows: List[Tuple[str, str, str, str]] = []
        for report in problems:
            for issue in report.errors:
                rows.append((report.origin, str(issue.position), f"[red]{issue.code}[/red]", issue.message))
            for issue in report.warnings:
                rows.append((report.origin, str(issue.position), issue.code, issue.message))
        for row in rows[:max_rows]:
            table.add_row(*row)
        console.print(table)
        if len(rows) > max_rows:
            console.print(f"[dim]... and {len(rows) - max_rows} more[/dim]")

    total = len(reports)
    well_formed = sum(1 for r in reports if r.well_formed)
    rate = well_formed / total if total else 1.0
    style = "green" if well_formed == total else "red"
    console.print(f"[bold {style}]Well-formed: {well_formed}/{total} ({rate:.3f})[/bold {style}]")


def show_report(report: FineGrainedReport, console: Optional[Console] = None) -> None:
    console = console or stderr_console
    pos_rows = set(POS_BUCKETS.values())
    table = Table(show_header=True, header_style="bold magenta", title="Evaluation")
    table.add_column("Level", style="cyan")
    table.add_column("Metric", style="white")
    table.add_column("P", justify="right")
    table.add_column("R", justify="right")
    table.add_column("F1", justify="right", style="bold")

    previous = None
    for level, metric, score in iter_metrics(report):
        name = METRIC_DISPLAY_NAMES.get(metric, metric)
        if metric in pos_rows:
            name = f"  {name}"
        table.add_row(
            _LEVEL_TITLES[level] if level != previous else "",
            name,
            f"{score.precision * 100:.1f}", f"{score.recall * 100:.1f}", f"{score.f1 * 100:.1f}",
        )
        previous = level
    table.add_row("", "Well-formed", "", "", f"{report.well_formed_rate * 100:.1f}")
    console.print(table)


def show_pipeline_summary(reports: Sequence[ReplacementReport], console: Optional[Console] = None) -> None:
    console = console or stderr_console
    lines = []
    for action in ReplacementAction:
        count = sum(len(r.with_action(action)) for r in reports)
        lines.append(f"{action.value}: {count}")
    console.print(Panel("\n".join(lines), title="Name replacement", border_style="green"))
