"""Overall and fine-grained evaluation of DRG predictions."""

from src.metrics.bags import LabelBag, edge_bags, multiset_f1, node_bags
from src.metrics.formatters import render_report, to_json, to_markdown, to_tsv
from src.metrics.parallel import AsyncCorpusScorer, corpus_report_async
from src.metrics.report import (
    DocumentScores, corpus_report, document_scores, edge_level_report, graph_level_report,
    node_level_report,
)

__all__ = [
    "LabelBag", "multiset_f1", "node_bags", "edge_bags",
    "node_level_report", "edge_level_report", "graph_level_report",
    "document_scores", "DocumentScores", "corpus_report",
    "AsyncCorpusScorer", "corpus_report_async",
    "render_report", "to_json", "to_tsv", "to_markdown",
]
