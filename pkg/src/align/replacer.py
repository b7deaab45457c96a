"""
Rewriting Name literals of a source-language DRG with target-language names.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from config.constants import NATIONALITY_ROLE, NATIONALITY_SYNSET
from config.settings import settings
from src.align.ne_dictionary import normalize_name
from src.models import (
    Drg, Edge, EdgeKind, LiteralTarget, NeEntry, PatchEntry, ReplacementAction,
    ReplacementRecord, ReplacementReport,
)

logger = logging.getLogger(__name__)


def nationality_nodes(drg: Drg) -> set:
    """Concepts labelled country.n.02 that some Source role points at."""
    sources = {
        e.target_node for e in drg.edges_of_kind(EdgeKind.ROLE)
        if e.label == NATIONALITY_ROLE and e.target_node is not None
    }
    return {
        c.id for c in drg.concepts
        if c.id in sources and str(c.synset) == NATIONALITY_SYNSET
    }


def _with_literal(edge: Edge, value: str) -> Edge:
    return edge.model_copy(update={"target": LiteralTarget(value=value)})


def replace_names(
    drg: Drg,
    entries: Sequence[NeEntry],
    skip_nationality: Optional[bool] = None,
) -> Tuple[Drg, ReplacementReport]:
    """
    Replace each Name literal that has an unflagged dictionary entry.

    Entries are matched on the normalized literal. Flagged entries, unmatched
    literals and (with ``skip_nationality``) nationality names keep their
    literal and are reported with the reason.
    """
    skip_nationality = settings.align.skip_nationality if skip_nationality is None else skip_nationality
    by_name: Dict[str, NeEntry] = {}
    for entry in entries:
        by_name.setdefault(normalize_name(entry.src_literal), entry)
    nationalities = nationality_nodes(drg) if skip_nationality else set()

    edges: List[Edge] = []
    records: List[ReplacementRecord] = []
    for edge in drg.edges:
        if edge.kind != EdgeKind.NAME or not isinstance(edge.target, LiteralTarget):
            edges.append(edge)
            continue
        literal = edge.target.value
        entry = by_name.get(normalize_name(literal))
        if edge.source in nationalities:
            records.append(ReplacementRecord(src_literal=literal, action=ReplacementAction.NATIONALITY_SKIPPED))
            logger.info("%s: nationality name '%s' kept", drg.origin, literal)
            edges.append(edge)
        elif entry is None:
            records.append(ReplacementRecord(src_literal=literal, action=ReplacementAction.UNMATCHED))
            edges.append(edge)
        elif entry.flagged:
            records.append(ReplacementRecord(
                src_literal=literal, tgt_literal=entry.tgt_literal,
                action=ReplacementAction.FLAGGED, flags=entry.flags,
            ))
            edges.append(edge)
        else:
            records.append(ReplacementRecord(
                src_literal=literal, tgt_literal=entry.tgt_literal, action=ReplacementAction.REPLACED,
            ))
            edges.append(_with_literal(edge, entry.tgt_literal))

    report = ReplacementReport(document_id=drg.origin, records=records)
    return drg.model_copy(update={"edges": tuple(edges)}), report


def apply_patches(
    original: Drg,
    replaced: Drg,
    report: ReplacementReport,
    patches: Sequence[PatchEntry],
) -> Tuple[Drg, ReplacementReport]:
    """
    Apply manual corrections for this document.

    A patch names the original source literal; it overrides whatever
    replace_names did with that literal, including skips.
    """
    wanted = {
        normalize_name(p.src_literal): p for p in patches if p.document_id == report.document_id
    }
    if not wanted:
        return replaced, report

    edges = list(replaced.edges)
    records = list(report.records)
    name_index = 0
    for position, edge in enumerate(original.edges):
        if edge.kind != EdgeKind.NAME or not isinstance(edge.target, LiteralTarget):
            continue
        patch = wanted.get(normalize_name(edge.target.value))
        if patch is not None:
            edges[position] = _with_literal(edges[position], patch.tgt_literal)
            records[name_index] = ReplacementRecord(
                src_literal=edge.target.value, tgt_literal=patch.tgt_literal,
                action=ReplacementAction.PATCHED, flags=records[name_index].flags,
            )
            logger.info("%s: patched '%s' -> '%s'", report.document_id, edge.target.value, patch.tgt_literal)
        name_index += 1

    return (
        replaced.model_copy(update={"edges": tuple(edges)}),
        report.model_copy(update={"records": records}),
    )
