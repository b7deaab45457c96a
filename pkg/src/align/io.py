"""
TSV readers and writers for the alignment pipeline files.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

from config.constants import TSV_HEADERS
from config.settings import settings
from src.models import (
    AlignmentLink, NeDictionary, NeEntry, NeFlag, ParallelSentence, PatchEntry,
    ReplacementReport, TranslationTable,
)
from src.utils.error_handler import CorpusFormatError, create_error_context

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
NULL_FIELD = "NULL"


def _rows(path: PathLike, columns: int, header: List[str]) -> Iterable[Tuple[int, List[str]]]:
    with open(path, encoding="utf-8", newline="") as f:
        for number, line in enumerate(f, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            row = line.split("\t")
            if row == header:
                continue
            if len(row) != columns:
                raise CorpusFormatError(str(path), number, f"expected {columns} columns, got {len(row)}")
            yield number, row


def _write(rows: Iterable[Sequence[str]], header: List[str]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(row) for row in rows)
    return "\n".join(lines) + "\n"


@create_error_context("read parallel corpus")
def read_parallel_corpus(path: PathLike) -> List[ParallelSentence]:
    """``id<TAB>source tokens<TAB>target tokens``, tokens space-separated."""
    sentences = []
    for number, (sentence_id, src, tgt) in _rows(path, 3, []):
        if not src.split() or not tgt.split():
            raise CorpusFormatError(str(path), number, "empty token list")
        sentences.append(ParallelSentence(id=sentence_id, src_tokens=src.split(), tgt_tokens=tgt.split()))
    logger.info("Read %d sentence pairs from %s", len(sentences), path)
    return sentences


def table_to_tsv(table: TranslationTable) -> str:
    rows = [
        (src, tgt, repr(prob))
        for src in sorted(table.probabilities)
        for tgt, prob in sorted(table.probabilities[src].items())
    ]
    return _write(rows, TSV_HEADERS['table'])


@create_error_context("read translation table")
def read_table(path: PathLike) -> TranslationTable:
    probabilities = {}
    for number, (src, tgt, prob) in _rows(path, 3, TSV_HEADERS['table']):
        try:
            probabilities.setdefault(src, {})[tgt] = float(prob)
        except ValueError:
            raise CorpusFormatError(str(path), number, f"bad probability '{prob}'") from None
    return TranslationTable(probabilities=probabilities, null_token=settings.align.null_token)


def dictionary_to_tsv(dictionary: NeDictionary) -> str:
    rows = [
        (e.sentence_id, e.src_literal, e.tgt_literal, ",".join(f.value for f in e.flags))
        for e in dictionary.entries
    ]
    return _write(rows, TSV_HEADERS['dictionary'])


@create_error_context("read name dictionary")
def read_dictionary(path: PathLike) -> NeDictionary:
    entries = []
    for number, (sentence_id, src, tgt, flags) in _rows(path, 4, TSV_HEADERS['dictionary']):
        try:
            parsed = tuple(NeFlag(f) for f in flags.split(",") if f)
        except ValueError as e:
            raise CorpusFormatError(str(path), number, str(e)) from e
        entries.append(NeEntry(sentence_id=sentence_id, src_literal=src, tgt_literal=tgt, flags=parsed))
    return NeDictionary(entries=entries)


@create_error_context("read patch file")
def read_patches(path: PathLike) -> List[PatchEntry]:
    return [
        PatchEntry(document_id=doc_id, src_literal=src, tgt_literal=tgt)
        for _, (doc_id, src, tgt) in _rows(path, 3, TSV_HEADERS['patch'])
    ]


def alignments_to_tsv(alignments: Sequence[Tuple[str, Sequence[AlignmentLink]]]) -> str:
    rows = [
        (sentence_id, str(link.tgt_index), NULL_FIELD if link.src_index is None else str(link.src_index))
        for sentence_id, links in alignments
        for link in links
    ]
    return _write(rows, TSV_HEADERS['alignment'])


def audit_to_tsv(reports: Sequence[ReplacementReport]) -> str:
    """One row per Name literal: what happened to it and which flags it carried."""
    rows = [
        (report.document_id, r.src_literal, r.tgt_literal, ",".join(f.value for f in r.flags), r.action.value)
        for report in reports
        for r in report.records
    ]
    return _write(rows, TSV_HEADERS['audit'])
