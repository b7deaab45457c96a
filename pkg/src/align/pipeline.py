"""
Silver-data pipeline: align a parallel corpus, build the name dictionary and
rewrite the Name literals of the matching source-language SBN documents.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from src.align.ibm1 import align_sentence, train_ibm1
from src.align.ne_dictionary import extract_ne_pairs, locate_names
from src.align.replacer import apply_patches, replace_names
from src.models import (
    AlignmentLink, NeDictionary, ParallelSentence, PatchEntry, ReplacementAction,
    ReplacementReport, SbnDocument, TranslationTable, Vocabulary,
)
from src.sbn.corpus import parse_document
from src.sbn.serializer import serialize_sbn
from src.utils.error_handler import IdMismatchError, LengthMismatchError

logger = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    table: TranslationTable
    alignments: List[Tuple[str, List[AlignmentLink]]] = field(default_factory=list)
    dictionary: NeDictionary = field(default_factory=NeDictionary)
    documents: List[Tuple[str, str]] = field(default_factory=list)
    reports: List[ReplacementReport] = field(default_factory=list)

    def count(self, action: ReplacementAction) -> int:
        return sum(len(r.with_action(action)) for r in self.reports)

    @property
    def replaced_rate(self) -> float:
        """Share of Name literals that ended up replaced or patched."""
        total = sum(len(r.records) for r in self.reports)
        done = self.count(ReplacementAction.REPLACED) + self.count(ReplacementAction.PATCHED)
        return done / total if total else 0.0


def check_ids(sentences: Sequence[ParallelSentence], documents: Sequence[SbnDocument]) -> None:
    if len(sentences) != len(documents):
        raise LengthMismatchError(len(sentences), len(documents))
    for index, (sentence, document) in enumerate(zip(sentences, documents)):
        if sentence.id != document.id:
            raise IdMismatchError(index, sentence.id, document.id)


def run_pipeline(
    sentences: Sequence[ParallelSentence],
    documents: Sequence[SbnDocument],
    table: Optional[TranslationTable] = None,
    iterations: Optional[int] = None,
    patches: Sequence[PatchEntry] = (),
    skip_nationality: Optional[bool] = None,
    vocabulary: Optional[Vocabulary] = None,
    separator: Optional[str] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> PipelineResult:
    """
    Run every stage in order. A table is trained on ``sentences`` unless one
    is given.
    """
    check_ids(sentences, documents)
    if table is None:
        table = train_ibm1(sentences, iterations)

    result = PipelineResult(table=table)
    for index, (sentence, document) in enumerate(zip(sentences, documents)):
        drg = parse_document(document, vocabulary)
        links = align_sentence(table, sentence)
        entries = extract_ne_pairs(sentence, links, locate_names(drg, sentence.src_tokens), separator)

        replaced, report = replace_names(drg, entries, skip_nationality)
        replaced, report = apply_patches(drg, replaced, report, patches)

        result.alignments.append((sentence.id, links))
        result.dictionary.entries.extend(entries)
        result.documents.append((document.id, serialize_sbn(replaced)))
        result.reports.append(report)
        if progress_callback:
            progress_callback(index + 1, len(sentences))

    logger.info(
        "Pipeline replaced %d names, skipped %d, left %d unmatched over %d documents",
        sum(len(r.replaced) for r in result.reports),
        sum(len(r.skipped) for r in result.reports),
        sum(len(r.unmatched) for r in result.reports),
        len(result.documents),
    )
    return result
