"""
Named-entity dictionary: source names from SBN Name edges, their token spans in
the source sentence, and the target words aligned into those spans.
"""

import logging
import re
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import settings
from src.models import AlignmentLink, Drg, EdgeKind, LiteralTarget, NeEntry, NeFlag, ParallelSentence
from src.utils.error_handler import SpanOutOfRangeError

logger = logging.getLogger(__name__)

Span = Tuple[int, int]
DIGITS = re.compile(r"[0-9]")


def normalize_name(text: str) -> str:
    """Case-folded name with ``~`` and ``_`` read as spaces and whitespace collapsed."""
    return " ".join(text.replace("~", " ").replace("_", " ").split()).casefold()


def locate_names(drg: Drg, src_tokens: Sequence[str]) -> List[Tuple[str, Span]]:
    """
    Find the source-token span of every Name literal of a document.

    A literal matches the first unused run of tokens equal to its words after
    normalization; literals with no such run are left out.
    """
    folded = [normalize_name(token) for token in src_tokens]
    used = set()
    located: List[Tuple[str, Span]] = []
    for edge in drg.edges_of_kind(EdgeKind.NAME):
        if not isinstance(edge.target, LiteralTarget):
            continue
        words = normalize_name(edge.target.value).split()
        if not words:
            continue
        span = _find_run(folded, words, used)
        if span is None:
            logger.info("Name '%s' of %s not found in source sentence", edge.target.value, drg.origin)
            continue
        used.update(range(*span))
        located.append((edge.target.value, span))
    return located


def _find_run(tokens: List[str], words: List[str], used: set) -> Optional[Span]:
    size = len(words)
    for start in range(len(tokens) - size + 1):
        if tokens[start:start + size] == words and not used.intersection(range(start, start + size)):
            return start, start + size
    return None


def ne_flags(src_literal: str, tgt_literal: str, sentence: ParallelSentence, separator: str = "") -> List[NeFlag]:
    """Flags that depend on one entry and its sentence only."""
    if not tgt_literal:
        return [NeFlag.EMPTY_TARGET]
    flags = []
    if set(DIGITS.findall(tgt_literal)) - set(DIGITS.findall(src_literal)):
        flags.append(NeFlag.CONTAINS_DIGITS_NOT_IN_SOURCE)
    if tgt_literal not in separator.join(sentence.tgt_tokens):
        flags.append(NeFlag.NOT_SUBSTRING_OF_TARGET)
    return flags


def extract_ne_pairs(
    sentence: ParallelSentence,
    links: Sequence[AlignmentLink],
    src_names: Sequence[Tuple[str, Span]],
    separator: Optional[str] = None,
) -> List[NeEntry]:
    """Concatenate, in target order, the target words linked into each name span."""
    separator = settings.align.target_separator if separator is None else separator
    length = len(sentence.src_tokens)

    drafts: List[Tuple[str, str, List[NeFlag]]] = []
    for name, (start, end) in src_names:
        if not 0 <= start < end <= length:
            raise SpanOutOfRangeError(name, start, end, length)
        linked = sorted(
            link.tgt_index for link in links
            if link.src_index is not None and start <= link.src_index < end
        )
        tgt_literal = separator.join(sentence.tgt_tokens[i] for i in linked)
        drafts.append((name, tgt_literal, ne_flags(name, tgt_literal, sentence, separator)))

    # two different source names sharing one target literal
    sources_by_target: Dict[str, set] = defaultdict(set)
    for name, tgt_literal, _ in drafts:
        if tgt_literal:
            sources_by_target[tgt_literal].add(normalize_name(name))

    entries = []
    for name, tgt_literal, flags in drafts:
        if len(sources_by_target.get(tgt_literal, ())) > 1:
            flags.append(NeFlag.DUPLICATE_TARGET)
        if flags:
            logger.warning(
                "Sentence %s: '%s' -> '%s' flagged %s",
                sentence.id, name, tgt_literal, ",".join(f.value for f in flags),
            )
        entries.append(NeEntry(sentence_id=sentence.id, src_literal=name, tgt_literal=tgt_literal, flags=tuple(flags)))
    return entries
