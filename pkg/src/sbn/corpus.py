"""
Reading and writing SBN corpus files and label vocabulary files.

A corpus file holds blank-line-separated documents. A document may start with
a ``% id: <doc-id>`` comment naming it; otherwise its id is its corpus index.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from config.constants import COMMENT_CHAR, DOCUMENT_ID_PREFIX
from config.settings import settings
from src.models import Drg, SbnDocument, Vocabulary
from src.sbn.parser import parse_sbn
from src.sbn.tokenizer import tokenize_sbn
from src.utils.error_handler import CorpusFormatError, SbnSyntaxError, create_error_context

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _document_id(line: str) -> Optional[str]:
    stripped = line.strip()
    if not stripped.startswith(COMMENT_CHAR):
        return None
    body = stripped[len(COMMENT_CHAR):].strip()
    if body.startswith(DOCUMENT_ID_PREFIX):
        return body[len(DOCUMENT_ID_PREFIX):].strip() or None
    return None


def _has_content(lines: List[str]) -> bool:
    return any(not line.strip().startswith(COMMENT_CHAR) for line in lines)


def split_documents(text: str) -> List[SbnDocument]:
    """Split corpus text into documents; comment-only blocks without an id are skipped."""
    blocks: List[List[str]] = []
    current: List[str] = []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)

    documents: List[SbnDocument] = []
    for block in blocks:
        doc_id = _document_id(block[0])
        if doc_id is None and not _has_content(block):
            continue
        index = len(documents)
        documents.append(SbnDocument(
            index=index,
            id=doc_id if doc_id is not None else str(index),
            text="\n".join(block),
        ))
    return documents


@create_error_context("read corpus")
def read_corpus(path: PathLike) -> List[SbnDocument]:
    text = Path(path).read_text(encoding="utf-8")
    documents = split_documents(text)
    logger.info("Read %d documents from %s", len(documents), path)
    return documents


def render_corpus(documents: Iterable[Tuple[str, str]], with_ids: bool = True) -> str:
    """Render (id, sbn) pairs as corpus text."""
    blocks = []
    for doc_id, sbn in documents:
        lines = [f"{COMMENT_CHAR} {DOCUMENT_ID_PREFIX} {doc_id}"] if with_ids else []
        lines.append(sbn)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def write_corpus(documents: Iterable[Tuple[str, str]], path: PathLike, with_ids: bool = True) -> None:
    Path(path).write_text(render_corpus(documents, with_ids), encoding="utf-8")


def parse_document(document: SbnDocument, vocabulary: Optional[Vocabulary] = None) -> Drg:
    return parse_sbn(tokenize_sbn(document.text), vocabulary, origin=document.id)


def try_parse_document(document: SbnDocument, vocabulary: Optional[Vocabulary] = None) -> Optional[Drg]:
    """Parse a document, returning None on syntax errors."""
    try:
        return parse_document(document, vocabulary)
    except SbnSyntaxError as e:
        logger.warning("Document %s does not parse: %s", document.id, e)
        return None


def read_label_file(path: PathLike) -> frozenset:
    """Line-delimited labels; blank lines and ``#`` comments are ignored."""
    labels = set()
    for number, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if any(ch.isspace() for ch in line):
            raise CorpusFormatError(str(path), number, f"label '{line}' contains whitespace")
        labels.add(line)
    return frozenset(labels)


def load_vocabulary(operators_path: Optional[PathLike] = None, discourse_path: Optional[PathLike] = None) -> Vocabulary:
    """Build a Vocabulary, overriding the configured defaults with label files when given."""
    operators = read_label_file(operators_path) if operators_path else settings.vocabulary.operators
    discourse = read_label_file(discourse_path) if discourse_path else settings.vocabulary.discourse
    return Vocabulary(operators=operators, discourse=discourse)
