"""Simplified Box Notation: tokenizing, parsing, validation and serialization."""

from src.sbn.corpus import (
    load_vocabulary, parse_document, read_corpus, render_corpus, split_documents,
    try_parse_document, write_corpus,
)
from src.sbn.parser import parse_sbn
from src.sbn.serializer import serialize_sbn
from src.sbn.tokenizer import TokenClass, TokenContext, Slot, classify_token, tokenize_sbn
from src.sbn.validator import check_document, validate

__all__ = [
    "TokenClass", "TokenContext", "Slot", "classify_token", "tokenize_sbn",
    "parse_sbn", "serialize_sbn", "validate", "check_document",
    "load_vocabulary", "parse_document", "read_corpus", "render_corpus",
    "split_documents", "try_parse_document", "write_corpus",
]
