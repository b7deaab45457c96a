"""
Tokenizer and token classifier for Simplified Box Notation.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from config.constants import COMMENT_CHAR
from src.models import SYNSET_PATTERN, Vocabulary
from src.utils.error_handler import UnknownToken, UnterminatedLiteral

BOX_REF_PATTERN = re.compile(r"^<(\d+)$")
NODE_REF_PATTERN = re.compile(r"^[+-]\d+$")
EDGE_LABEL_PATTERN = re.compile(r"^[A-Z][A-Za-z-]*$")


class TokenClass(str, Enum):
    SYNSET = "Synset"
    DISCOURSE_RELATION = "DiscourseRelation"
    EDGE_LABEL = "EdgeLabel"
    OPERATOR = "Operator"
    NODE_REF = "NodeRef"
    CONSTANT = "Constant"
    LITERAL = "Literal"
    BOX_REF = "BoxRef"


class Slot(str, Enum):
    """Where the parser is in the grammar when it looks at a token."""
    NODE = "node"       # start of document or right after a box was opened
    EDGE = "edge"       # a concept is open; an edge label, synset or discourse relation may follow
    TARGET = "target"   # an edge label was read; its target must follow


@dataclass(frozen=True)
class TokenContext:
    slot: Slot
    position: int
    next_token: Optional[str] = None
    vocabulary: Vocabulary = field(default_factory=Vocabulary)


def tokenize_sbn(text: str) -> List[str]:
    """Split SBN text into tokens; quoted literals stay whole, ``%`` comments are dropped."""
    tokens: List[str] = []
    for line in text.splitlines():
        i = 0
        n = len(line)
        while i < n:
            ch = line[i]
            if ch.isspace():
                i += 1
            elif ch == COMMENT_CHAR:
                break
            elif ch == '"':
                end = line.find('"', i + 1)
                if end == -1:
                    raise UnterminatedLiteral(len(tokens))
                tokens.append(line[i:end + 1])
                i = end + 1
            else:
                j = i
                while j < n and not line[j].isspace() and line[j] not in (COMMENT_CHAR, '"'):
                    j += 1
                tokens.append(line[i:j])
                i = j
    return tokens


def is_literal(token: str) -> bool:
    return len(token) >= 2 and token[0] == '"' and token[-1] == '"'


def is_synset(token: str) -> bool:
    match = SYNSET_PATTERN.match(token)
    return bool(match) and match.group('sense') != '00'


def box_offset(token: str) -> Optional[int]:
    match = BOX_REF_PATTERN.match(token)
    return int(match.group(1)) if match else None


def classify_token(token: str, context: TokenContext) -> TokenClass:
    """Assign exactly one class to a token or raise UnknownToken."""
    vocab = context.vocabulary

    if is_literal(token):
        if context.slot == Slot.TARGET:
            return TokenClass.LITERAL
        raise UnknownToken(token, context.position)
    if is_synset(token):
        return TokenClass.SYNSET
    if BOX_REF_PATTERN.match(token):
        return TokenClass.BOX_REF
    if (
        token in vocab.discourse
        and context.next_token is not None
        and BOX_REF_PATTERN.match(context.next_token)
    ):
        return TokenClass.DISCOURSE_RELATION

    if context.slot == Slot.TARGET:
        if NODE_REF_PATTERN.match(token):
            if int(token) == 0:
                raise UnknownToken(token, context.position)
            return TokenClass.NODE_REF
        return TokenClass.CONSTANT

    if context.slot == Slot.EDGE:
        if token in vocab.operators:
            return TokenClass.OPERATOR
        if EDGE_LABEL_PATTERN.match(token):
            return TokenClass.EDGE_LABEL

    raise UnknownToken(token, context.position)
