"""
Single-pass parser from SBN tokens to a Discourse Representation Graph.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from config.constants import NAME_LABEL, MEMBER_LABEL, VARIABLE_PREFIXES
from src.models import (
    BoxNode, ConceptNode, ConstantTarget, Drg, Edge, EdgeKind, LiteralTarget,
    NodeTarget, SynsetId, Vocabulary,
)
from src.sbn.tokenizer import Slot, TokenClass, TokenContext, box_offset, classify_token
from src.utils.error_handler import (
    DanglingBoxRef, DanglingNodeRef, EmptyDocument, OddEdgeTokens, UnknownToken,
)

logger = logging.getLogger(__name__)

TARGET_CLASSES = (TokenClass.NODE_REF, TokenClass.CONSTANT, TokenClass.LITERAL)


def box_id(index: int) -> str:
    return f"{VARIABLE_PREFIXES['box']}{index}"


def concept_id(index: int) -> str:
    return f"{VARIABLE_PREFIXES['concept']}{index}"


def edge_kind_for_label(label: str, vocabulary: Vocabulary) -> EdgeKind:
    """Kind of an edge leaving a concept."""
    if label == NAME_LABEL:
        return EdgeKind.NAME
    if label in vocabulary.operators:
        return EdgeKind.OPERATOR
    return EdgeKind.ROLE


@dataclass
class _PendingRef:
    """A relative node reference waiting for the full concept list."""
    edge_index: int
    owner: int
    offset: int
    token: str
    position: int


class _DrgBuilder:
    """Mutable state of one parse: boxes, concepts and edges in token order."""

    def __init__(self, vocabulary: Vocabulary):
        self.vocabulary = vocabulary
        self.boxes: List[BoxNode] = []
        self.concepts: List[ConceptNode] = []
        self.edges: List[Edge] = []
        self.pending: List[_PendingRef] = []
        self.current_box = -1
        self.current_concept: Optional[int] = None

    def ensure_root(self) -> None:
        # box 0 is created lazily, on the first concept or discourse relation
        if not self.boxes:
            self.boxes.append(BoxNode(id=box_id(0)))
            self.current_box = 0

    def open_box(self, label: str, ref_token: str, position: int) -> None:
        self.ensure_root()
        offset = box_offset(ref_token)
        new_index = len(self.boxes)
        parent = new_index - offset
        if offset < 1 or parent < 0:
            raise DanglingBoxRef(ref_token, position)
        self.boxes.append(BoxNode(id=box_id(new_index)))
        self.edges.append(Edge(
            source=box_id(parent), label=label, kind=EdgeKind.DISCOURSE,
            target=NodeTarget(node=box_id(new_index)),
        ))
        self.current_box = new_index
        self.current_concept = None

    def open_concept(self, token: str) -> None:
        self.ensure_root()
        index = len(self.concepts)
        self.concepts.append(ConceptNode(id=concept_id(index), synset=SynsetId.parse(token)))
        self.edges.append(Edge(
            source=box_id(self.current_box), label=MEMBER_LABEL, kind=EdgeKind.MEMBER,
            target=NodeTarget(node=concept_id(index)),
        ))
        self.current_concept = index

    def add_edge(self, label: str, target_token: str, target_class: TokenClass, position: int) -> None:
        kind = edge_kind_for_label(label, self.vocabulary)
        if target_class == TokenClass.NODE_REF:
            self.pending.append(_PendingRef(
                len(self.edges), self.current_concept, int(target_token), target_token, position,
            ))
            target = NodeTarget(node="")
        elif target_class == TokenClass.LITERAL:
            target = LiteralTarget(value=target_token[1:-1])
        else:
            target = ConstantTarget(value=target_token)
        self.edges.append(Edge(source=concept_id(self.current_concept), label=label, kind=kind, target=target))

    def resolve_refs(self) -> None:
        for ref in self.pending:
            index = ref.owner + ref.offset
            if not 0 <= index < len(self.concepts):
                raise DanglingNodeRef(ref.token, ref.position)
            self.edges[ref.edge_index] = self.edges[ref.edge_index].model_copy(
                update={"target": NodeTarget(node=concept_id(index))}
            )

    def build(self, origin: str) -> Drg:
        return Drg(
            concepts=tuple(self.concepts), boxes=tuple(self.boxes),
            edges=tuple(self.edges), origin=origin,
        )


def parse_sbn(tokens: List[str], vocabulary: Optional[Vocabulary] = None, origin: str = "") -> Drg:
    """
    Parse a token list into a Drg.

    A synset opens a concept in the current box; the following (label, target)
    pairs attach to it. A discourse relation followed by ``<k`` opens a new box
    linked from the box k positions earlier. Relative node references count
    concepts only and are resolved after the pass.

    Raises:
        SbnSyntaxError subclasses for malformed input.
    """
    if not tokens:
        raise EmptyDocument()
    builder = _DrgBuilder(vocabulary or Vocabulary())

    i = 0
    n = len(tokens)
    while i < n:
        token = tokens[i]
        next_token = tokens[i + 1] if i + 1 < n else None
        slot = Slot.NODE if builder.current_concept is None else Slot.EDGE
        token_class = classify_token(token, TokenContext(slot, i, next_token, builder.vocabulary))

        if token_class == TokenClass.SYNSET:
            builder.open_concept(token)
            i += 1
        elif token_class == TokenClass.DISCOURSE_RELATION:
            builder.open_box(token, next_token, i + 1)
            i += 2
        elif token_class in (TokenClass.EDGE_LABEL, TokenClass.OPERATOR):
            if next_token is None:
                raise OddEdgeTokens(token, i)
            after = tokens[i + 2] if i + 2 < n else None
            target_class = classify_token(next_token, TokenContext(Slot.TARGET, i + 1, after, builder.vocabulary))
            if target_class not in TARGET_CLASSES:
                raise OddEdgeTokens(token, i)
            builder.add_edge(token, next_token, target_class, i + 1)
            i += 2
        else:
            # box reference not introduced by a discourse relation
            raise UnknownToken(token, i)

    builder.resolve_refs()
    drg = builder.build(origin)
    logger.debug(
        "Parsed %s: %d concepts, %d boxes, %d edges",
        origin or "document", len(drg.concepts), len(drg.boxes), len(drg.edges),
    )
    return drg
