"""
Write a Drg back as single-line Simplified Box Notation.
"""

from typing import Dict, List

from src.models import ConstantTarget, Drg, EdgeKind, LiteralTarget, NodeTarget
from src.utils.error_handler import NotSerializableError


def _parent_boxes(drg: Drg) -> Dict[int, tuple]:
    """Map box position -> (parent position, discourse label)."""
    position = {box.id: i for i, box in enumerate(drg.boxes)}
    parents = {}
    for edge in drg.edges_of_kind(EdgeKind.DISCOURSE):
        target = edge.target_node
        if target in position and edge.source in position:
            parents[position[target]] = (position[edge.source], edge.label)
    return parents


def serialize_sbn(drg: Drg) -> str:
    """
    Emit concepts and boxes in document order.

    Raises:
        NotSerializableError: when a reference cannot be written relative to document order.
    """
    box_position = {box.id: i for i, box in enumerate(drg.boxes)}
    concept_position = {c.id: i for i, c in enumerate(drg.concepts)}
    parents = _parent_boxes(drg)

    member_of: Dict[str, int] = {}
    for edge in drg.edges_of_kind(EdgeKind.MEMBER):
        if edge.source in box_position:
            member_of[edge.target_node] = box_position[edge.source]

    tokens: List[str] = []
    next_box = 0

    def emit_boxes_up_to(limit: int) -> None:
        nonlocal next_box
        while next_box <= limit:
            if next_box > 0:
                if next_box not in parents:
                    raise NotSerializableError(drg.boxes[next_box].id, "box has no incoming discourse edge")
                parent, label = parents[next_box]
                if parent >= next_box:
                    raise NotSerializableError(drg.boxes[next_box].id, "discourse edge points forward")
                tokens.extend([label, f"<{next_box - parent}"])
            next_box += 1

    for index, concept in enumerate(drg.concepts):
        if concept.id not in member_of:
            raise NotSerializableError(concept.id, "concept belongs to no box")
        box = member_of[concept.id]
        if box < next_box - 1:
            raise NotSerializableError(concept.id, "concept returns to an earlier box")
        emit_boxes_up_to(box)
        tokens.append(str(concept.synset))

        for edge in drg.outgoing(concept.id):
            tokens.append(edge.label)
            target = edge.target
            if isinstance(target, NodeTarget):
                if target.node not in concept_position:
                    raise NotSerializableError(concept.id, f"edge {edge.label} targets non-concept {target.node}")
                offset = concept_position[target.node] - index
                if offset == 0:
                    raise NotSerializableError(concept.id, f"edge {edge.label} points to itself")
                tokens.append(f"{offset:+d}")
            elif isinstance(target, LiteralTarget):
                if '"' in target.value:
                    raise NotSerializableError(concept.id, "literal contains a double quote")
                tokens.append(target.quoted)
            elif isinstance(target, ConstantTarget):
                if not target.value or any(ch.isspace() or ch in '"%' for ch in target.value):
                    raise NotSerializableError(concept.id, f"constant {target.value!r} is not a bare token")
                tokens.append(target.value)

    for box in drg.boxes:
        non_member = [e for e in drg.outgoing(box.id) if e.kind not in (EdgeKind.MEMBER, EdgeKind.DISCOURSE)]
        if non_member:
            raise NotSerializableError(box.id, f"box carries a {non_member[0].kind.value} edge")

    emit_boxes_up_to(len(drg.boxes) - 1)
    return " ".join(tokens)
