"""
Well-formedness checks for Discourse Representation Graphs.

Problems are collected into a WellFormedReport instead of being raised, so
malformed system output can still be counted and scored.
"""

import logging
from collections import Counter, defaultdict
from typing import Dict, List, Optional

from config.constants import MEMBER_LABEL, NAME_LABEL, VALIDATION_CODES
from src.models import Drg, EdgeKind, Issue, LiteralTarget, Vocabulary, WellFormedReport
from src.sbn.parser import parse_sbn
from src.sbn.tokenizer import tokenize_sbn
from src.utils.error_handler import SbnSyntaxError

logger = logging.getLogger(__name__)

TARGET_KINDS: Dict[EdgeKind, frozenset] = {
    EdgeKind.MEMBER: frozenset({"node"}),
    EdgeKind.DISCOURSE: frozenset({"node"}),
    EdgeKind.NAME: frozenset({"literal", "constant"}),
}


def _issue(position: int, code: str, **fields) -> Issue:
    return Issue(position=position, code=code, message=VALIDATION_CODES[code].format(**fields))


def _order_index(node_id: str, prefix: str) -> Optional[int]:
    if node_id.startswith(prefix) and node_id[len(prefix):].isdigit():
        return int(node_id[len(prefix):])
    return None


def _check_order(drg: Drg, errors: List[Issue]) -> None:
    """Node ids must follow document order: b0, b1, ... and c0, c1, ..."""
    for prefix, nodes in (("b", drg.boxes), ("c", drg.concepts)):
        for position, node in enumerate(nodes):
            if _order_index(node.id, prefix) != position:
                errors.append(_issue(position, "OrderViolation", node=node.id))


def _check_edges(drg: Drg, vocabulary: Vocabulary, errors: List[Issue]) -> None:
    boxes = set(drg.box_ids())
    concepts = set(drg.concept_ids())
    for position, edge in enumerate(drg.edges):
        described = f"{edge.source} {edge.label}"
        if edge.source not in boxes and edge.source not in concepts:
            errors.append(_issue(position, "DanglingNode", edge=described, node=edge.source))
            continue
        target = edge.target_node
        if target is not None and target not in boxes and target not in concepts:
            errors.append(_issue(position, "DanglingNode", edge=described, node=target))
            continue

        allowed = TARGET_KINDS.get(edge.kind)
        if allowed is not None and edge.target.kind not in allowed:
            errors.append(_issue(position, "BadTarget", edge=described, kind=edge.kind.value,
                                 target=edge.target.kind))
            continue

        source_is_box = edge.source in boxes
        target_is_box = target in boxes if target is not None else False
        if edge.kind == EdgeKind.MEMBER:
            consistent = source_is_box and target in concepts and edge.label == MEMBER_LABEL
        elif edge.kind == EdgeKind.DISCOURSE:
            consistent = source_is_box and target_is_box and edge.label in vocabulary.discourse
        elif edge.kind == EdgeKind.NAME:
            consistent = not source_is_box and edge.label == NAME_LABEL and not target_is_box
        elif edge.kind == EdgeKind.OPERATOR:
            consistent = not source_is_box and edge.label in vocabulary.operators and not target_is_box
        else:
            consistent = (
                not source_is_box and not target_is_box
                and edge.label not in (NAME_LABEL, MEMBER_LABEL)
                and edge.label not in vocabulary.operators
            )
        if not consistent:
            errors.append(_issue(position, "KindMismatch", edge=described, kind=edge.kind.value))


def _check_members(drg: Drg, errors: List[Issue]) -> None:
    membership = Counter(e.target_node for e in drg.edges_of_kind(EdgeKind.MEMBER))
    for position, concept in enumerate(drg.concepts):
        count = membership.get(concept.id, 0)
        if count == 0:
            errors.append(_issue(position, "MissingMember", node=concept.id))
        elif count > 1:
            errors.append(_issue(position, "DuplicateMember", node=concept.id, count=count))


def _check_box_tree(drg: Drg, errors: List[Issue]) -> None:
    box_ids = drg.box_ids()
    if drg.concepts and "b0" not in box_ids:
        errors.append(_issue(0, "MissingRootBox"))
        return

    parents: Dict[str, List[str]] = defaultdict(list)
    for edge in drg.edges_of_kind(EdgeKind.DISCOURSE):
        target = edge.target_node
        if target in box_ids and edge.source in box_ids:
            parents[target].append(edge.source)

    for position, box in enumerate(box_ids):
        count = len(parents.get(box, []))
        if box == "b0":
            if count:
                errors.append(_issue(position, "RootHasParent"))
        elif count == 0:
            errors.append(_issue(position, "OrphanBox", node=box))
        elif count > 1:
            errors.append(_issue(position, "MultipleParents", node=box, count=count))

    # walk up from every box; with single parents a revisit means a cycle
    reported = set()
    for position, box in enumerate(box_ids):
        seen = set()
        node = box
        while node in parents and len(parents[node]) == 1:
            if node in seen:
                if node not in reported:
                    errors.append(_issue(position, "BoxCycle", node=node))
                    reported.add(node)
                break
            seen.add(node)
            node = parents[node][0]


def _check_warnings(drg: Drg, warnings: List[Issue]) -> None:
    linked = set()
    for edge in drg.edges_of_kind(EdgeKind.ROLE, EdgeKind.OPERATOR, EdgeKind.NAME):
        linked.add(edge.source)
        if edge.target_node is not None:
            linked.add(edge.target_node)

    for position, edge in enumerate(drg.edges):
        if edge.kind == EdgeKind.NAME and isinstance(edge.target, LiteralTarget) and edge.target.value == "":
            warnings.append(_issue(position, "EmptyNameLiteral", node=edge.source))
    for position, concept in enumerate(drg.concepts):
        if concept.id not in linked:
            warnings.append(_issue(position, "IsolatedConcept", node=concept.id))


def validate(drg: Drg, vocabulary: Optional[Vocabulary] = None) -> WellFormedReport:
    """Check every graph invariant and collect errors and warnings."""
    vocabulary = vocabulary or Vocabulary()
    errors: List[Issue] = []
    warnings: List[Issue] = []

    _check_order(drg, errors)
    _check_edges(drg, vocabulary, errors)
    _check_members(drg, errors)
    _check_box_tree(drg, errors)
    _check_warnings(drg, warnings)

    report = WellFormedReport(errors=errors, warnings=warnings, origin=drg.origin)
    if errors:
        logger.debug("%s is not well-formed: %s", drg.origin or "document", [e.code for e in errors])
    return report


def check_document(text: str, vocabulary: Optional[Vocabulary] = None, origin: str = "") -> WellFormedReport:
    """Tokenize, parse and validate; syntax errors become report errors."""
    try:
        drg = parse_sbn(tokenize_sbn(text), vocabulary, origin=origin)
    except SbnSyntaxError as e:
        return WellFormedReport(
            errors=[Issue(position=e.position, code=e.error_code, message=e.message)],
            origin=origin,
        )
    return validate(drg, vocabulary)
