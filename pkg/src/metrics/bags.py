"""
Label bags for the node-level and edge-level metrics, and multiset F1 over them.
"""

from collections import Counter
from typing import Dict, Tuple

from config.constants import MEMBER_LABEL, NEGATION_LABEL, POS_BUCKETS
from src.models import Drg, Edge, EdgeKind, LiteralTarget, NodeTarget, Score

# multiset of labels or anchored (source, label, target) tuples
LabelBag = Counter


def multiset_f1(pred: LabelBag, gold: LabelBag) -> Score:
    """Matched items are sum over labels of min(pred count, gold count)."""
    matched = sum((pred & gold).values())
    return Score.from_counts(matched, sum(pred.values()), sum(gold.values()))


def _target_label(drg: Drg, edge: Edge) -> str:
    target = edge.target
    if isinstance(target, NodeTarget):
        return drg.node_label(target.node)
    if isinstance(target, LiteralTarget):
        return target.quoted
    return target.value


def anchored(drg: Drg, edge: Edge) -> Tuple[str, str, str]:
    """Edge with its endpoints replaced by node labels."""
    return drg.node_label(edge.source), edge.label, _target_label(drg, edge)


def node_bags(drg: Drg) -> Dict[str, LabelBag]:
    """Bags behind every node-level metric, keyed by report field name."""
    named = {e.source for e in drg.edges_of_kind(EdgeKind.NAME)}
    discourse = [e.label for e in drg.edges_of_kind(EdgeKind.DISCOURSE)]

    bags: Dict[str, LabelBag] = {
        'names': LabelBag(str(c.synset) for c in drg.concepts if c.id in named),
        'negation': LabelBag(label for label in discourse if label == NEGATION_LABEL),
        'discourse': LabelBag(label for label in discourse if label != NEGATION_LABEL),
        'roles': LabelBag(e.label for e in drg.edges_of_kind(EdgeKind.ROLE)),
        'members': LabelBag(MEMBER_LABEL for _ in drg.edges_of_kind(EdgeKind.MEMBER)),
        'concepts': LabelBag(str(c.synset) for c in drg.concepts),
    }
    for pos, field in POS_BUCKETS.items():
        bags[field] = LabelBag(str(c.synset) for c in drg.concepts if c.synset.pos == pos)
    return bags


_EDGE_KINDS: Dict[str, EdgeKind] = {
    'roles': EdgeKind.ROLE,
    'names': EdgeKind.NAME,
    'members': EdgeKind.MEMBER,
    'operators': EdgeKind.OPERATOR,
    'discourse': EdgeKind.DISCOURSE,
}


def edge_bags(drg: Drg) -> Dict[str, LabelBag]:
    return {
        field: LabelBag(anchored(drg, e) for e in drg.edges_of_kind(kind))
        for field, kind in _EDGE_KINDS.items()
    }

