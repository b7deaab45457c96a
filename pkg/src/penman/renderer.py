"""
Penman text for DRG triples, and a reader for that text.

Every node is expanded once, at its home edge (a member edge for concepts, the
discourse edge for boxes, the linking edge for constant variables); every other
mention is a bare variable. Attribute values are always written as Penman
strings; literals keep their own quotes inside them.
"""

import collections
import json
from typing import Dict, List, Optional, Tuple

import penman
import penman.constant
from penman.layout import POP, Push

from config.constants import BOX_LABEL, MEMBER_LABEL
from src.models import Drg, Granularity, Triple, TripleForm, TripleSet
from src.penman.triples import extract_triples
from src.utils.error_handler import PenmanParseError

BasicTriple = Tuple[str, str, Optional[str]]

INSTANCE_ROLE = ":instance"


class _TreePenmanModel(penman.model.Model):
    """Roles are taken as written; DRG labels are never inverted."""

    def deinvert(self, triple):
        return triple

    def invert(self, triple):
        return triple


_penman_model = _TreePenmanModel()


def _is_symbol(text: str) -> bool:
    return bool(text) and not any(c.isspace() or c in '()"\\:/~#' for c in text)


def _token(value: str, symbol_ok: bool) -> str:
    if symbol_ok and _is_symbol(value):
        return value
    return json.dumps(value, ensure_ascii=False)


def _value(token: str) -> str:
    if penman.constant.type(token) == penman.constant.STRING:
        return json.loads(token)
    return token


def _home_edges(ts: TripleSet) -> Dict[str, int]:
    """Index of the triple under which each variable is expanded."""
    instances = ts.instance_labels()
    home: Dict[str, int] = {}
    fallback: Dict[str, int] = {}
    for index, t in enumerate(ts.triples):
        if t.form != TripleForm.RELATION or t.target not in instances:
            continue
        target = t.target
        from_box = instances.get(t.var) == BOX_LABEL
        if t.label == MEMBER_LABEL or (from_box and instances[target] == BOX_LABEL):
            home.setdefault(target, index)
        else:
            fallback.setdefault(target, index)
    for var, index in fallback.items():
        home.setdefault(var, index)
    return home


def triples_to_penman(ts: TripleSet, root: Optional[str] = None) -> str:
    """Render triples as single-line Penman text rooted at ``root`` (default: first variable)."""
    variables = ts.variables()
    if not variables:
        return ""
    labels = ts.instance_labels()
    home = _home_edges(ts)

    children: Dict[str, List[int]] = collections.defaultdict(list)
    for index, t in enumerate(ts.triples):
        if t.form != TripleForm.INSTANCE:
            children[t.var].append(index)

    rendered = set()

    def visit(var: str, order: List[BasicTriple], epidata: Dict[BasicTriple, list]) -> None:
        rendered.add(var)
        order.append((var, INSTANCE_ROLE, _token(labels[var], symbol_ok=True)))
        edges = children.get(var, [])
        # member edges first so a box lists its own concepts before sub-boxes
        ordered = [i for i in edges if ts.triples[i].label == MEMBER_LABEL] + \
                  [i for i in edges if ts.triples[i].label != MEMBER_LABEL]
        for index in ordered:
            t = ts.triples[index]
            if t.form == TripleForm.ATTRIBUTE:
                order.append((var, f":{t.label}", _token(t.target, symbol_ok=False)))
                continue
            triple = (var, f":{t.label}", t.target)
            order.append(triple)
            if home.get(t.target) == index and t.target not in rendered:
                epidata.setdefault(triple, []).append(Push(t.target))
                visit(t.target, order, epidata)
                epidata.setdefault(order[-1], []).append(POP)

    def encode(top: str) -> str:
        order: List[BasicTriple] = []
        epidata: Dict[BasicTriple, list] = {}
        visit(top, order, epidata)
        graph = penman.Graph(order, top=top, epidata=epidata)
        return penman.encode(graph, indent=None, model=_penman_model)

    start = root if root in labels else variables[0]
    graphs = [encode(start)]
    for var in variables:
        if var not in rendered and var not in home:
            graphs.append(encode(var))
    # nodes whose home edge hangs off an unreachable node
    for var in variables:
        if var not in rendered:
            graphs.append(encode(var))
    return " ".join(graphs)


def to_penman(drg: Drg, granularity: Granularity = Granularity.COARSE) -> str:
    """Penman rendering of a Drg, rooted at box b0."""
    ts = extract_triples(drg, granularity)
    root = drg.boxes[0].id if drg.boxes else None
    return triples_to_penman(ts, root)


def read_penman(text: str) -> TripleSet:
    """Read text produced by ``to_penman`` back into triples."""
    try:
        graphs = list(penman.iterdecode(text, model=_penman_model))
    except penman.DecodeError as e:
        raise PenmanParseError(str(e)) from e
    if not graphs:
        raise PenmanParseError(f"no graph in {text[:40]!r}")

    triples: List[Triple] = []
    for graph in graphs:
        variables = {source for source, role, _ in graph.triples if role == INSTANCE_ROLE}
        for source, role, target in graph.triples:
            if target is None:
                raise PenmanParseError(f"{role} under {source} has no value")
            if role == INSTANCE_ROLE:
                triples.append(Triple.instance(source, _value(target)))
            elif target in variables:
                triples.append(Triple.relation(source, role[1:], target))
            else:
                triples.append(Triple.attribute(source, role[1:], _value(target)))
    return TripleSet(triples=tuple(triples))
