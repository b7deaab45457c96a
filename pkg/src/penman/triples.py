"""
Triple extraction from DRGs in fine or coarse granularity, ablation stripping,
and the triple TSV dump.
"""

import csv
import io
from pathlib import Path
from typing import List, Optional, Union

from config.constants import (
    BOX_LABEL, FINE_SYNSET_ATTRIBUTES, FINE_SYNSET_LABEL, MEMBER_LABEL, NAME_LABEL,
    TSV_HEADERS, VARIABLE_PREFIXES,
)
from src.models import (
    Category, Drg, Granularity, LiteralTarget, NodeTarget, SynsetId, Triple, TripleForm, TripleSet, Vocabulary,
)
from src.utils.error_handler import CorpusFormatError, UnknownCategoryError


def extract_triples(drg: Drg, granularity: Granularity = Granularity.COARSE) -> TripleSet:
    """
    Turn a Drg into triples.

    Boxes and concepts keep their node ids as variables (b0.., c0..). In coarse
    mode a synset is one Instance label and constants/literals hang off the
    concept as Attributes. In fine mode the synset is split into lemma, pos and
    sense attributes and every constant/literal gets its own variable.
    Literals keep their double quotes in both modes, so the literal "?" and the
    constant ? are different values.
    """
    granularity = Granularity(granularity)
    triples: List[Triple] = []

    for box in drg.boxes:
        triples.append(Triple.instance(box.id, BOX_LABEL))
    for concept in drg.concepts:
        if granularity == Granularity.COARSE:
            triples.append(Triple.instance(concept.id, str(concept.synset)))
        else:
            synset = concept.synset
            triples.append(Triple.instance(concept.id, FINE_SYNSET_LABEL))
            for attribute, value in zip(FINE_SYNSET_ATTRIBUTES, (synset.lemma, synset.pos, synset.sense_label)):
                triples.append(Triple.attribute(concept.id, attribute, value))

    constant_index = 0
    for edge in drg.edges:
        target = edge.target
        if isinstance(target, NodeTarget):
            triples.append(Triple.relation(edge.source, edge.label, target.node))
            continue
        value = target.quoted if isinstance(target, LiteralTarget) else target.value
        if granularity == Granularity.COARSE:
            triples.append(Triple.attribute(edge.source, edge.label, value))
        else:
            var = f"{VARIABLE_PREFIXES['constant']}{constant_index}"
            constant_index += 1
            triples.append(Triple.instance(var, value))
            triples.append(Triple.relation(edge.source, edge.label, var))

    return TripleSet(triples=tuple(triples))


def _box_vars(ts: TripleSet) -> set:
    return {t.var for t in ts if t.form == TripleForm.INSTANCE and t.label == BOX_LABEL}


def _is_discourse(triple: Triple, boxes: set) -> bool:
    return triple.form == TripleForm.RELATION and triple.var in boxes and triple.target in boxes


def _is_role(triple: Triple, boxes: set, vocabulary: Vocabulary) -> bool:
    if triple.form == TripleForm.INSTANCE:
        return False
    label = triple.label
    return (
        label[:1].isupper()
        and label not in (NAME_LABEL, MEMBER_LABEL)
        and label not in vocabulary.operators
        and not _is_discourse(triple, boxes)
    )


def strip_category(
    ts: TripleSet,
    category: Union[Category, str],
    vocabulary: Optional[Vocabulary] = None,
) -> TripleSet:
    """Remove (or, for senses, coarsen) one category of triples."""
    try:
        category = Category(category)
    except ValueError:
        raise UnknownCategoryError(str(category)) from None
    vocabulary = vocabulary or Vocabulary()
    boxes = _box_vars(ts)

    if category == Category.ROLES:
        kept = [t for t in ts if not _is_role(t, boxes, vocabulary)]
    elif category == Category.DISCOURSE:
        kept = [t for t in ts if not _is_discourse(t, boxes)]
    elif category == Category.OPERATORS:
        kept = [t for t in ts if t.form == TripleForm.INSTANCE or t.label not in vocabulary.operators]
    else:
        kept = []
        for t in ts:
            synset = SynsetId.parse(t.label) if t.form == TripleForm.INSTANCE else None
            kept.append(Triple.instance(t.var, synset.without_sense) if synset else t)
    return TripleSet(triples=tuple(kept))


def triples_to_tsv(ts: TripleSet, header: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    if header:
        writer.writerow(TSV_HEADERS['triples'])
    for t in ts:
        writer.writerow([t.var, t.label, t.target, t.form.value])
    return buffer.getvalue()


def read_triples_tsv(path: Union[str, Path]) -> TripleSet:
    triples: List[Triple] = []
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f, delimiter="\t")
        for number, row in enumerate(reader, start=1):
            if not row or row == TSV_HEADERS['triples']:
                continue
            if len(row) != 4:
                raise CorpusFormatError(str(path), number, f"expected 4 columns, got {len(row)}")
            var, label, target, form = row
            try:
                triples.append(Triple(form=TripleForm(form), var=var, label=label, target=target))
            except ValueError as e:
                raise CorpusFormatError(str(path), number, str(e)) from e
    return TripleSet(triples=tuple(triples))
