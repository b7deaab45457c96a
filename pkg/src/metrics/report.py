"""
Overall and fine-grained scores for one document pair and for a corpus.

Every per-document score keeps its counts, so a corpus score is the pooled
(micro) aggregate of the document scores.
"""

import logging
from typing import Callable, List, Optional, Sequence, Type, TypeVar

from pydantic import BaseModel

from config.settings import settings
from src.metrics.bags import edge_bags, multiset_f1, node_bags
from src.models import (
    Category, Drg, EdgeLevelScores, FineGrainedReport, GraphLevelScores, Granularity,
    NodeLevelScores, ReportMetadata, SbnDocument, Score, Vocabulary,
)
from src.penman.triples import extract_triples, strip_category
from src.sbn.corpus import parse_document, try_parse_document
from src.sbn.validator import validate
from src.smatch.matcher import smatch_score
from src.utils.error_handler import LengthMismatchError

logger = logging.getLogger(__name__)

LevelT = TypeVar("LevelT", bound=BaseModel)

_ABLATIONS = {
    'no_roles': Category.ROLES,
    'no_discourse': Category.DISCOURSE,
    'no_operators': Category.OPERATORS,
    'no_senses': Category.SENSES,
}


class DocumentScores(BaseModel):
    """All three report levels for one document pair."""
    graph_level: GraphLevelScores
    node_level: NodeLevelScores
    edge_level: EdgeLevelScores


def node_level_report(pred: Drg, gold: Drg) -> NodeLevelScores:
    pred_bags, gold_bags = node_bags(pred), node_bags(gold)
    return NodeLevelScores(**{
        field: multiset_f1(pred_bags[field], gold_bags[field]) for field in gold_bags
    })


def edge_level_report(pred: Drg, gold: Drg) -> EdgeLevelScores:
    pred_bags, gold_bags = edge_bags(pred), edge_bags(gold)
    return EdgeLevelScores(**{
        field: multiset_f1(pred_bags[field], gold_bags[field]) for field in gold_bags
    })


def graph_level_report(
    pred: Drg,
    gold: Drg,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
    vocabulary: Optional[Vocabulary] = None,
) -> GraphLevelScores:
    """Smatch in both granularities, then coarse Smatch with one category stripped from both sides."""
    def score(p, g) -> Score:
        return Score(**smatch_score(p, g, restarts, seed).model_dump(exclude={'mapping'}))

    pred_coarse = extract_triples(pred, Granularity.COARSE)
    gold_coarse = extract_triples(gold, Granularity.COARSE)
    scores = {
        'smatch_fine': score(extract_triples(pred, Granularity.FINE), extract_triples(gold, Granularity.FINE)),
        'smatch_coarse': score(pred_coarse, gold_coarse),
    }
    for field, category in _ABLATIONS.items():
        scores[field] = score(
            strip_category(pred_coarse, category, vocabulary),
            strip_category(gold_coarse, category, vocabulary),
        )
    return GraphLevelScores(**scores)


def document_scores(
    pred: Drg,
    gold: Drg,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
    vocabulary: Optional[Vocabulary] = None,
) -> DocumentScores:
    return DocumentScores(
        graph_level=graph_level_report(pred, gold, restarts, seed, vocabulary),
        node_level=node_level_report(pred, gold),
        edge_level=edge_level_report(pred, gold),
    )


def pool_level(model: Type[LevelT], levels: Sequence[LevelT]) -> LevelT:
    """Micro-aggregate each metric of a report level across documents."""
    return model(**{
        field: Score.pooled(getattr(level, field) for level in levels)
        for field in model.model_fields
    })


def pool_documents(documents: Sequence[DocumentScores]) -> DocumentScores:
    return DocumentScores(
        graph_level=pool_level(GraphLevelScores, [d.graph_level for d in documents]),
        node_level=pool_level(NodeLevelScores, [d.node_level for d in documents]),
        edge_level=pool_level(EdgeLevelScores, [d.edge_level for d in documents]),
    )


def parse_predictions(
    pred_docs: Sequence[SbnDocument],
    vocabulary: Optional[Vocabulary] = None,
) -> tuple[List[Drg], List[int], int]:
    """
    Parse prediction documents for scoring.

    Returns the graphs (an empty graph for each document that does not parse),
    the indices of those unparseable documents, and the number of documents
    that parse and validate.
    """
    graphs: List[Drg] = []
    unparseable: List[int] = []
    well_formed = 0
    for document in pred_docs:
        drg = try_parse_document(document, vocabulary)
        if drg is None:
            unparseable.append(document.index)
            graphs.append(Drg(origin=document.id))
            continue
        if validate(drg, vocabulary).well_formed:
            well_formed += 1
        graphs.append(drg)
    return graphs, unparseable, well_formed


def build_report(
    documents: Sequence[DocumentScores],
    unparseable: List[int],
    well_formed: int,
    restarts: int,
    seed: int,
    vocabulary: Vocabulary,
    tool_version: str,
) -> FineGrainedReport:
    pooled = pool_documents(documents)
    total = len(documents)
    return FineGrainedReport(
        metadata=ReportMetadata(
            tool_version=tool_version,
            seed=seed,
            restarts=restarts,
            operators_sha256=vocabulary.operators_sha256,
            discourse_sha256=vocabulary.discourse_sha256,
            documents=total,
            unparseable=unparseable,
        ),
        graph_level=pooled.graph_level,
        node_level=pooled.node_level,
        edge_level=pooled.edge_level,
        well_formed_rate=well_formed / total if total else 1.0,
    )


def corpus_report(
    pred_docs: Sequence[SbnDocument],
    gold_docs: Sequence[SbnDocument],
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
    vocabulary: Optional[Vocabulary] = None,
    tool_version: str = "dev",
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> FineGrainedReport:
    """
    Score a prediction corpus against gold, in process.

    Document i is matched with seed + i. Gold documents must parse.
    """
    if len(pred_docs) != len(gold_docs):
        raise LengthMismatchError(len(pred_docs), len(gold_docs))
    restarts = settings.smatch.restarts if restarts is None else restarts
    seed = settings.smatch.seed if seed is None else seed
    vocabulary = vocabulary or Vocabulary()

    preds, unparseable, well_formed = parse_predictions(pred_docs, vocabulary)
    golds = [parse_document(d, vocabulary) for d in gold_docs]

    documents: List[DocumentScores] = []
    for index, (pred, gold) in enumerate(zip(preds, golds)):
        documents.append(document_scores(pred, gold, restarts, seed + index, vocabulary))
        if progress_callback:
            progress_callback(index + 1, len(golds))

    return build_report(documents, unparseable, well_formed, restarts, seed, vocabulary, tool_version)
