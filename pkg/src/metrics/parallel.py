"""
Corpus scoring spread over worker processes.

Documents are submitted through an asyncio semaphore bounded by the job count;
results come back in document order whatever the completion order.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence

from config.settings import settings
from src.metrics.report import DocumentScores, build_report, document_scores, parse_predictions
from src.models import Drg, FineGrainedReport, SbnDocument, Vocabulary
from src.sbn.corpus import parse_document
from src.utils.error_handler import LengthMismatchError, validate_positive

logger = logging.getLogger(__name__)


class AsyncCorpusScorer:
    """Scores document pairs on a process pool, at most ``jobs`` at a time."""

    def __init__(self, jobs: int, progress_callback: Optional[Callable[[int, int], None]] = None):
        validate_positive("jobs", jobs)
        self.jobs = jobs
        self._semaphore = asyncio.Semaphore(jobs)
        self.progress_callback = progress_callback
        self._completed = 0
        self._total = 0

    async def _score_one(
        self,
        executor: ProcessPoolExecutor,
        pred: Drg,
        gold: Drg,
        restarts: int,
        seed: int,
        vocabulary: Vocabulary,
    ) -> DocumentScores:
        async with self._semaphore:
            loop = asyncio.get_running_loop()
            result = await loop.run_in_executor(
                executor, document_scores, pred, gold, restarts, seed, vocabulary
            )
            self._completed += 1
            if self.progress_callback:
                self.progress_callback(self._completed, self._total)
            return result

    async def score_all(
        self,
        preds: Sequence[Drg],
        golds: Sequence[Drg],
        restarts: int,
        seed: int,
        vocabulary: Vocabulary,
    ) -> List[DocumentScores]:
        self._total = len(golds)
        self._completed = 0
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            tasks = [
                asyncio.create_task(self._score_one(executor, pred, gold, restarts, seed + index, vocabulary))
                for index, (pred, gold) in enumerate(zip(preds, golds))
            ]
            return list(await asyncio.gather(*tasks))


async def corpus_report_async(
    pred_docs: Sequence[SbnDocument],
    gold_docs: Sequence[SbnDocument],
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
    vocabulary: Optional[Vocabulary] = None,
    jobs: Optional[int] = None,
    tool_version: str = "dev",
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> FineGrainedReport:
    """Same report as ``corpus_report``, with documents scored in parallel."""
    if len(pred_docs) != len(gold_docs):
        raise LengthMismatchError(len(pred_docs), len(gold_docs))
    restarts = settings.smatch.restarts if restarts is None else restarts
    seed = settings.smatch.seed if seed is None else seed
    jobs = settings.report.jobs if jobs is None else jobs
    vocabulary = vocabulary or Vocabulary()

    preds, unparseable, well_formed = parse_predictions(pred_docs, vocabulary)
    golds = [parse_document(d, vocabulary) for d in gold_docs]

    logger.info("Scoring %d documents with %d workers", len(golds), jobs)
    scorer = AsyncCorpusScorer(jobs, progress_callback)
    documents = await scorer.score_all(preds, golds, restarts, seed, vocabulary)
    return build_report(documents, unparseable, well_formed, restarts, seed, vocabulary, tool_version)
