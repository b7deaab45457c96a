"""
IBM Model 1 lexical translation model trained with expectation-maximization.

t(tgt | src) is stored sparsely as src -> tgt -> probability and only for pairs
that co-occur in some sentence. Every sentence has an implicit NULL source
token so target words can stay unaligned.
"""

import logging
import math
from collections import defaultdict
from typing import Dict, List, Optional, Sequence

from config.settings import settings
from src.models import AlignmentLink, ParallelSentence, TranslationTable
from src.utils.error_handler import EmptyCorpusError, validate_positive

logger = logging.getLogger(__name__)

Table = Dict[str, Dict[str, float]]


class IbmModel1:
    """EM trainer; ``history`` holds the corpus log-likelihood before each iteration and after the last."""

    def __init__(self, null_token: Optional[str] = None):
        self.null_token = null_token or settings.align.null_token
        self.history: List[float] = []

    def _sources(self, sentence: ParallelSentence) -> List[str]:
        return sentence.src_tokens + [self.null_token]

    def initial_table(self, corpus: Sequence[ParallelSentence]) -> Table:
        """Uniform over the target words each source word co-occurs with."""
        cooccurring: Dict[str, Dict[str, None]] = defaultdict(dict)
        for sentence in corpus:
            for src in self._sources(sentence):
                for tgt in sentence.tgt_tokens:
                    cooccurring[src][tgt] = None
        return {
            src: {tgt: 1.0 / len(tgts) for tgt in tgts}
            for src, tgts in cooccurring.items()
        }

    def em_step(self, corpus: Sequence[ParallelSentence], table: Table) -> Table:
        counts: Dict[str, Dict[str, float]] = defaultdict(lambda: defaultdict(float))
        totals: Dict[str, float] = defaultdict(float)

        # E step: fractional alignment counts
        for sentence in corpus:
            sources = self._sources(sentence)
            for tgt in sentence.tgt_tokens:
                normalizer = sum(table[src][tgt] for src in sources)
                for src in sources:
                    delta = table[src][tgt] / normalizer
                    counts[src][tgt] += delta
                    totals[src] += delta

        # M step: renormalize per source word
        return {
            src: {tgt: count / totals[src] for tgt, count in row.items()}
            for src, row in counts.items()
        }

    def log_likelihood(self, corpus: Sequence[ParallelSentence], table: Table) -> float:
        """Sum over target words of log(sum_src t(tgt|src) / (len(src) + 1))."""
        total = 0.0
        for sentence in corpus:
            sources = self._sources(sentence)
            for tgt in sentence.tgt_tokens:
                total += math.log(sum(table[src][tgt] for src in sources) / len(sources))
        return total

    def train(self, corpus: Sequence[ParallelSentence], iterations: Optional[int] = None) -> TranslationTable:
        iterations = settings.align.iterations if iterations is None else iterations
        validate_positive("iterations", iterations)
        if not corpus:
            raise EmptyCorpusError()

        table = self.initial_table(corpus)
        self.history = [self.log_likelihood(corpus, table)]
        for iteration in range(1, iterations + 1):
            table = self.em_step(corpus, table)
            self.history.append(self.log_likelihood(corpus, table))
            logger.debug("EM iteration %d: log-likelihood %.6f", iteration, self.history[-1])

        logger.info(
            "Trained IBM Model 1 on %d sentences (%d source types) in %d iterations",
            len(corpus), len(table), iterations,
        )
        return TranslationTable(probabilities=table, null_token=self.null_token)


def train_ibm1(corpus: Sequence[ParallelSentence], iterations: Optional[int] = None) -> TranslationTable:
    return IbmModel1().train(corpus, iterations)


def align_sentence(table: TranslationTable, sentence: ParallelSentence) -> List[AlignmentLink]:
    """
    Link each target word to its most probable source word.

    Ties go to the leftmost source word; NULL wins only when strictly more
    probable, and a word with no probability mass anywhere links to NULL.
    """
    links: List[AlignmentLink] = []
    for tgt_index, tgt in enumerate(sentence.tgt_tokens):
        best_index: Optional[int] = None
        best_prob = 0.0
        for src_index, src in enumerate(sentence.src_tokens):
            prob = table.prob(tgt, src)
            if prob > best_prob:
                best_index, best_prob = src_index, prob
        if table.prob(tgt, table.null_token) > best_prob:
            best_index = None
        links.append(AlignmentLink(tgt_index=tgt_index, src_index=best_index))
    return links
