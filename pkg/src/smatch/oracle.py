"""
Exhaustive optimum of the Smatch objective for small graphs.

Variables of the smaller side are assigned in order; a variable mapped outside
its candidate set cannot contribute, so only candidates and "unmapped" are
tried. Branches that cannot beat the best count so far are cut.
"""

import logging
from typing import List, Optional, Set, Tuple

from config.settings import settings
from src.models import MatchResult, TripleSet
from src.smatch.matcher import MatchPool, compute_pool, mapping_to_dict
from src.utils.error_handler import TooLargeError

logger = logging.getLogger(__name__)


def _ceiling(pool: MatchPool, i: int) -> int:
    """Most that variable i could add under any assignment."""
    return max(
        (pool.unary.get((i, j), 0) + sum(pool.binary.get((i, j), {}).values()) for j in pool.candidates[i]),
        default=0,
    )


def _search(pool: MatchPool) -> Tuple[int, List[int]]:
    size = len(pool.pred_vars)
    remaining = [0] * (size + 1)
    for i in range(size - 1, -1, -1):
        remaining[i] = remaining[i + 1] + _ceiling(pool, i)

    mapping = [-1] * size
    used: Set[int] = set()
    best_count = -1
    best_mapping = mapping[:]

    def gain(i: int, j: int) -> int:
        # binary weights towards variables already assigned (all k < i)
        total = pool.unary.get((i, j), 0)
        for (k, l), weight in pool.binary.get((i, j), {}).items():
            if k < i and mapping[k] == l:
                total += weight
        return total

    def visit(i: int, count: int) -> None:
        nonlocal best_count, best_mapping
        if count + remaining[i] <= best_count:
            return
        if i == size:
            best_count, best_mapping = count, mapping[:]
            return
        for j in sorted(pool.candidates[i]):
            if j in used:
                continue
            mapping[i] = j
            used.add(j)
            visit(i + 1, count + gain(i, j))
            used.discard(j)
            mapping[i] = -1
        visit(i + 1, count)

    visit(0, 0)
    return best_count, best_mapping


def exhaustive_match(pred: TripleSet, gold: TripleSet, max_vars: Optional[int] = None) -> MatchResult:
    """Globally optimal injective mapping, enumerated from the side with fewer variables."""
    max_vars = settings.smatch.oracle_max_vars if max_vars is None else max_vars
    size = min(pred.var_count, gold.var_count)
    if size > max_vars:
        raise TooLargeError(size, max_vars)

    if pred.var_count <= gold.var_count:
        pool = compute_pool(pred, gold)
        count, best = _search(pool)
        mapping = mapping_to_dict(pool, best)
    else:
        pool = compute_pool(gold, pred)
        count, best = _search(pool)
        mapping = {p: g for g, p in mapping_to_dict(pool, best).items()}

    logger.debug("Oracle matched %d of %d/%d triples", count, len(pred), len(gold))
    return MatchResult.from_counts(count, len(pred), len(gold), mapping=mapping)
