"""
Smatch: triple overlap between two graphs, maximised over variable mappings by
hill-climbing with restarts.

Mappings are lists indexed by prediction variable position; each entry is a
gold variable position or -1 for unmapped.
"""

import logging
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from config.settings import settings
from src.models import MatchResult, Score, TripleForm, TripleSet
from src.utils.error_handler import validate_positive

logger = logging.getLogger(__name__)

Mapping = List[int]
NodePair = Tuple[int, int]

# stands in for the target of a relation from a variable to itself
_SELF = "\x00self"


@dataclass
class MatchPool:
    """
    Candidate mappings and triple-match weights between two triple sets.

    unary[(i, j)] counts triples of prediction variable i that match when i maps
    to j on their own (instances, attributes, self-loops). binary[(i, j)][(k, l)]
    counts relation triples matched when both i -> j and k -> l hold; it is
    stored in both directions.
    """
    pred_vars: List[str]
    gold_vars: List[str]
    candidates: List[Set[int]]
    unary: Dict[NodePair, int] = field(default_factory=dict)
    binary: Dict[NodePair, Dict[NodePair, int]] = field(default_factory=dict)

    def score(self, mapping: Sequence[int]) -> int:
        total = 0
        for i, j in enumerate(mapping):
            if j == -1:
                continue
            total += self.unary.get((i, j), 0)
            for (k, l), weight in self.binary.get((i, j), {}).items():
                if k > i and mapping[k] == l:
                    total += weight
        return total


def _declared(ts: TripleSet) -> List[str]:
    seen = {}
    for var in ts.variables():
        seen.setdefault(var, len(seen))
    return list(seen)


def _keys(ts: TripleSet, index: Dict[str, int]) -> Tuple[Counter, Counter]:
    """Split triples into unary keys (var, form, label, value) and binary keys (var, label, var)."""
    unary: Counter = Counter()
    binary: Counter = Counter()
    for t in ts:
        if t.var not in index:
            continue
        i = index[t.var]
        if t.form == TripleForm.RELATION:
            if t.target not in index:
                continue
            k = index[t.target]
            if k == i:
                unary[(i, t.form, t.label, _SELF)] += 1
            else:
                binary[(i, t.label, k)] += 1
        else:
            unary[(i, t.form, t.label, t.target)] += 1
    return unary, binary


def compute_pool(pred: TripleSet, gold: TripleSet) -> MatchPool:
    """Build candidate sets and the decomposed multiset-match objective."""
    pred_vars = _declared(pred)
    gold_vars = _declared(gold)
    pred_unary, pred_binary = _keys(pred, {v: i for i, v in enumerate(pred_vars)})
    gold_unary, gold_binary = _keys(gold, {v: i for i, v in enumerate(gold_vars)})

    pool = MatchPool(pred_vars, gold_vars, [set() for _ in pred_vars])

    gold_unary_index: Dict[tuple, List[Tuple[int, int]]] = defaultdict(list)
    for (j, form, label, value), count in gold_unary.items():
        gold_unary_index[(form, label, value)].append((j, count))
    for (i, form, label, value), count in pred_unary.items():
        for j, gold_count in gold_unary_index.get((form, label, value), []):
            pool.candidates[i].add(j)
            pool.unary[(i, j)] = pool.unary.get((i, j), 0) + min(count, gold_count)

    gold_binary_index: Dict[str, List[Tuple[int, int, int]]] = defaultdict(list)
    for (j, label, l), count in gold_binary.items():
        gold_binary_index[label].append((j, l, count))
    for (i, label, k), count in pred_binary.items():
        for j, l, gold_count in gold_binary_index.get(label, []):
            weight = min(count, gold_count)
            pool.candidates[i].add(j)
            pool.candidates[k].add(l)
            forward = pool.binary.setdefault((i, j), {})
            forward[(k, l)] = forward.get((k, l), 0) + weight
            backward = pool.binary.setdefault((k, l), {})
            backward[(i, j)] = backward.get((i, j), 0) + weight
    return pool


def smart_init_mapping(pool: MatchPool, pred: TripleSet, gold: TripleSet) -> Mapping:
    """Map each prediction variable to the first unused gold variable with the same instance label."""
    pred_labels = pred.instance_labels()
    gold_labels = gold.instance_labels()
    used: Set[int] = set()
    mapping: Mapping = []
    for i, var in enumerate(pool.pred_vars):
        choice = -1
        for j in sorted(pool.candidates[i]):
            if j not in used and gold_labels.get(pool.gold_vars[j]) == pred_labels.get(var):
                choice = j
                break
        if choice != -1:
            used.add(choice)
        mapping.append(choice)
    return mapping


def random_init_mapping(pool: MatchPool, rng: random.Random) -> Mapping:
    """Assign prediction variables in a shuffled order, each to a random free candidate."""
    order = list(range(len(pool.candidates)))
    rng.shuffle(order)
    used: Set[int] = set()
    mapping: Mapping = [-1] * len(order)
    for i in order:
        free = [j for j in sorted(pool.candidates[i]) if j not in used]
        if free:
            choice = rng.choice(free)
            used.add(choice)
            mapping[i] = choice
    return mapping


def get_best_gain(pool: MatchPool, mapping: Mapping, current: int, memo: Dict[tuple, int]) -> Tuple[int, Mapping]:
    """Steepest-ascent step over single reassignments and pairwise swaps."""
    def evaluate(candidate: Mapping) -> int:
        key = tuple(candidate)
        if key not in memo:
            memo[key] = pool.score(candidate)
        return memo[key]

    best_gain = 0
    best_mapping = mapping
    unmatched = set(range(len(pool.gold_vars))) - set(mapping)

    for i in range(len(mapping)):
        for j in sorted(pool.candidates[i] & unmatched):
            moved = mapping[:]
            moved[i] = j
            gain = evaluate(moved) - current
            if gain > best_gain:
                best_gain, best_mapping = gain, moved

    for i in range(len(mapping)):
        for k in range(i + 1, len(mapping)):
            if mapping[i] == mapping[k]:
                continue
            swapped = mapping[:]
            swapped[i], swapped[k] = mapping[k], mapping[i]
            gain = evaluate(swapped) - current
            if gain > best_gain:
                best_gain, best_mapping = gain, swapped

    return best_gain, best_mapping


def hill_climb(pool: MatchPool, start: Mapping, memo: Dict[tuple, int]) -> Tuple[int, Mapping]:
    mapping = start
    current = pool.score(mapping)
    while True:
        gain, candidate = get_best_gain(pool, mapping, current, memo)
        if gain <= 0:
            return current, mapping
        current += gain
        mapping = candidate


def mapping_to_dict(pool: MatchPool, mapping: Sequence[int]) -> Dict[str, str]:
    return {pool.pred_vars[i]: pool.gold_vars[j] for i, j in enumerate(mapping) if j != -1}


def matched_triples(pred: TripleSet, gold: TripleSet, mapping: Dict[str, str]) -> int:
    """Prediction triples equal to a gold triple after renaming variables; each gold triple is used once."""
    available = Counter(gold.triples)
    matched = 0
    for t in pred:
        if t.var not in mapping:
            continue
        target = t.target
        if t.form == TripleForm.RELATION:
            if target not in mapping:
                continue
            target = mapping[target]
        image = t.model_copy(update={"var": mapping[t.var], "target": target})
        if available[image] > 0:
            available[image] -= 1
            matched += 1
    return matched


def smatch_score(
    pred: TripleSet,
    gold: TripleSet,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
) -> MatchResult:
    """
    Best triple overlap found by hill-climbing.

    The first search starts from label-compatible seeding, the rest from random
    mappings drawn from ``random.Random(seed)``.
    """
    restarts = settings.smatch.restarts if restarts is None else restarts
    seed = settings.smatch.seed if seed is None else seed
    validate_positive("restarts", restarts)

    pool = compute_pool(pred, gold)
    rng = random.Random(seed)
    memo: Dict[tuple, int] = {}

    best_count = -1
    best_mapping: Mapping = []
    for attempt in range(restarts):
        start = smart_init_mapping(pool, pred, gold) if attempt == 0 else random_init_mapping(pool, rng)
        count, mapping = hill_climb(pool, start, memo)
        if count > best_count:
            best_count, best_mapping = count, mapping

    logger.debug("Smatch matched %d of %d/%d triples", best_count, len(pred), len(gold))
    return MatchResult.from_counts(
        max(best_count, 0), len(pred), len(gold),
        mapping=mapping_to_dict(pool, best_mapping),
    )


def corpus_smatch(
    pairs: Iterable[Tuple[TripleSet, TripleSet]],
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
) -> Score:
    """Micro-averaged Smatch; document i is searched with seed + i."""
    seed = settings.smatch.seed if seed is None else seed
    return Score.pooled(
        smatch_score(pred, gold, restarts, seed + index)
        for index, (pred, gold) in enumerate(pairs)
    )
