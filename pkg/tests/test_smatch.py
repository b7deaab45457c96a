"""Tests for Smatch hill-climbing and the exhaustive matcher."""
import itertools
import random

import pytest

from src.models import Granularity, Triple, TripleForm, TripleSet
from src.penman import extract_triples
from src.sbn import parse_sbn, tokenize_sbn
from src.smatch import compute_pool, corpus_smatch, exhaustive_match, matched_triples, smatch_score
from src.smatch.matcher import MatchPool, random_init_mapping
from src.utils.error_handler import TooLargeError, ValidationError
from tests.conftest import HANDY_SAW, MUSIC_LURE, SAMPLE_DOCUMENTS

GOOD_VARIANT = HANDY_SAW['gold'].replace('handy.a.03', 'good.a.01')


def triples(text, granularity=Granularity.COARSE):
    return extract_triples(parse_sbn(tokenize_sbn(text)), granularity)


def renamed(ts: TripleSet, prefix: str) -> TripleSet:
    """Same triples with every variable renamed."""
    variables = set(ts.variables())

    def rename(var):
        return f"{prefix}{var}" if var in variables else var

    return TripleSet(triples=tuple(
        t.model_copy(update={
            "var": rename(t.var),
            "target": rename(t.target) if t.form == TripleForm.RELATION else t.target,
        })
        for t in ts
    ))


def identity(ts: TripleSet):
    return {v: v for v in ts.variables()}


def test_matched_triples_identity():
    gold = triples(HANDY_SAW['gold'])
    assert matched_triples(gold, gold, identity(gold)) == len(gold)


def test_matched_triples_one_label_differs():
    gold = triples(HANDY_SAW['gold'])
    pred = triples(GOOD_VARIANT)
    assert matched_triples(pred, gold, identity(pred)) == 15


def test_matched_triples_disjoint_labels():
    pred = triples('entity.n.01')
    gold = triples('saw.n.02')
    assert matched_triples(pred, gold, {'c0': 'c0'}) == 0


def test_matched_triples_consumes_gold_once():
    """Two identical prediction triples can only use one gold copy."""
    gold = TripleSet(triples=(Triple.instance('a', 'x'), Triple.attribute('a', 'EQU', 'now')))
    pred = TripleSet(triples=(
        Triple.instance('a', 'x'), Triple.attribute('a', 'EQU', 'now'), Triple.attribute('a', 'EQU', 'now'),
    ))
    assert matched_triples(pred, gold, {'a': 'a'}) == 2


@pytest.mark.parametrize("granularity", [Granularity.COARSE, Granularity.FINE])
@pytest.mark.parametrize("text", SAMPLE_DOCUMENTS)
def test_self_score_is_perfect(text, granularity):
    ts = triples(text, granularity)
    result = smatch_score(ts, ts, restarts=4, seed=0)
    assert result.f1 == 1.0
    assert result.matched == len(ts)


def test_one_concept_differs():
    result = smatch_score(triples(GOOD_VARIANT), triples(HANDY_SAW['gold']), restarts=4, seed=0)
    assert result.matched == 15
    assert result.precision == pytest.approx(0.9375)
    assert result.recall == pytest.approx(0.9375)
    assert result.f1 == pytest.approx(0.9375)


def test_empty_prediction():
    result = smatch_score(TripleSet(), triples(HANDY_SAW['gold']))
    assert (result.precision, result.recall, result.f1) == (0.0, 0.0, 0.0)


def test_both_empty_is_perfect():
    assert smatch_score(TripleSet(), TripleSet()).f1 == 1.0


def test_restarts_must_be_positive():
    ts = triples('entity.n.01')
    with pytest.raises(ValidationError):
        smatch_score(ts, ts, restarts=0)


def test_deterministic_for_fixed_seed():
    pred, gold = triples(MUSIC_LURE['zh_en']), triples(MUSIC_LURE['gold'])
    first = smatch_score(pred, gold, restarts=8, seed=13)
    second = smatch_score(pred, gold, restarts=8, seed=13)
    assert first == second


def test_mapping_is_injective():
    pred, gold = triples(HANDY_SAW['zh']), triples(HANDY_SAW['gold'])
    mapping = smatch_score(pred, gold, restarts=4, seed=0).mapping
    assert len(set(mapping.values())) == len(mapping)
    assert matched_triples(pred, gold, mapping) == smatch_score(pred, gold, restarts=4, seed=0).matched


def test_pool_candidates_are_label_compatible():
    """A variable is only a candidate where some triple could match."""
    pool = compute_pool(triples('entity.n.01'), triples('saw.n.02 entity.n.01'))
    # pred c0 (entity) can take gold c1 through its label and any member target through b0
    assert pool.candidates[1] == {1, 2}
    assert pool.unary[(1, 2)] == 1
    assert (1, 1) not in pool.unary


def _item_pairs():
    for item in (MUSIC_LURE, HANDY_SAW):
        for pred, gold in itertools.product(item.values(), repeat=2):
            yield pred, gold


def test_random_init_varies_assignment_order():
    """Any prediction variable can be the one that takes a contested gold variable."""
    pool = MatchPool(pred_vars=["a", "b"], gold_vars=["x"], candidates=[{0}, {0}])
    starts = {tuple(random_init_mapping(pool, random.Random(seed))) for seed in range(20)}
    assert starts == {(0, -1), (-1, 0)}


@pytest.mark.parametrize("pred_text,gold_text", list(_item_pairs()))
def test_hill_climbing_reaches_optimum(pred_text, gold_text):
    pred, gold = triples(pred_text), triples(gold_text)
    assert smatch_score(pred, gold, restarts=16, seed=0).matched == exhaustive_match(pred, gold).matched


@pytest.mark.parametrize("pred_text,gold_text", [
    (HANDY_SAW['zh'], HANDY_SAW['gold']),
    (HANDY_SAW['zh_en'], HANDY_SAW['en']),
    (MUSIC_LURE['zh'], MUSIC_LURE['gold']),
])
def test_oracle_dominates_fine(pred_text, gold_text):
    pred, gold = triples(pred_text, Granularity.FINE), triples(gold_text, Granularity.FINE)
    assert exhaustive_match(pred, gold).matched >= smatch_score(pred, gold, restarts=4, seed=0).matched


def test_oracle_symmetric():
    a, b = triples(MUSIC_LURE['zh_en']), triples(MUSIC_LURE['gold'])
    forward = exhaustive_match(a, b)
    backward = exhaustive_match(b, a)
    assert forward.matched == backward.matched
    assert forward.precision == pytest.approx(backward.recall)


def test_oracle_mapping_direction():
    """The mapping always goes from prediction to gold, whichever side is searched."""
    pred, gold = triples(MUSIC_LURE['gold']), triples(MUSIC_LURE['zh_en'])
    result = exhaustive_match(pred, gold)
    assert set(result.mapping) <= set(pred.variables())
    assert set(result.mapping.values()) <= set(gold.variables())
    assert matched_triples(pred, gold, result.mapping) == result.matched


def test_oracle_too_large():
    nine = triples(" ".join(["entity.n.01"] * 8))
    assert nine.var_count == 9
    with pytest.raises(TooLargeError):
        exhaustive_match(nine, nine)


def test_score_invariant_under_renaming():
    pred, gold = triples(HANDY_SAW['zh']), triples(HANDY_SAW['gold'])
    baseline = exhaustive_match(pred, gold)
    assert exhaustive_match(renamed(pred, "p_"), renamed(gold, "g_")).f1 == pytest.approx(baseline.f1)
    assert smatch_score(renamed(pred, "p_"), gold, restarts=16, seed=0).matched == baseline.matched


def test_corpus_smatch_pools_counts():
    pairs = [
        (triples(GOOD_VARIANT), triples(HANDY_SAW['gold'])),
        (triples(MUSIC_LURE['gold']), triples(MUSIC_LURE['gold'])),
    ]
    score = corpus_smatch(pairs, restarts=4, seed=0)
    gold_total = len(pairs[0][1]) + len(pairs[1][1])
    assert score.gold_total == gold_total
    assert score.matched == 15 + len(pairs[1][1])
    assert score.f1 == pytest.approx(score.matched / gold_total)
