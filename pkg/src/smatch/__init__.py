"""Triple matching between graphs: hill-climbing Smatch and an exhaustive oracle."""

from src.smatch.matcher import compute_pool, corpus_smatch, matched_triples, smatch_score
from src.smatch.oracle import exhaustive_match

__all__ = ["compute_pool", "matched_triples", "smatch_score", "corpus_smatch", "exhaustive_match"]
