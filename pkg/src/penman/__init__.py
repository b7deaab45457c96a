"""Graph form of DRGs: triples, ablation stripping and Penman text."""

from src.penman.renderer import read_penman, to_penman, triples_to_penman
from src.penman.triples import extract_triples, read_triples_tsv, strip_category, triples_to_tsv

__all__ = [
    "extract_triples", "strip_category", "triples_to_tsv", "read_triples_tsv",
    "to_penman", "triples_to_penman", "read_penman",
]
