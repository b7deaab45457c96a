"""Word alignment and named-entity projection between parallel sentences."""

from src.align.ibm1 import IbmModel1, align_sentence, train_ibm1
from src.align.ne_dictionary import extract_ne_pairs, locate_names, ne_flags, normalize_name
from src.align.pipeline import PipelineResult, run_pipeline
from src.align.replacer import apply_patches, replace_names

__all__ = [
    "IbmModel1", "train_ibm1", "align_sentence",
    "locate_names", "extract_ne_pairs", "ne_flags", "normalize_name",
    "replace_names", "apply_patches",
    "PipelineResult", "run_pipeline",
]
