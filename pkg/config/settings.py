"""
Configuration settings for the DRG evaluation toolkit.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import FrozenSet

from config.constants import DEFAULT_DISCOURSE, DEFAULT_OPERATORS, NULL_TOKEN

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "DRG_EVAL_SEED"


def _seed_from_env(default: int = 0) -> int:
    """Read the default seed, letting DRG_EVAL_SEED override it."""
    raw = os.getenv(SEED_ENV_VAR)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using seed %d", SEED_ENV_VAR, raw, default)
        return default


@dataclass
class VocabularySettings:
    """Label vocabularies that drive token classification."""
    operators: FrozenSet[str] = DEFAULT_OPERATORS
    discourse: FrozenSet[str] = DEFAULT_DISCOURSE


@dataclass
class SmatchSettings:
    """Settings for graph matching."""
    restarts: int = 4
    oracle_max_vars: int = 8
    seed: int = field(default_factory=_seed_from_env)


@dataclass
class AlignSettings:
    """Settings for the word aligner and name projection."""
    iterations: int = 20
    target_separator: str = ""  # CJK names are written without spaces
    null_token: str = NULL_TOKEN
    skip_nationality: bool = True


@dataclass
class ReportSettings:
    """Settings for report rendering."""
    default_format: str = "json"
    tsv_precision: int = 4
    markdown_precision: int = 1  # percentages
    jobs: int = 1


@dataclass
class AppSettings:
    """Main application settings container."""
    vocabulary: VocabularySettings = None
    smatch: SmatchSettings = None
    align: AlignSettings = None
    report: ReportSettings = None

    def __post_init__(self):
        if self.vocabulary is None:
            self.vocabulary = VocabularySettings()
        if self.smatch is None:
            self.smatch = SmatchSettings()
        if self.align is None:
            self.align = AlignSettings()
        if self.report is None:
            self.report = ReportSettings()


# Global settings instance
settings = AppSettings()
