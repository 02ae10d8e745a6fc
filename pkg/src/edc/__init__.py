"""Epoch-driven difficulty curriculum for caption training targets.

Schedules a per-epoch difficulty level, probabilistically strips
stopwords from target captions according to that level, and reports the
per-epoch token statistics, all fully deterministic for a fixed seed.
"""

from edc._backend import backend_name
from edc.corpus import (
    CaptionRecord,
    Corpus,
    CorpusFormatError,
    batches,
    load_clotho_csv,
    load_jsonl,
    save_jsonl,
    tokenize_corpus,
)
from edc.curriculum import (
    RngStream,
    TransformConfig,
    apply_curriculum,
    derive_stream,
    render,
    transform_batch,
)
from edc.schedule import (
    DEFAULT_FLOOR,
    DifficultySchedule,
    alpha_for_max_epoch,
    difficulty,
    schedule_table,
)
from edc.stats import EpochStats, emit_dat, epoch_stats, read_dat, sweep
from edc.text import StopwordSet, TokenizedCaption, classify, load_stopwords, tokenize

__version__ = "0.1.0"

__all__ = [
    "CaptionRecord",
    "Corpus",
    "CorpusFormatError",
    "DEFAULT_FLOOR",
    "DifficultySchedule",
    "EpochStats",
    "RngStream",
    "StopwordSet",
    "TokenizedCaption",
    "TransformConfig",
    "alpha_for_max_epoch",
    "apply_curriculum",
    "backend_name",
    "batches",
    "classify",
    "derive_stream",
    "difficulty",
    "emit_dat",
    "epoch_stats",
    "load_clotho_csv",
    "load_jsonl",
    "load_stopwords",
    "read_dat",
    "render",
    "save_jsonl",
    "schedule_table",
    "sweep",
    "tokenize",
    "tokenize_corpus",
    "transform_batch",
]
