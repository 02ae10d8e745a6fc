"""Epoch sweeps over a corpus: difficulty against token-count statistics.

For each epoch the transformed corpus yields two aggregates: the total
token count over all output captions, and the mean over batches of the
number of distinct token strings in each batch's output. Both are
deterministic for a fixed (corpus, schedule, seed, batch size), so sweep
output files are byte-reproducible.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from edc.corpus import Corpus, batches, tokenize_corpus
from edc.curriculum import TransformConfig, transform_batch
from edc.schedule import DifficultySchedule, difficulty
from edc.text import StopwordSet, TokenizedCaption, load_stopwords

DAT_HEADER = "difficulty total_tokens_per_epoch avg_tokens_per_batch"


@dataclass(frozen=True)
class EpochStats:
    """Aggregates for one epoch of the curriculum over a whole corpus."""

    epoch: int
    difficulty: float
    total_tokens_per_epoch: int
    avg_unique_tokens_per_batch: float


def _stats_for_prepared(
    prepared: list[TokenizedCaption],
    epoch: int,
    config: TransformConfig,
    batch_size: int,
) -> EpochStats:
    total = 0
    unique_counts = []
    for batch in batches(prepared, batch_size):
        outputs = transform_batch(batch, epoch, config)
        total += sum(len(c.tokens) for c in outputs)
        unique_counts.append(len({t for c in outputs for t in c.tokens}))
    avg_unique = sum(unique_counts) / len(unique_counts) if unique_counts else 0.0
    return EpochStats(
        epoch=epoch,
        difficulty=difficulty(config.schedule, epoch),
        total_tokens_per_epoch=total,
        avg_unique_tokens_per_batch=avg_unique,
    )


def epoch_stats(corpus: Corpus, epoch: int, config: TransformConfig, batch_size: int) -> EpochStats:
    """Transform the corpus at one epoch and aggregate the two statistics."""
    prepared = tokenize_corpus(corpus, config.stopwords)
    return _stats_for_prepared(prepared, epoch, config, batch_size)


def sweep(
    corpus: Corpus,
    schedule: DifficultySchedule,
    seed: int,
    batch_size: int,
    stopwords: StopwordSet | None = None,
    parallel: bool = False,
) -> list[EpochStats]:
    """Per-epoch statistics for epochs 0..max_epoch, sorted by epoch.

    Epochs are independent, so ``parallel=True`` maps them over a thread
    pool; results are identical to the sequential run by construction.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    config = TransformConfig(seed=seed, schedule=schedule, stopwords=stopwords)
    prepared = tokenize_corpus(corpus, stopwords)
    epochs = range(schedule.max_epoch + 1)
    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(
                pool.map(lambda e: _stats_for_prepared(prepared, e, config, batch_size), epochs)
            )
    return [_stats_for_prepared(prepared, e, config, batch_size) for e in epochs]


def emit_dat(stats: list[EpochStats], path: str | os.PathLike) -> None:
    """Write plot-ready rows: difficulty, total tokens, average uniques.

    Space-separated UTF-8 text with a fixed header line; difficulty is
    printed with 6 decimals and the batch average with 4.
    """
    if not stats:
        raise ValueError("refusing to emit an empty statistics table")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(DAT_HEADER + "\n")
        for row in stats:
            fh.write(
                f"{row.difficulty:.6f} {row.total_tokens_per_epoch} "
                f"{row.avg_unique_tokens_per_batch:.4f}\n"
            )


def read_dat(path: str | os.PathLike) -> list[tuple[float, int, float]]:
    """Parse a file produced by :func:`emit_dat`."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if header != DAT_HEADER:
            raise ValueError(f"{path}: unexpected header {header!r}")
        rows = []
        for line in fh:
            d, total, avg = line.split()
            rows.append((float(d), int(total), float(avg)))
    return rows
