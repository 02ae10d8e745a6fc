"""Caption corpus ingestion: Clotho-style CSV and generic JSONL.

Records keep the file's row/line order; a record's ordinal is simply its
position in the corpus, which is what ties it to its random stream.
Shuffling belongs to the consuming training loop, not here.
"""

import csv
import json
import os
from dataclasses import dataclass
from typing import Iterator, Sequence, TypeVar

from edc.text import StopwordSet, TokenizedCaption, classify, tokenize

CLOTHO_HEADER = ("file_name", "caption_1", "caption_2", "caption_3", "caption_4", "caption_5")

T = TypeVar("T")


class CorpusFormatError(ValueError):
    """An input file does not match the expected layout."""


@dataclass(frozen=True)
class CaptionRecord:
    """One caption: its clip/source id, per-clip caption index, raw text."""

    source_id: str
    caption_index: int
    text: str


@dataclass(frozen=True)
class Corpus:
    """Ordered caption records; a record's ordinal is its index here."""

    records: tuple[CaptionRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[CaptionRecord]:
        return iter(self.records)

    def __getitem__(self, index):
        return self.records[index]


def load_clotho_csv(path: str | os.PathLike) -> Corpus:
    """Load a Clotho-style CSV: header file_name,caption_1,...,caption_5.

    Emits one record per (row, caption column) in row-major order, so
    every clip contributes five consecutive records.
    """
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise CorpusFormatError(f"{path}: empty file, expected header {','.join(CLOTHO_HEADER)}")
        if tuple(header) != CLOTHO_HEADER:
            missing = [name for name in CLOTHO_HEADER if name not in header]
            if missing:
                raise CorpusFormatError(f"{path}: header missing column(s) {', '.join(missing)}")
            raise CorpusFormatError(
                f"{path}: bad header {','.join(header)!r}, expected {','.join(CLOTHO_HEADER)}"
            )
        for row_num, row in enumerate(reader, start=2):
            if len(row) != len(CLOTHO_HEADER):
                raise CorpusFormatError(
                    f"{path}: row {row_num}: expected {len(CLOTHO_HEADER)} columns, got {len(row)}"
                )
            source_id = row[0]
            if not source_id.strip():
                raise CorpusFormatError(f"{path}: row {row_num}: empty file_name")
            for caption_index, cell in enumerate(row[1:], start=1):
                if not cell.strip():
                    raise CorpusFormatError(
                        f"{path}: row {row_num}: empty caption_{caption_index}"
                    )
                records.append(CaptionRecord(source_id, caption_index, cell))
    return Corpus(records=tuple(records))


def load_jsonl(path: str | os.PathLike) -> Corpus:
    """Load a JSONL corpus: one {"id": ..., "caption": ...} object per line."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_num, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"{path}: line {line_num}: invalid JSON: {exc}") from None
            if not isinstance(obj, dict):
                raise CorpusFormatError(f"{path}: line {line_num}: expected a JSON object")
            for field in ("id", "caption"):
                if field not in obj:
                    raise CorpusFormatError(f"{path}: line {line_num}: missing field {field!r}")
                if not isinstance(obj[field], str):
                    raise CorpusFormatError(f"{path}: line {line_num}: field {field!r} must be a string")
            if not obj["id"].strip():
                raise CorpusFormatError(f"{path}: line {line_num}: empty id")
            if not obj["caption"].strip():
                raise CorpusFormatError(f"{path}: line {line_num}: empty caption")
            records.append(CaptionRecord(obj["id"], 0, obj["caption"]))
    return Corpus(records=tuple(records))


def save_jsonl(corpus: Corpus, path: str | os.PathLike) -> None:
    """Write a corpus in the JSONL input format (caption_index is dropped)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in corpus.records:
            fh.write(json.dumps({"id": record.source_id, "caption": record.text}) + "\n")


def batches(items: Sequence[T], batch_size: int) -> list[Sequence[T]]:
    """Contiguous, order-preserving slices; the last one may be short."""
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size!r}")
    return [items[i : i + batch_size] for i in range(0, len(items), batch_size)]


def tokenize_corpus(corpus: Corpus, stopwords: StopwordSet) -> list[TokenizedCaption]:
    """Tokenize and classify every record, assigning corpus ordinals."""
    return [
        classify(tokenize(record.text, source_id=record.source_id, ordinal=i), stopwords)
        for i, record in enumerate(corpus.records)
    ]
