"""Caption tokenization and the stopword vocabulary.

Normalization is deliberately simple: captions are plain English
sentences, so tokens are the whitespace-delimited chunks, lowercased,
with punctuation stripped from the edges only. Interior punctuation
(hyphens, apostrophes) survives, which also lets contracted stopwords
like "don't" match the vocabulary.
"""

import os
from dataclasses import dataclass, replace
from importlib import resources

_EDGE_PUNCT = ".,!?;:'\"()-"

_VENDORED_FILE = "stopwords_en.txt"
VENDORED_STOPWORDS_TAG = "nltk-english-179"


@dataclass(frozen=True)
class StopwordSet:
    """Immutable vocabulary of removable function words."""

    words: frozenset[str]
    version_tag: str

    def __post_init__(self):
        if not self.words:
            raise ValueError("stopword set must not be empty")
        bad = [w for w in self.words if not w or w != w.lower() or w.split() != [w]]
        if bad:
            raise ValueError(f"stopwords must be lowercase and whitespace-free: {sorted(bad)[:5]}")

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class TokenizedCaption:
    """Ordered token sequence, optionally classified against a stopword set.

    ``stopword_mask`` is None until :func:`classify` fills it; afterwards
    mask[i] is True exactly when tokens[i] is in the vocabulary.
    ``ordinal`` is the caption's stable position within its corpus.
    """

    tokens: tuple[str, ...]
    stopword_mask: tuple[bool, ...] | None = None
    source_id: str = ""
    ordinal: int = 0

    def __post_init__(self):
        if self.stopword_mask is not None and len(self.stopword_mask) != len(self.tokens):
            raise ValueError(
                f"stopword_mask length {len(self.stopword_mask)} != token count {len(self.tokens)}"
            )
        if self.ordinal < 0:
            raise ValueError(f"ordinal must be >= 0, got {self.ordinal!r}")


def tokenize(text: str, source_id: str = "", ordinal: int = 0) -> TokenizedCaption:
    """Split ``text`` into normalized tokens (mask left unfilled).

    Lowercases, strips leading/trailing punctuation from each chunk, and
    drops chunks that become empty. Word order is preserved.
    """
    tokens = []
    for chunk in text.split():
        word = chunk.lower().strip(_EDGE_PUNCT)
        if word:
            tokens.append(word)
    return TokenizedCaption(tokens=tuple(tokens), source_id=source_id, ordinal=ordinal)


def classify(caption: TokenizedCaption, sw: StopwordSet) -> TokenizedCaption:
    """Fill the stopword mask; tokens are never altered. Idempotent."""
    mask = tuple(token in sw.words for token in caption.tokens)
    return replace(caption, stopword_mask=mask)


def _parse_stopword_lines(lines, origin: str) -> frozenset[str]:
    words = set()
    for line_num, line in enumerate(lines, start=1):
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        word = word.lower()
        if word.split() != [word]:
            raise ValueError(f"{origin}: line {line_num}: stopword contains whitespace: {word!r}")
        words.add(word)
    if not words:
        raise ValueError(f"{origin}: no stopwords found")
    return frozenset(words)


def load_stopwords(path: str | os.PathLike | None = None) -> StopwordSet:
    """Load a stopword vocabulary.

    With no path, returns the vendored snapshot. Otherwise reads a UTF-8
    file with one word per line ('#' comments allowed), lowercased and
    deduplicated; an empty result is an error.
    """
    if path is None:
        data = resources.files("edc.data").joinpath(_VENDORED_FILE).read_text(encoding="utf-8")
        words = _parse_stopword_lines(data.splitlines(), _VENDORED_FILE)
        return StopwordSet(words=words, version_tag=VENDORED_STOPWORDS_TAG)
    with open(path, encoding="utf-8") as fh:
        words = _parse_stopword_lines(fh, str(path))
    return StopwordSet(words=words, version_tag=f"file:{os.path.basename(str(path))}")
