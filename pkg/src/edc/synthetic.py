"""Deterministic synthetic caption corpus for tests and benchmarks.

Captions are 8..20 tokens drawn from a fixed audio-scene vocabulary with
roughly 40% stopwords. Generation uses the package's own uniform streams
(one per caption), so the same seed reproduces the same corpus bytes on
any platform.
"""

from edc.corpus import CaptionRecord, Corpus
from edc.curriculum import derive_stream

DEFAULT_SEED = 0x5EED_CA97

# Content words stay disjoint from the stopword vocabulary; a test pins that.
CONTENT_WORDS = (
    "man", "woman", "child", "person", "crowd", "dog", "bird", "birds",
    "insects", "frogs", "horse", "cat", "engine", "car", "truck", "train",
    "motorcycle", "airplane", "helicopter", "boat", "water", "rain",
    "thunder", "wind", "waves", "stream", "river", "fire", "leaves",
    "gravel", "footsteps", "door", "gate", "bell", "bells", "alarm",
    "siren", "horn", "whistle", "music", "guitar", "piano", "drums",
    "speaking", "talking", "shouting", "laughing", "singing", "crying",
    "whispering", "barking", "chirping", "buzzing", "humming", "ringing",
    "banging", "knocking", "tapping", "clicking", "rattling", "rustling",
    "splashing", "dripping", "pouring", "flowing", "crackling", "roaring",
    "revving", "idling", "passing", "approaching", "fading", "echoing",
    "squeaking", "creaking", "slamming", "opening", "closing", "walking",
    "running", "playing", "working", "machine", "machinery", "factory",
    "street", "road", "traffic", "park", "forest", "field", "beach",
    "room", "hall", "kitchen", "church", "station", "market", "crowded",
    "distant", "loud", "quiet", "heavy", "light", "metal", "wooden",
    "glass", "plastic", "background", "foreground",
)

# Common function words used when a slot comes up as a stopword.
STOPWORD_CHOICES = (
    "a", "an", "the", "is", "are", "was", "in", "on", "at", "of", "and",
    "with", "as", "by", "for", "to", "from", "into", "over", "under",
    "through", "while", "then", "some", "it", "its", "there", "that",
    "this", "very", "be", "being", "before", "after", "again", "down",
    "up", "out", "off", "such",
)

MIN_TOKENS = 8
MAX_TOKENS = 20


def synthetic_corpus(
    n_captions: int = 1000,
    seed: int = DEFAULT_SEED,
    stopword_fraction: float = 0.4,
) -> Corpus:
    """Generate ``n_captions`` reproducible captions of 8..20 tokens."""
    span = MAX_TOKENS - MIN_TOKENS + 1
    records = []
    for i in range(n_captions):
        stream = derive_stream(seed, 0, i)
        length = MIN_TOKENS + int(stream.next_uniform() * span)
        tokens = []
        for _ in range(length):
            if stream.next_uniform() < stopword_fraction:
                pool = STOPWORD_CHOICES
            else:
                pool = CONTENT_WORDS
            tokens.append(pool[int(stream.next_uniform() * len(pool))])
        records.append(CaptionRecord(f"syn-{i:04d}", 0, " ".join(tokens)))
    return Corpus(records=tuple(records))
