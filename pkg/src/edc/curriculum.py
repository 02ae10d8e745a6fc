"""Per-epoch caption modification: probabilistic stopword removal.

Every caption owns a deterministic uniform stream derived from the
(seed, epoch, ordinal) triple, so outputs never depend on batch
membership, worker count, or iteration order. The draw discipline is
fixed for auditability: exactly one uniform per stopword token, in token
order, and none for non-stopwords. A stopword is removed when its
uniform falls strictly below 1 - level; non-stopwords always survive.
"""

from dataclasses import dataclass, replace
from typing import Sequence

from edc._backend import kernels
from edc.schedule import DifficultySchedule, difficulty
from edc.text import StopwordSet, TokenizedCaption

_U64_MAX = (1 << 64) - 1


class RngStream:
    """Deterministic 64-bit uniform stream (splitmix64).

    The sequence from a given initial state is fixed and
    platform-independent; uniforms lie in [0, 1) with 53-bit resolution.
    """

    __slots__ = ("state",)

    def __init__(self, state: int):
        if not 0 <= state <= _U64_MAX:
            raise ValueError(f"state must be an unsigned 64-bit integer, got {state!r}")
        self.state = state

    def next_uniform(self) -> float:
        self.state, u = kernels.next_uniform(self.state)
        return u

    def keep_mask(self, n: int, p_remove: float) -> bytes:
        """Consume ``n`` uniforms; byte i is 1 when decision i keeps."""
        self.state, mask = kernels.keep_mask(self.state, n, p_remove)
        return mask


def derive_stream(seed: int, epoch: int, ordinal: int) -> RngStream:
    """Independent stream for one caption at one epoch."""
    if not 0 <= seed <= _U64_MAX:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    if epoch < 0 or ordinal < 0:
        raise ValueError(f"epoch and ordinal must be >= 0, got ({epoch!r}, {ordinal!r})")
    return RngStream(kernels.stream_init(seed, epoch, ordinal))


@dataclass(frozen=True)
class TransformConfig:
    """Everything the transform needs besides the captions themselves."""

    seed: int
    schedule: DifficultySchedule
    stopwords: StopwordSet

    def __post_init__(self):
        if not 0 <= self.seed <= _U64_MAX:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


def apply_curriculum(caption: TokenizedCaption, level: float, rng) -> TokenizedCaption:
    """Remove stopwords from one classified caption at difficulty ``level``.

    Each stopword is dropped when the stream's next uniform is strictly
    below 1 - level, so level 1 is the identity (while still consuming
    one draw per stopword, keeping the stream position auditable).
    """
    if caption.stopword_mask is None:
        raise ValueError(
            f"caption {caption.source_id!r} is not classified; run classify() first"
        )
    if not 0.0 < level <= 1.0:
        raise ValueError(f"difficulty level must lie in (0, 1], got {level!r}")
    p_remove = 1.0 - level
    decisions = rng.keep_mask(sum(caption.stopword_mask), p_remove)
    tokens = []
    mask = []
    draw = 0
    for token, is_stop in zip(caption.tokens, caption.stopword_mask):
        if is_stop:
            keep = decisions[draw]
            draw += 1
            if not keep:
                continue
        tokens.append(token)
        mask.append(is_stop)
    return replace(caption, tokens=tuple(tokens), stopword_mask=tuple(mask))


def transform_batch(
    captions: Sequence[TokenizedCaption],
    epoch: int,
    config: TransformConfig,
) -> list[TokenizedCaption]:
    """Apply the curriculum to a batch, one derived stream per caption.

    Output order matches input order, and each caption's result is
    independent of how the corpus was partitioned into batches.
    """
    seen: set[int] = set()
    for caption in captions:
        if caption.ordinal in seen:
            raise ValueError(f"duplicate ordinal {caption.ordinal} in batch")
        seen.add(caption.ordinal)
    level = difficulty(config.schedule, epoch)
    return [
        apply_curriculum(c, level, derive_stream(config.seed, epoch, c.ordinal))
        for c in captions
    ]


def render(caption: TokenizedCaption) -> str:
    """Tokens joined by single spaces."""
    return " ".join(caption.tokens)
