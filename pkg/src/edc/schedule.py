"""Difficulty scheduling: maps a training epoch to a difficulty level.

The level rises exponentially from a floor toward (but never reaching) 1:

    raw(epoch)   = 1 - exp(-alpha * epoch)
    level(epoch) = max(floor, raw(epoch))

``alpha`` sets how fast targets approach their unmodified form; the floor
keeps the earliest epochs from degenerating to near-empty targets. A level
of 1 means captions pass through untouched.
"""

import math
from dataclasses import dataclass

DEFAULT_FLOOR = 0.05

# Hand-picked rates for the three standard training lengths. Any other
# length solves alpha so the final epoch lands at 1 - _TARGET_RESIDUAL.
_ALPHA_PRESETS = {30: 0.20, 60: 0.10, 100: 0.05}
_TARGET_RESIDUAL = 0.005


@dataclass(frozen=True)
class DifficultySchedule:
    """Exponential difficulty curve over epochs 0..max_epoch.

    ``alpha`` must be positive, ``floor`` in (0, 1). ``max_epoch`` bounds
    table sweeps only; :func:`difficulty` itself accepts any epoch >= 0.
    """

    alpha: float
    max_epoch: int
    floor: float = DEFAULT_FLOOR

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"alpha must be a positive finite number, got {self.alpha!r}")
        if not (0.0 < self.floor < 1.0):
            raise ValueError(f"floor must lie strictly between 0 and 1, got {self.floor!r}")
        if self.max_epoch < 0:
            raise ValueError(f"max_epoch must be >= 0, got {self.max_epoch!r}")

    @classmethod
    def for_max_epoch(cls, max_epoch: int, floor: float = DEFAULT_FLOOR) -> "DifficultySchedule":
        """Schedule whose rate is resolved from the training length."""
        return cls(alpha=alpha_for_max_epoch(max_epoch), max_epoch=max_epoch, floor=floor)


def difficulty(schedule: DifficultySchedule, epoch: int) -> float:
    """Difficulty level at ``epoch``: max(floor, 1 - exp(-alpha * epoch)).

    Non-decreasing in epoch, and strictly increasing once above the floor.
    Mathematically the value stays below 1; in float arithmetic it
    saturates to exactly 1.0 once alpha*epoch is large enough, which
    downstream consumers treat as "leave captions untouched".
    """
    if epoch < 0:
        raise ValueError(f"epoch must be >= 0, got {epoch!r}")
    raw = 1.0 - math.exp(-schedule.alpha * epoch)
    return raw if raw > schedule.floor else schedule.floor


def alpha_for_max_epoch(max_epoch: int) -> float:
    """Rate for a given training length.

    The three standard lengths use their preset rates; any other length
    solves 1 - exp(-alpha * max_epoch) = 1 - _TARGET_RESIDUAL so the
    curve still ends within half a percent of 1.
    """
    if max_epoch < 1:
        raise ValueError(f"max_epoch must be >= 1, got {max_epoch!r}")
    preset = _ALPHA_PRESETS.get(max_epoch)
    if preset is not None:
        return preset
    return -math.log(_TARGET_RESIDUAL) / max_epoch


def schedule_table(schedule: DifficultySchedule) -> list[tuple[int, float]]:
    """(epoch, difficulty) pairs for epochs 0..max_epoch inclusive."""
    return [(epoch, difficulty(schedule, epoch)) for epoch in range(schedule.max_epoch + 1)]
