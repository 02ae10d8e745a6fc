"""Dataloader-side client for the curriculum caption server."""

from edc_shim.client import (
    CurriculumClient,
    ServerError,
    set_epoch,
    start,
    stop,
    transform_targets,
)

__all__ = [
    "CurriculumClient",
    "ServerError",
    "set_epoch",
    "start",
    "stop",
    "transform_targets",
]

__version__ = "0.1.0"
