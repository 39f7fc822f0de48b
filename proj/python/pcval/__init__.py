"""Valuations attached to pseudo-convergent sequences over rational-exponent series fields."""

from ._core import (
    ParseError,
    PoleError,
    PreconditionError,
    RunResult,
    __version__,
    commands,
    equivalent,
    fixtures,
    member,
    profile,
    rank,
    run,
    sequence_spec,
    val,
    ve,
    we,
)

__all__ = [
    "ParseError",
    "PoleError",
    "PreconditionError",
    "RunResult",
    "__version__",
    "commands",
    "equivalent",
    "fixtures",
    "member",
    "profile",
    "rank",
    "run",
    "sequence_spec",
    "val",
    "ve",
    "we",
]
