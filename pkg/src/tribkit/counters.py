"""Operation counters used to compare evaluation strategies."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCounter:
    """Tallies of arbitrary-precision arithmetic operations.

    Evaluators that accept a counter credit it with the big-integer
    additions/multiplications they actually perform and with whole 3x3
    matrix products; index bookkeeping on machine ints is never counted.
    """

    big_adds: int = 0
    big_muls: int = 0
    mat_muls: int = 0
