"""Wall-clock and operation-count comparison of nth-term strategies."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .binet import DEFAULT_PRECISION, binet_lucas, binet_trib
from .core import SequenceKind, lucas_trib, trib
from .counters import OpCounter
from .errors import StrategyMismatch
from .matrices import lucas_fast, trib_fast


def _run_iterate(kind, n, precision, counter):
    fn = trib if kind is SequenceKind.TRIBONACCI else lucas_trib
    return fn(n, counter=counter)


def _run_matpow(kind, n, precision, counter):
    fn = trib_fast if kind is SequenceKind.TRIBONACCI else lucas_fast
    return fn(n, counter=counter)


def _run_binet(kind, n, precision, counter):
    fn = binet_trib if kind is SequenceKind.TRIBONACCI else binet_lucas
    return fn(n, precision)


# name -> callable(kind, n, precision, counter) -> int
STRATEGIES = {
    "iterate": _run_iterate,
    "matpow": _run_matpow,
    "binet": _run_binet,
}


@dataclass(frozen=True)
class BenchResult:
    """One timed run; op counts reflect big-integer work only."""

    strategy: str
    kind: SequenceKind
    n: int
    elapsed_s: float
    big_adds: int
    big_muls: int
    mat_muls: int
    precision: int | None = None  # set for precision-dependent strategies


def run_bench(kind: SequenceKind, ns: list[int], strategies: list[str],
              precision: int = DEFAULT_PRECISION) -> list[BenchResult]:
    """Benchmark each strategy at each index.

    Per index: every strategy runs once as a warm-up and the warm-up
    values must agree (StrategyMismatch otherwise); each strategy is
    then timed on a second run with a fresh operation counter.  Process
    startup never lands inside the timed region.
    """
    unknown = [s for s in strategies if s not in STRATEGIES]
    if unknown:
        raise ValueError(f"unknown strategies: {', '.join(unknown)}")
    if not strategies:
        raise ValueError("no strategies selected")
    results = []
    for n in ns:
        warm = {name: STRATEGIES[name](kind, n, precision, None)
                for name in strategies}
        if len(set(warm.values())) > 1:
            details = ", ".join(
                f"{name}={value}" for name, value in sorted(warm.items()))
            raise StrategyMismatch(
                f"strategies disagree at {kind.value}({n}): {details}")
        for name in strategies:
            counter = OpCounter()
            start = time.perf_counter()
            STRATEGIES[name](kind, n, precision, counter)
            elapsed = time.perf_counter() - start
            results.append(BenchResult(
                strategy=name, kind=kind, n=n, elapsed_s=elapsed,
                big_adds=counter.big_adds, big_muls=counter.big_muls,
                mat_muls=counter.mat_muls,
                precision=precision if name == "binet" else None))
    return results
