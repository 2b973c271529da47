"""Exact Tribonacci and Tribonacci-Lucas numbers for all integer indices.

Both sequences obey s(n) = s(n-1) + s(n-2) + s(n-3).  The Tribonacci
seeds are T(0)=0, T(1)=1, T(2)=1 (A000073, shifted) and the
Tribonacci-Lucas seeds are K(0)=3, K(1)=1, K(2)=3 (A001644).  Negative
indices are reached by running the recurrence backwards,
s(n) = s(n+3) - s(n+2) - s(n+1), so every evaluator here accepts any
signed index and all downstream identity checks can sweep signed ranges.

All arithmetic is on Python ints; results are exact at every index.
"""

from __future__ import annotations

import threading
from enum import Enum

from .counters import OpCounter
from .errors import DivisibilityViolation


class SequenceKind(Enum):
    """The two scalar sequences."""

    TRIBONACCI = "T"
    TRIBONACCI_LUCAS = "K"


class Conversion(Enum):
    """The three ways to assemble K(n) from nearby Tribonacci terms."""

    A = "A"  # K(n) = 3*T(n+1) - 2*T(n) - T(n-1)
    B = "B"  # K(n) = T(n) + 2*T(n-1) + 3*T(n-2)
    C = "C"  # K(n) = 4*T(n+1) - T(n) - T(n+2)


SEEDS: dict[SequenceKind, tuple[int, int, int]] = {
    SequenceKind.TRIBONACCI: (0, 1, 1),
    SequenceKind.TRIBONACCI_LUCAS: (3, 1, 3),
}


class TermCache:
    """Growing contiguous window of one sequence's terms.

    The window covers [lo, hi] and only ever extends; a value, once
    stored, is never rewritten.  Extension is serialized by a lock, so a
    shared instance behaves as if all calls executed in some order.
    """

    def __init__(self, kind: SequenceKind):
        self.kind = kind
        self._fwd = list(SEEDS[kind])  # values at indices 0, 1, 2, ...
        self._bwd: list[int] = []      # values at indices -1, -2, ...
        self._lock = threading.Lock()

    @property
    def lo(self) -> int:
        return -len(self._bwd)

    @property
    def hi(self) -> int:
        return len(self._fwd) - 1

    def values(self) -> list[int]:
        """Stored terms for indices lo..hi, in index order."""
        return list(reversed(self._bwd)) + list(self._fwd)

    def get(self, n: int) -> int:
        """Term at index n, extending the window as needed."""
        if n >= 0:
            fwd = self._fwd
            if n < len(fwd):
                return fwd[n]
            with self._lock:
                while n >= len(fwd):
                    fwd.append(fwd[-1] + fwd[-2] + fwd[-3])
            return fwd[n]
        bwd = self._bwd
        if -n <= len(bwd):
            return bwd[-n - 1]
        with self._lock:
            while -n > len(bwd):
                k = len(bwd) + 1  # next backward index is -k
                bwd.append(self._at(3 - k) - self._at(2 - k) - self._at(1 - k))
        return bwd[-n - 1]

    def _at(self, i: int) -> int:
        return self._fwd[i] if i >= 0 else self._bwd[-i - 1]


def _stateless(kind: SequenceKind, n: int, counter: OpCounter | None) -> int:
    # window (s(i), s(i+1), s(i+2)) slid from i = 0
    a, b, c = SEEDS[kind]
    if n >= 0:
        if n == 0:
            return a
        if n == 1:
            return b
        for _ in range(n - 2):
            a, b, c = b, c, a + b + c
        if counter is not None:
            counter.big_adds += 2 * (n - 2)
        return c
    for _ in range(-n):
        a, b, c = c - b - a, a, b
    if counter is not None:
        counter.big_adds += 2 * (-n)
    return a


def trib(n: int, cache: TermCache | None = None,
         counter: OpCounter | None = None) -> int:
    """Tribonacci number T(n), exact for any integer n.

    Stateless by default; pass a ``TermCache`` to memoize across calls
    (identical results either way).
    """
    if cache is not None:
        if cache.kind is not SequenceKind.TRIBONACCI:
            raise ValueError("cache holds the wrong sequence")
        return cache.get(n)
    return _stateless(SequenceKind.TRIBONACCI, n, counter)


def lucas_trib(n: int, cache: TermCache | None = None,
               counter: OpCounter | None = None) -> int:
    """Tribonacci-Lucas number K(n), exact for any integer n."""
    if cache is not None:
        if cache.kind is not SequenceKind.TRIBONACCI_LUCAS:
            raise ValueError("cache holds the wrong sequence")
        return cache.get(n)
    return _stateless(SequenceKind.TRIBONACCI_LUCAS, n, counter)


_ALT_SEEDS = (0, 1, 1, 2)  # T(0)..T(3)


def trib_alt(n: int) -> int:
    """T(n) via the shift form T(n) = 2*T(n-1) - T(n-4).

    Slides a four-term window from the seeds (backwards via
    T(n) = 2*T(n+3) - T(n+4) for n < 0).  Deliberately independent of
    trib(), so agreement between the two is a meaningful cross-check.
    """
    if 0 <= n <= 3:
        return _ALT_SEEDS[n]
    a, b, c, d = _ALT_SEEDS  # window (T(i), T(i+1), T(i+2), T(i+3)), i = 0
    if n > 3:
        for _ in range(n - 3):
            a, b, c, d = b, c, d, 2 * d - a
        return d
    for _ in range(-n):
        a, b, c, d = 2 * c - d, a, b, c
    return a


def lucas_from_trib(n: int, variant: Conversion,
                    cache: TermCache | None = None) -> int:
    """K(n) assembled from Tribonacci terms.

    All three variants agree with lucas_trib at every integer n.
    """
    def t(i: int) -> int:
        return trib(i, cache)

    if variant is Conversion.A:
        return 3 * t(n + 1) - 2 * t(n) - t(n - 1)
    if variant is Conversion.B:
        return t(n) + 2 * t(n - 1) + 3 * t(n - 2)
    if variant is Conversion.C:
        return 4 * t(n + 1) - t(n) - t(n + 2)
    raise ValueError(f"unknown conversion variant: {variant!r}")


def trib_from_lucas(n: int, cache: TermCache | None = None) -> int:
    """T(n) recovered as (K(n) + 5*K(n-1) + 2*K(n+1)) / 22.

    The division is exact for every integer n; a nonzero remainder would
    mean a broken evaluator, so it raises rather than truncating.
    """
    s = (lucas_trib(n, cache) + 5 * lucas_trib(n - 1, cache)
         + 2 * lucas_trib(n + 1, cache))
    q, r = divmod(s, 22)
    if r:
        raise DivisibilityViolation(f"22 does not divide {s} at n={n}")
    return q
