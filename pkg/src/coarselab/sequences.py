"""Eventually periodic integer sequences and their summability calculus.

A sequence is stored as a finite core with a declared start index plus a
period repeating to each side, and is total on the integers (one-sided data
is represented with a zero tail on the unused side).  The calculus decides
membership in the subgroup of sequences with uniformly bounded partial sums
exactly: a side is bounded if and only if its period sums to zero, and the
certificate is either the exact bound or a witness window whose partial sum
grows past any candidate bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .errors import InvalidInputError

Side = Literal["left", "right", "both"]


class EventuallyPeriodicSequence:
    """A bounded integer sequence with periodic tails on both sides.

    ``core`` covers indices ``core_start .. core_start + len(core) - 1``;
    to the right the ``right_period`` repeats (phase anchored at the core
    end), to the left the ``left_period`` repeats (phase anchored at the
    core start, read rightward: index core_start - 1 takes the period's last
    entry).  Empty periods denote a zero tail.
    """

    __slots__ = ("core", "core_start", "left_period", "right_period")

    def __init__(self, core: Iterable[int], core_start: int = 0,
                 left_period: Iterable[int] = (), right_period: Iterable[int] = ()):
        self.core = tuple(int(x) for x in core)
        self.core_start = int(core_start)
        self.left_period = tuple(int(x) for x in left_period) or (0,)
        self.right_period = tuple(int(x) for x in right_period) or (0,)
        if not self.core:
            self.core = (0,)

    @classmethod
    def constant(cls, value: int) -> "EventuallyPeriodicSequence":
        return cls([value], 0, [value], [value])

    @classmethod
    def delta(cls, index: int = 0, value: int = 1) -> "EventuallyPeriodicSequence":
        return cls([value], index)

    @property
    def core_end(self) -> int:
        """First index past the core."""
        return self.core_start + len(self.core)

    def __getitem__(self, i: int) -> int:
        if self.core_start <= i < self.core_end:
            return self.core[i - self.core_start]
        if i >= self.core_end:
            return self.right_period[(i - self.core_end) % len(self.right_period)]
        return self.left_period[(i - self.core_start) % len(self.left_period)]

    def values(self, lo: int, hi: int) -> list[int]:
        """Values on lo..hi-1."""
        return [self[i] for i in range(lo, hi)]

    def values_array(self, lo: int, hi: int):
        """Values on lo..hi-1 as an int64 numpy array (fast path for long scans)."""
        import numpy as np

        idx = np.arange(lo, hi, dtype=np.int64)
        out = np.empty(idx.shape, dtype=np.int64)
        left = idx < self.core_start
        right = idx >= self.core_end
        mid = ~(left | right)
        if left.any():
            lp = np.asarray(self.left_period, dtype=np.int64)
            out[left] = lp[(idx[left] - self.core_start) % len(lp)]
        if right.any():
            rp = np.asarray(self.right_period, dtype=np.int64)
            out[right] = rp[(idx[right] - self.core_end) % len(rp)]
        if mid.any():
            core = np.asarray(self.core, dtype=np.int64)
            out[mid] = core[idx[mid] - self.core_start]
        return out

    def bound(self) -> int:
        return max(
            max((abs(x) for x in self.core), default=0),
            max(abs(x) for x in self.left_period),
            max(abs(x) for x in self.right_period),
        )

    def is_constant(self) -> bool:
        v = self.core[0]
        return (all(x == v for x in self.core)
                and all(x == v for x in self.left_period)
                and all(x == v for x in self.right_period))

    def shifted(self, offset: int) -> "EventuallyPeriodicSequence":
        """The reindexed sequence with value self[i - offset] at i."""
        s = EventuallyPeriodicSequence.__new__(EventuallyPeriodicSequence)
        s.core = self.core
        s.core_start = self.core_start + offset
        s.left_period = self.left_period
        s.right_period = self.right_period
        return s

    def _binary(self, other: "EventuallyPeriodicSequence", op) -> "EventuallyPeriodicSequence":
        lo = min(self.core_start, other.core_start)
        hi = max(self.core_end, other.core_end)
        lperiod = math.lcm(len(self.left_period), len(other.left_period))
        rperiod = math.lcm(len(self.right_period), len(other.right_period))
        core = [op(self[i], other[i]) for i in range(lo, hi)]
        left = [op(self[i], other[i]) for i in range(lo - lperiod, lo)]
        right = [op(self[i], other[i]) for i in range(hi, hi + rperiod)]
        return EventuallyPeriodicSequence(core, lo, left, right)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return EventuallyPeriodicSequence(
            [-x for x in self.core], self.core_start,
            [-x for x in self.left_period], [-x for x in self.right_period],
        )

    def values_equal(self, other: "EventuallyPeriodicSequence") -> bool:
        """Exact pointwise equality, decided on a finite comparison window.

        Agreement on one full lcm-period beyond both cores propagates to all
        indices, so the check below is complete.
        """
        lo = min(self.core_start, other.core_start)
        hi = max(self.core_end, other.core_end)
        lspan = math.lcm(len(self.left_period), len(other.left_period))
        rspan = math.lcm(len(self.right_period), len(other.right_period))
        return all(self[i] == other[i] for i in range(lo - lspan, hi + rspan))

    def __eq__(self, other):
        if not isinstance(other, EventuallyPeriodicSequence):
            return NotImplemented
        return self.values_equal(other)

    def __hash__(self):
        return hash((self.core, self.core_start))

    def __repr__(self):
        return (f"EventuallyPeriodicSequence(core={list(self.core)}, "
                f"core_start={self.core_start}, left={list(self.left_period)}, "
                f"right={list(self.right_period)})")


@dataclass
class SummabilityCertificate:
    """Witness attached to a partial-sum boundedness decision.

    When the sequence is summable, ``bound`` is the exact supremum of the
    relevant partial-sum magnitudes from ``start_index``.  When it is not,
    ``witness_length`` and ``witness_value`` describe a window whose partial
    sum already exceeds twice the core contribution, and ``growth_per_period``
    is the nonzero period sum driving the linear escape.
    """

    in_s: bool
    side: Side
    start_index: int
    bound: int | None = None
    witness_length: int | None = None
    witness_value: int | None = None
    growth_per_period: int | None = None


def _directional_sums(seq: EventuallyPeriodicSequence, start: int,
                      direction: int) -> tuple[bool, int | None, tuple]:
    """Boundedness of partial sums from ``start`` in the given direction.

    Bounded iff the tail period in that direction sums to zero; then the
    exact bound is realized within the core plus one full period.
    """
    period = seq.right_period if direction > 0 else seq.left_period
    period_sum = sum(period)
    core_span = max(seq.core_end - start, start - seq.core_start + 1, 1)
    horizon = core_span + len(period)
    running, worst = 0, 0
    for n in range(horizon):
        running += seq[start + direction * n]
        worst = max(worst, abs(running))
    if period_sum == 0:
        return True, worst, ()
    # keep extending until the escape dwarfs the core contribution
    target = 2 * worst + 2 * abs(period_sum) + 1
    n = horizon
    while abs(running) < target:
        running += seq[start + direction * n]
        n += 1
    return False, None, (n, running, period_sum)


def in_S(seq: EventuallyPeriodicSequence, side: Side = "both",
         start_index: int | None = None) -> SummabilityCertificate:
    """Decide uniform boundedness of partial sums on the requested side(s).

    The decision is exact for eventually periodic sequences: a side is
    bounded iff its period sums to zero (the choice of start index does not
    affect the verdict, only the bound).
    """
    if side not in ("left", "right", "both"):
        raise InvalidInputError(f"unknown side {side!r}")
    start = seq.core_start if start_index is None else int(start_index)
    bound = 0
    for direction in ((1,) if side == "right" else (-1,) if side == "left" else (1, -1)):
        ok, worst, witness = _directional_sums(seq, start, direction)
        if not ok:
            n, value, per = witness
            return SummabilityCertificate(
                False, side, start,
                witness_length=n, witness_value=value, growth_per_period=per,
            )
        bound += worst
    return SummabilityCertificate(True, side, start, bound=bound)


def shift_kernel_check(seq: EventuallyPeriodicSequence) -> bool:
    """Whether the sequence is fixed by the shift, i.e. constant.

    Fixed points of the coordinate shift on two-sided bounded integer
    sequences are exactly the constants (the rank-one kernel behind the
    odd K-group of the line model).
    """
    return seq.is_constant()


@dataclass(frozen=True)
class K0LineClassInvariant:
    """Tail densities classifying a 0-chain on the line or half-line.

    Two eventually periodic chains lie in the same class exactly when their
    densities agree on every present side; the left density is absent for
    half-line data.
    """

    right_density: Fraction
    left_density: Fraction | None = None

    def is_zero_class(self) -> bool:
        return self.right_density == 0 and (self.left_density in (None, 0))


def sequence_class_invariant(seq: EventuallyPeriodicSequence,
                             half_line: bool = False) -> K0LineClassInvariant:
    """Density invariant (period sum / period length) of each tail."""
    right = Fraction(sum(seq.right_period), len(seq.right_period))
    if half_line:
        return K0LineClassInvariant(right_density=right)
    left = Fraction(sum(seq.left_period), len(seq.left_period))
    return K0LineClassInvariant(right_density=right, left_density=left)


def same_class(a: EventuallyPeriodicSequence, b: EventuallyPeriodicSequence,
               half_line: bool = False) -> bool:
    """Whether a - b has uniformly bounded partial sums on the relevant sides."""
    side: Side = "right" if half_line else "both"
    return in_S(a - b, side).in_s
