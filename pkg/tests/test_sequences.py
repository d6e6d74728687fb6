import numpy as np
import pytest
from fractions import Fraction

from coarselab.errors import InvalidInputError
from coarselab.sequences import (
    EventuallyPeriodicSequence as Seq,
    in_S,
    same_class,
    sequence_class_invariant,
    shift_kernel_check,
)

HORIZON = 10_000


def brute_force_bounded(seq, side, start=None, horizon=HORIZON):
    """Observed-growth oracle: partial sums over `horizon` terms are declared
    bounded when the running maximum stops increasing in the second half."""
    start = seq.core_start if start is None else start
    directions = {"right": (1,), "left": (-1,), "both": (1, -1)}[side]
    for direction in directions:
        vals = seq.values_array(start, start + direction * horizon)[::1 if direction > 0 else 1]
        if direction < 0:
            vals = seq.values_array(start - horizon + 1, start + 1)[::-1]
        sums = np.abs(np.cumsum(vals))
        first = sums[: horizon // 2].max()
        if sums.max() > first:
            return False
    return True


def random_sequence(rng) -> Seq:
    def chunk(max_len, min_len=1):
        n = int(rng.integers(min_len, max_len + 1))
        return [int(x) for x in rng.integers(-5, 6, size=n)]

    return Seq(chunk(8), int(rng.integers(-4, 5)), chunk(8), chunk(8))


class TestEvaluation:
    def test_core_and_tails(self):
        s = Seq([7, 8], core_start=3, left_period=[1, 2], right_period=[9])
        assert [s[i] for i in range(0, 8)] == [2, 1, 2, 7, 8, 9, 9, 9]

    def test_values_array_matches_getitem(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            s = random_sequence(rng)
            lo, hi = -37, 41
            assert list(s.values_array(lo, hi)) == [s[i] for i in range(lo, hi)]

    def test_arithmetic_pointwise(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            a, b = random_sequence(rng), random_sequence(rng)
            c = a - b
            for i in range(-30, 30):
                assert c[i] == a[i] - b[i]

    def test_shift(self):
        s = Seq([1, 2, 3], core_start=0)
        t = s.shifted(5)
        assert all(t[i + 5] == s[i] for i in range(-10, 10))

    def test_equality_across_representations(self):
        a = Seq([1, 2, 1, 2], core_start=0, right_period=[1, 2], left_period=[2, 1])
        b = Seq([1, 2], core_start=0, right_period=[1, 2], left_period=[2, 1])
        assert a == b
        assert a != Seq([1, 2], core_start=0, right_period=[2, 1], left_period=[2, 1])


class TestInS:
    def test_half_line_delta(self):
        cert = in_S(Seq.delta(0), "right", start_index=0)
        assert cert.in_s
        assert cert.bound == 1

    def test_constant_one_unbounded(self):
        cert = in_S(Seq.constant(1), "both")
        assert not cert.in_s
        assert cert.growth_per_period == 1
        assert abs(cert.witness_value) > 2

    def test_alternating_bounded_by_one(self):
        s = Seq([1, -1], 0, [1, -1], [1, -1])
        cert = in_S(s, "both")
        assert cert.in_s
        # brute force over 10^4 indices confirms the bound
        sums = np.cumsum(s.values_array(0, HORIZON))
        assert np.abs(sums).max() == 1
        assert cert.bound >= 1

    def test_bad_side(self):
        with pytest.raises(InvalidInputError):
            in_S(Seq.delta(), "up")

    def test_agrees_with_brute_force_oracle(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            s = random_sequence(rng)
            for side in ("left", "right", "both"):
                assert in_S(s, side).in_s == brute_force_bounded(s, side), (s, side)

    def test_bound_certificate_is_exact_supremum(self):
        rng = np.random.default_rng(3)
        checked = 0
        while checked < 50:
            s = random_sequence(rng)
            cert = in_S(s, "right")
            if not cert.in_s:
                continue
            vals = s.values_array(s.core_start, s.core_start + HORIZON)
            assert np.abs(np.cumsum(vals)).max() == cert.bound
            checked += 1


class TestShiftKernel:
    def test_constant(self):
        assert shift_kernel_check(Seq.constant(5))

    def test_delta(self):
        assert not shift_kernel_check(Seq.delta())

    def test_period_two(self):
        assert not shift_kernel_check(Seq([1, 2], 0, [1, 2], [1, 2]))


class TestClassInvariant:
    def test_fundamental_class_of_line(self):
        inv = sequence_class_invariant(Seq.constant(1))
        assert inv.right_density == 1 and inv.left_density == 1
        assert not inv.is_zero_class()

    def test_delta_on_half_line(self):
        inv = sequence_class_invariant(Seq.delta(0), half_line=True)
        assert inv.right_density == 0
        assert inv.left_density is None
        assert inv.is_zero_class()

    def test_balanced_period(self):
        s = Seq([2, -1, -1], 0, [2, -1, -1], [2, -1, -1])
        inv = sequence_class_invariant(s)
        assert inv.right_density == inv.left_density == 0
        assert inv.is_zero_class()
        sums = np.cumsum(s.values_array(0, HORIZON))
        assert np.abs(sums).max() <= 2

    def test_density_values(self):
        s = Seq([0], 0, [1, 1], [1, 2])
        inv = sequence_class_invariant(s)
        assert inv.right_density == Fraction(3, 2)
        assert inv.left_density == 1

    def test_same_class_iff_difference_in_s(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            a, b = random_sequence(rng), random_sequence(rng)
            expected = brute_force_bounded(a - b, "both")
            assert same_class(a, b) == expected
            inv_match = sequence_class_invariant(a) == sequence_class_invariant(b)
            assert same_class(a, b) == inv_match
