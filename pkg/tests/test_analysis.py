from fractions import Fraction
from itertools import islice

import pytest

from baire_odometers.analysis import (
    audit_enumeration,
    bfs_oracle,
    distribution_test,
    enumerate_rationals,
    frequency_test,
    multiplicity_audit,
    stern,
    stern_oracle,
)
from baire_odometers.codecs import cf_decode
from baire_odometers.odometers import dyadic_step
from baire_odometers.word_actions import Policy, orbit
from baire_odometers.words import tail, word


class TestStern:
    def test_first_values(self):
        assert [stern(n) for n in range(16)] == [
            0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4]

    def test_recurrence(self):
        for n in range(1, 400):
            assert stern(2 * n) == stern(n)
            assert stern(2 * n + 1) == stern(n) + stern(n + 1)

    def test_consecutive_ratios_walk_calkin_wilf(self):
        # full-tree BFS: value at heap index n is s(n)/s(n+1)
        values = {1: Fraction(1, 1)}
        for n in range(1, 32):
            a, b = values[n].numerator, values[n].denominator
            values[2 * n] = Fraction(a, a + b)
            values[2 * n + 1] = Fraction(a + b, b)
        for n in range(1, 32):
            assert values[n] == Fraction(stern(n), stern(n + 1))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            stern(-1)


class TestEnumerateRationals:
    def test_bcf_prefix(self):
        assert list(enumerate_rationals("bcf", 6)) == [
            Fraction(0), Fraction(1, 2), Fraction(1, 3),
            Fraction(2, 3), Fraction(1, 4), Fraction(3, 5)]

    def test_dyadic_prefix(self):
        assert list(enumerate_rationals("dyadic", 7)) == [
            Fraction(1, 2), Fraction(1, 4), Fraction(3, 4), Fraction(1, 8),
            Fraction(5, 8), Fraction(3, 8), Fraction(7, 8)]

    def test_cf_prefix(self):
        assert list(enumerate_rationals("cf", 7)) == [
            Fraction(1, 2), Fraction(2, 3), Fraction(1, 3), Fraction(3, 5),
            Fraction(2, 5), Fraction(3, 4), Fraction(1, 4)]

    def test_bcf_offsets(self):
        from_zero = list(enumerate_rationals("bcf", 5, "zero"))
        from_root = list(enumerate_rationals("bcf", 5, "root"))
        assert from_zero[0] == 0
        assert from_root == from_zero[1:] + [Fraction(3, 5)]

    def test_offset_validation(self):
        with pytest.raises(ValueError):
            list(enumerate_rationals("cf", 3, "zero"))
        with pytest.raises(ValueError):
            list(enumerate_rationals("cf", 3, "middle"))
        with pytest.raises(ValueError):
            list(enumerate_rationals("kepler", 3))


class TestOracles:
    def test_bfs_matches_enumeration(self):
        for system in ("cf", "bcf", "dyadic"):
            enum = list(enumerate_rationals(system, 1 << 12, "root"))
            assert enum == list(bfs_oracle(system, 1 << 12))

    def test_stern_oracle_matches_bcf(self):
        assert list(stern_oracle(1 << 12)) == list(enumerate_rationals("bcf", 1 << 12))

    def test_oracle_values_distinct_and_interior(self):
        for system in ("cf", "bcf", "dyadic"):
            values = list(islice(bfs_oracle(system, 200), 200))
            assert all(0 < x < 1 for x in values)
            assert len(set(values)) == 200


class TestAudits:
    def test_enumerations_pass(self):
        for system in ("cf", "bcf", "dyadic"):
            report = audit_enumeration(system, 1000)
            assert report.ok, report
            assert report.first_collision is None
            assert report.order_violation is None

    def test_subtree_cf_orbit_has_no_duplicates(self):
        report = audit_enumeration("cf", 1 << 14)
        assert report.ok

    def test_multiplicity_structure(self):
        report = multiplicity_audit((1 << 6) - 3)
        assert report.ok
        assert report.levels == 6
        # levels 2..6 hold 2^(s-2) values each, plus the once-seen 1/2
        assert report.distinct == sum(1 << (s - 2) for s in range(3, 7)) + 1

    def test_multiplicity_twins_worked_example(self):
        walk = list(orbit(word((2,)), Policy.TOPDOWN, (1 << 4) - 3))
        two_thirds = [n for n, w in enumerate(walk) if cf_decode(w) == Fraction(2, 3)]
        one_third = [n for n, w in enumerate(walk) if cf_decode(w) == Fraction(1, 3)]
        assert [walk[n] for n in two_thirds] == [word((1, 1, 1)), word((1, 2))]
        assert [walk[n] for n in one_third] == [word((2, 1)), word((3,))]
        assert two_thirds[1] - two_thirds[0] == 2
        assert one_third[1] - one_third[0] == 2

    def test_multiplicity_count_validation(self):
        with pytest.raises(ValueError):
            multiplicity_audit(10)


class TestDistribution:
    def test_ks_small_against_minkowski(self):
        assert distribution_test(1 << 10, 256) < 0.01

    def test_ks_decreases_with_count(self):
        coarse = distribution_test(1 << 8, 128)
        fine = distribution_test(1 << 12, 128)
        assert fine <= coarse + 0.01

    def test_uniform_control_fails(self):
        assert distribution_test(1 << 10, 256, "uniform") > 0.1

    def test_reference_validation(self):
        with pytest.raises(ValueError):
            distribution_test(256, 64, "gaussian")


class TestFrequencies:
    def test_exact_dyadic_block_frequencies(self):
        freq = frequency_test(0, 1 << 10)
        for a in range(6):
            assert freq[a] == 2.0 ** (-a - 1)

    def test_floor_three(self):
        freq = frequency_test(3, 1 << 10)
        for a in range(3, 9):
            assert abs(freq[a] - 2.0 ** (-(a - 3) - 1)) < 0.01

    def test_binary_digit_balance(self):
        # along any 2^n consecutive steps, the first binary digit is 1 half the time
        w = tail((0, 1, 1, 0, 1), (0,))
        ones = 0
        for _ in range(1 << 8):
            ones += w.letter(1)
            w = dyadic_step(w)
        assert ones == 1 << 7
