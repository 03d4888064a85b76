import pytest

from rigged.configuration import ZERO, AdmissibilityError, Configuration, enumerate_configurations, weight
from rigged.moves import (
    FreeParticle,
    MoveError,
    build_free_configuration,
    free_particle,
    highest_particle,
    left_move,
    left_sweeps,
    lowest_particle,
    move_all,
    move_cth,
    particle_positions,
    pass_particle,
    passing_history,
    right_move,
    separate_highest,
)
from rigged.phases import phase


def cfg(*counts, offset=0):
    return Configuration(offset, counts)


def weight_classes(k, N, l):
    """Boundary-N configurations of weight exactly l."""
    return [a for a in enumerate_configurations(k, 3, N) if weight(a, k) == l]


class TestSightings:
    def test_highest_examples(self):
        assert highest_particle(cfg(3, 0, 0, 1), 3, 3).position == 0
        assert highest_particle(cfg(1, 2, 1, 1), 5, 3).position == 1
        assert highest_particle(ZERO, 3, 2) is None

    def test_kind_prefers_s(self):
        # At (3,0,0,1) with k=l=3 both functionals saturate at column 0.
        sight = highest_particle(cfg(3, 0, 0, 1), 3, 3)
        assert sight.kind == "S"

    def test_weight_above_cap_rejected(self):
        with pytest.raises(AdmissibilityError):
            highest_particle(cfg(3, 0, 0, 1), 3, 2)

    def test_lowest(self):
        assert lowest_particle(cfg(1, 1, 1, 1, 2), 4, 3).position == 2


class TestElementaryMoves:
    def test_right_move_chain(self):
        chain = [cfg(3, 0, 0, 1)]
        for _ in range(6):
            chain.append(right_move(chain[-1], 3, 3))
        assert chain == [
            cfg(3, 0, 0, 1),
            cfg(2, 1, 0, 1),
            cfg(1, 2, 0, 1),
            cfg(1, 1, 1, 1),
            cfg(1, 0, 2, 1),
            cfg(1, 0, 1, 2),
            cfg(1, 0, 0, 3),
        ]

    def test_right_move_free_particle(self):
        assert right_move(cfg(2), 2, 2) == cfg(1, 1)

    def test_right_move_display(self):
        assert right_move(cfg(1, 2, 1, 1), 5, 3) == cfg(1, 1, 2, 1)

    def test_left_move_examples(self):
        assert left_move(cfg(2, 1, 0, 1), 3, 3) == cfg(3, 0, 0, 1)
        assert left_move(cfg(0, 3), 3, 3) == cfg(1, 2)
        assert left_move(cfg(1, 1, 1, 1, 2), 4, 3) == cfg(1, 1, 2, 0, 2)

    def test_move_requires_exact_weight(self):
        with pytest.raises(MoveError):
            right_move(ZERO, 3, 2)
        with pytest.raises(MoveError):
            right_move(cfg(1), 3, 2)

    def test_energy_and_length_bookkeeping(self):
        for k, l in ((2, 1), (2, 2), (3, 2), (3, 3)):
            for a in weight_classes(k, 4, l):
                b = right_move(a, k, l)
                assert b.energy() == a.energy() + 1
                assert b.length() == a.length()
                assert weight(b, k) == l
                c = left_move(a, k, l)
                assert c.energy() == a.energy() - 1
                assert weight(c, k) == l

    def test_single_particle_inverse(self):
        for k, l in ((2, 2), (3, 3), (3, 2)):
            for a in weight_classes(k, 4, l):
                if len(particle_positions(a, k, l)) == 1:
                    assert left_move(right_move(a, k, l), k, l) == a


class TestPositions:
    def test_examples(self):
        assert particle_positions(cfg(3, 0, 0, 1), 3, 3) == [0]
        assert particle_positions(cfg(1, 0, 0, 1), 1, 1) == [3, 0]
        assert particle_positions(ZERO, 2, 1, "left") == []

    def test_sides_same_count(self):
        for k, l in ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3)):
            for a in weight_classes(k, 5, l):
                right = particle_positions(a, k, l, "right")
                left = particle_positions(a, k, l, "left")
                assert len(right) == len(left)
                assert right == sorted(right, reverse=True)
                assert left == sorted(left)

    def test_left_positions_match_swept_right_positions(self):
        # After one full right sweep, the left procedure sees the columns the
        # right procedure saw before the sweep.
        for k, l in ((2, 2), (3, 2), (3, 3)):
            for a in weight_classes(k, 5, l):
                right = particle_positions(a, k, l, "right")
                swept = move_all(a, k, l, "right")
                assert set(particle_positions(swept, k, l, "left")) == set(right)

    def test_sweeps_invert(self):
        for k, l in ((2, 2), (3, 2), (3, 3)):
            for a in weight_classes(k, 5, l):
                assert move_all(move_all(a, k, l, "right"), k, l, "left") == a

    def test_left_sweeps_match_move_all(self):
        for k, l in ((2, 2), (3, 3)):
            for a in weight_classes(k, 5, l):
                m = len(particle_positions(a, k, l))
                assert left_sweeps(a, k, l, 2, expected=m) == move_all(a, k, l, "left", 2)


class TestMoveCth:
    def test_examples(self):
        a = cfg(1, 0, 0, 1)
        first = move_cth(a, 1, 1, 1, "right")
        assert first == cfg(1, 0, 0, 0, 1)
        assert move_cth(first, 1, 1, 2, "right") == cfg(0, 1, 0, 0, 1)
        assert move_cth(cfg(3, 0, 0, 1), 3, 3, 1, "right") == cfg(2, 1, 0, 1)

    def test_too_few_particles(self):
        with pytest.raises(MoveError):
            move_cth(cfg(3, 0, 0, 1), 3, 3, 2, "right")

    def test_out_of_order_move_detected(self):
        # Moving the second particle before the first violates the composite
        # order here: (1,0,0,1) at k=1 cannot become (0,1,0,1).
        with pytest.raises(MoveError):
            move_cth(cfg(1, 0, 0, 1), 1, 1, 2, "right")

    def test_interleaving_powers(self):
        # (M^(c))^s ... (M^(1))^s agrees with the s-th power of one sweep.
        for k, l in ((2, 2), (3, 3)):
            for a in weight_classes(k, 4, l):
                m = len(particle_positions(a, k, l))
                if m < 2:
                    continue
                for s in (1, 2, 3, 4):
                    staged = a
                    for c in range(1, m + 1):
                        for _ in range(s):
                            staged = move_cth(staged, k, l, c, "right")
                    assert staged == move_all(a, k, l, "right", s)


class TestSeparation:
    def test_showcase(self):
        sep = separate_highest(cfg(3, 0, 0, 1), 3, 3)
        assert sep.steps == 4
        assert (sep.free.position, sep.free.upper_count, sep.free.energy) == (2, 2, 7)
        assert sep.surplus == 3
        assert sep.remainder == cfg(1)

    def test_already_free(self):
        sep = separate_highest(cfg(0, 3), 3, 3)
        assert sep.steps == 0
        assert (sep.free.position, sep.free.upper_count, sep.free.energy) == (1, 3, 3)
        assert sep.surplus == 3
        assert sep.remainder == ZERO

    def test_worked_chain(self):
        # One right move frees the weight-3 particle of (1,2,1,1) at level 5;
        # the surplus already equals its final value.
        sep = separate_highest(cfg(1, 2, 1, 1), 5, 3)
        assert sep.steps == 1
        assert (sep.free.position, sep.free.upper_count, sep.free.energy) == (2, 2, 7)
        assert sep.surplus == 6
        assert sep.remainder == cfg(1, 1)

    def test_surplus_stable_past_first_freedom(self):
        for k, l in ((2, 2), (3, 3), (3, 2)):
            for a in weight_classes(k, 4, l):
                sep = separate_highest(a, k, l)
                cur = a
                for t in range(sep.steps):
                    cur = right_move(cur, k, l)
                for extra in range(1, 4):
                    cur = right_move(cur, k, l)
                    fp = free_particle(cur, k, l)
                    assert fp is not None
                    assert fp.energy - (sep.steps + extra) == sep.surplus

    def test_zero_rejected(self):
        with pytest.raises(MoveError):
            separate_highest(ZERO, 2, 1)


class TestFreeConfigurations:
    def test_single_particle_examples(self):
        assert build_free_configuration(3, [9], 3) == cfg(3, offset=3)
        assert build_free_configuration(2, [5], 3) == cfg(1, 1, offset=2)

    def test_boundary_spacing(self):
        assert build_free_configuration(1, [3, 0], 1) == cfg(1, 0, 0, 1)

    def test_spacing_violation(self):
        with pytest.raises(ValueError):
            build_free_configuration(1, [2, 0], 1)

    def test_energy_decomposition(self):
        fp = FreeParticle(3, 2, 3)
        assert fp.energy == 3 * 2 + 4 * 1

    def test_invalid_upper_count(self):
        with pytest.raises(ValueError):
            FreeParticle(3, 0, 3)


class TestPassing:
    def test_worked_example_level_four(self):
        a = cfg(1, 1, 1)
        nodes, result = passing_history(a, 4, 3)
        assert result == Configuration(2, (1, 0, 2))
        shown = [(kind, pos, c) for kind, pos, c in nodes if pos <= 3]
        assert shown == [
            ("S", 3, cfg(1, 1, 1, 0, 3)),
            ("L", 2, cfg(1, 1, 1, 1, 2)),
            ("S", 1, cfg(1, 1, 2, 0, 2)),
            ("S", 0, cfg(1, 2, 1, 0, 2)),
            ("S", -1, cfg(3, 0, 1, 0, 2)),
        ]

    def test_worked_example_level_five(self):
        result = pass_particle(cfg(1, 2, 1, 1), 5, 4)
        assert result == Configuration(3, (2, 1, 2))

    def test_zero_passes_to_zero(self):
        assert pass_particle(ZERO, 4, 3) == ZERO

    def test_rejects_heavy_input(self):
        with pytest.raises(AdmissibilityError):
            pass_particle(cfg(1, 2), 4, 3)

    def test_heaviest_probe_is_triple_shift(self):
        for k in (2, 3, 4):
            for a in enumerate_configurations(k, 3, 4):
                if weight(a, k) >= k:
                    continue
                assert pass_particle(a, k, k) == a.shifted(3)

    def test_light_probe_is_double_shift(self):
        # When probe and cargo weights fit inside the level together, passing
        # is a plain two-column shift.
        for k, l in ((4, 2), (5, 2), (5, 3)):
            for a in enumerate_configurations(k, 3, 4):
                if weight(a, k) >= min(l, k - l + 1):
                    continue
                assert pass_particle(a, k, l) == a.shifted(2)

    def test_commutes_with_right_move(self):
        for k, l in ((3, 2), (3, 3), (4, 3)):
            for a in enumerate_configurations(k, 3, 4):
                w = weight(a, k)
                if a.is_zero or w >= l:
                    continue
                assert pass_particle(right_move(a, k, w), k, l) == right_move(
                    pass_particle(a, k, l), k, w
                )

    def test_two_free_particles_shift_by_phase(self):
        # A light particle at the bottom gains exactly the phase shift when a
        # heavy one overtakes it.
        for k, l, lp in ((4, 3, 2), (4, 3, 1), (5, 4, 3), (3, 3, 1)):
            for c_light in range(1, lp + 1):
                light = build_free_configuration(lp, [c_light], k)
                start = light.superposed(Configuration(12, (l,)))
                cur = start
                for _ in range(l * 20):
                    cur = left_move(cur, k, l)
                top = cur.support_max
                upper = cur.restricted(lo=top - 1)
                assert upper.length() == lp
                assert upper.energy() == light.energy() + phase(k, l, lp)
