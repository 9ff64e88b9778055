"""Adjoint pairs, synthesis, fixed points and the structural law report.

The multiplicity-pattern fixtures are built by the conftest oracle, so
every frozen value here is independent of the package's own model code.
"""

import pytest
from hypothesis import given, settings

from conftest import (
    chain_lattice,
    connections,
    diamond,
    matrix_connection,
    monotone_maps,
)
from stonekit import (
    AbsenceWitness,
    AdjunctionFailure,
    FixedPointSublattices,
    GaloisConnection,
    MonotoneMap,
    NotMonotone,
    ShapeMismatch,
    boolean_lattice,
    detects,
    fixed_points,
    is_adjoint_pair,
    is_join_preserving,
    is_meet_preserving,
    lower_adjoint,
    separates,
    sublattice,
    upper_adjoint,
    verify_prop26,
)

TWO_OVER_ONE = ((1, 1),)          # one source summand hitting two targets
ONE_OVER_TWO = ((1,), (1,))       # two source summands onto one target
CROSSED = ((1, 0), (0, 1), (1, 1))
OVERLAPPED = ((1, 0, 1, 1), (0, 1, 1, 1))


class TestMonotoneMap:
    def test_rejects_order_violation(self):
        lat = chain_lattice(2)
        with pytest.raises(NotMonotone) as ei:
            MonotoneMap(lat, lat, (1, 0))
        assert ei.value.witness == (0, 1)

    def test_rejects_wrong_arity(self):
        with pytest.raises(ShapeMismatch):
            MonotoneMap(chain_lattice(2), chain_lattice(2), (0,))

    def test_rejects_out_of_range_value(self):
        with pytest.raises(ShapeMismatch):
            MonotoneMap(chain_lattice(2), chain_lattice(2), (0, 5))

    def test_compose(self):
        lat = chain_lattice(3)
        f = MonotoneMap(lat, lat, (0, 0, 2))
        assert f.compose(f).values == (0, 0, 2)


class TestAdjointPair:
    def test_identity_pair(self):
        lat = diamond()
        ident = MonotoneMap.identity(lat)
        assert is_adjoint_pair(ident, ident)

    def test_constant_top_against_identity_fails(self):
        lat = chain_lattice(2)
        const_top = MonotoneMap(lat, lat, (1, 1))
        assert not is_adjoint_pair(const_top, MonotoneMap.identity(lat))

    def test_shape_gate(self):
        with pytest.raises(ShapeMismatch):
            is_adjoint_pair(
                MonotoneMap.identity(chain_lattice(2)),
                MonotoneMap.identity(chain_lattice(3)),
            )

    def test_one_summand_hitting_two(self):
        gc = matrix_connection(TWO_OVER_ONE)
        assert is_adjoint_pair(gc.lower, gc.upper)
        b = gc.lattice_b
        r = gc.upper.values
        # both singleton targets restrict to nothing; the full set to all
        assert b.labels[0b01] == 1  # sanity on label encoding
        assert gc.lattice_a.labels[r[b.index_of_label(0b01)]] == 0
        assert gc.lattice_a.labels[r[b.index_of_label(0b10)]] == 0
        assert gc.lattice_a.labels[r[b.index_of_label(0b11)]] == 1

    def test_upper_of_that_pair_breaks_joins(self):
        gc = matrix_connection(TWO_OVER_ONE)
        assert is_meet_preserving(gc.upper)
        assert not is_join_preserving(gc.upper)


class TestSynthesis:
    def test_two_summands_onto_one(self):
        gc = matrix_connection(ONE_OVER_TWO)
        a, b = gc.lattice_a, gc.lattice_b
        i = gc.lower.values
        assert a.labels[0b01] == 1
        assert b.labels[i[a.index_of_label(0b01)]] == 1
        assert b.labels[i[a.index_of_label(0b10)]] == 1
        synth = upper_adjoint(gc.lower)
        assert isinstance(synth, MonotoneMap)
        assert synth.values == gc.upper.values
        assert a.labels[synth.values[b.index_of_label(0b1)]] == 0b11

    def test_identity_synthesis(self):
        lat = diamond()
        synth = upper_adjoint(MonotoneMap.identity(lat))
        assert synth.values == tuple(range(lat.n))

    def test_join_breaking_map_has_no_upper(self):
        lat = diamond()
        squash = MonotoneMap(lat, lat, (0, 1, 1, 3))
        out = upper_adjoint(squash)
        assert isinstance(out, AbsenceWitness)
        x, y = out.x, out.y
        assert lat.leq(squash.values[x], y) != lat.leq(x, out.candidate.values[y])

    def test_lower_recovers_induction(self):
        gc = matrix_connection(TWO_OVER_ONE)
        synth = lower_adjoint(gc.upper)
        assert isinstance(synth, MonotoneMap)
        assert synth.values == gc.lower.values

    def test_constant_top_upper_gives_constant_bottom_lower(self):
        a, b = diamond(), chain_lattice(2)
        const_top = MonotoneMap(b, a, (a.top, a.top))
        synth = lower_adjoint(const_top)
        assert isinstance(synth, MonotoneMap)
        assert set(synth.values) == {b.bottom}

    def test_meet_escaping_insertion_has_no_lower(self):
        # induced ideals of the overlapped pattern inside the 4-cube;
        # the meet of the two middles lands outside the four
        amb = boolean_lattice(4)
        ind = sublattice(
            amb,
            [0, amb.index_of_label(0b1101), amb.index_of_label(0b1110), amb.top],
        )
        insertion = MonotoneMap(
            ind, amb, tuple(ind.labels)
        )
        out = lower_adjoint(insertion)
        assert isinstance(out, AbsenceWitness)

    @settings(max_examples=150)
    @given(monotone_maps())
    def test_upper_exists_iff_joins_preserved(self, f):
        out = upper_adjoint(f)
        assert isinstance(out, MonotoneMap) == is_join_preserving(f)

    @settings(max_examples=150)
    @given(monotone_maps())
    def test_round_trip_when_adjoint_exists(self, f):
        r = upper_adjoint(f)
        if isinstance(r, AbsenceWitness):
            return
        again = lower_adjoint(r)
        assert isinstance(again, MonotoneMap)
        assert again.values == f.values


class TestConnectionConstruction:
    def test_post_init_rejects_non_adjoint(self):
        lat = chain_lattice(2)
        with pytest.raises(AdjunctionFailure) as ei:
            GaloisConnection(
                MonotoneMap(lat, lat, (1, 1)), MonotoneMap.identity(lat)
            )
        assert ei.value.witness is not None

    def test_from_lower_rejects_join_breaker(self):
        lat = diamond()
        with pytest.raises(AdjunctionFailure):
            GaloisConnection.from_lower(MonotoneMap(lat, lat, (0, 1, 1, 3)))

    def test_from_upper(self):
        gc = matrix_connection(CROSSED)
        rebuilt = GaloisConnection.from_upper(gc.upper)
        assert rebuilt.lower.values == gc.lower.values


class TestFixedPoints:
    def test_crossed_pattern_restricted_set(self):
        gc = matrix_connection(CROSSED)
        fp = fixed_points(gc)
        a, b = gc.lattice_a, gc.lattice_b
        assert {a.labels[x] for x in fp.restricted} == {0b000, 0b001, 0b010, 0b111}
        assert {b.labels[y] for y in fp.induced} == {0b00, 0b01, 0b10, 0b11}

    def test_identity_fixes_everything(self):
        lat = diamond()
        gc = GaloisConnection.from_lower(MonotoneMap.identity(lat))
        fp = fixed_points(gc)
        assert fp.restricted == fp.induced == tuple(range(lat.n))

    def test_overlapped_pattern_all_sources_restricted(self):
        gc = matrix_connection(OVERLAPPED)
        fp = fixed_points(gc)
        assert len(fp.restricted) == gc.lattice_a.n == 4

    def test_tampered_sets_rejected(self):
        gc = matrix_connection(CROSSED)
        fp = fixed_points(gc)
        with pytest.raises(AdjunctionFailure):
            FixedPointSublattices(gc, fp.restricted[1:], fp.induced)


class TestLawReport:
    @pytest.mark.parametrize(
        "mult", [TWO_OVER_ONE, ONE_OVER_TWO, CROSSED, OVERLAPPED]
    )
    def test_all_laws_hold_on_pattern_fixtures(self, mult):
        report = verify_prop26(matrix_connection(mult))
        assert report.all_ok, [k for k, v in report.items() if not v]

    def test_identity_connection(self):
        gc = GaloisConnection.from_lower(MonotoneMap.identity(diamond()))
        assert verify_prop26(gc).all_ok

    @settings(max_examples=150)
    @given(connections())
    def test_all_laws_hold_on_synthesized_connections(self, gc):
        report = verify_prop26(gc)
        assert report.all_ok, [k for k, v in report.items() if not v]

    @settings(max_examples=100)
    @given(connections())
    def test_closure_and_kernel_operators(self, gc):
        a, b = gc.lattice_a, gc.lattice_b
        ri = gc.closure_values()
        ir = gc.kernel_values()
        for x in range(a.n):
            assert a.leq(x, ri[x])
            assert ri[ri[x]] == ri[x]
        for y in range(b.n):
            assert b.leq(ir[y], y)
            assert ir[ir[y]] == ir[y]


class TestSeparationAndDetection:
    def test_doubly_covering_pattern(self):
        # r sends both singletons to bottom, so detection fails with
        # separation; in the pattern model the two predicates coincide
        gc = matrix_connection(((1, 1), (1, 1)))
        assert not separates(gc)
        assert not detects(gc)

    def test_crossed_pattern_separates(self):
        gc = matrix_connection(CROSSED)
        assert separates(gc) and detects(gc)

    def test_one_summand_hitting_two(self):
        gc = matrix_connection(TWO_OVER_ONE)
        assert not detects(gc)
        assert not separates(gc)

    def test_detection_without_separation(self):
        # bottom segment of a longer chain: r folds the top two levels
        a, b = chain_lattice(2), chain_lattice(3)
        gc = GaloisConnection.from_lower(MonotoneMap(a, b, (0, 1)))
        assert detects(gc)
        assert not separates(gc)

    @settings(max_examples=150)
    @given(connections())
    def test_characterizations_agree_everywhere(self, gc):
        # both predicates cross-check the definitional and the
        # fixed-point characterizations internally
        detects(gc)
        separates(gc)
