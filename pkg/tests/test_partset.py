"""Residue-spec validation and part-set enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partlab.partset import (
    A_PLUS,
    ALL_NATURALS,
    FULL_A,
    R_PLUS,
    ArPlus,
    Explicit,
    SpecError,
    contains,
    make_residue_spec,
    parts_up_to,
)


def spec_strategy(m_max=8, allow_empty=True):
    def build(m, bits):
        lo = 0 if allow_empty else 1
        bits = max(bits, lo)
        return make_residue_spec(m, [r for r in range(m) if bits >> r & 1])

    return st.integers(1, m_max).flatmap(
        lambda m: st.builds(build, st.just(m), st.integers(0, 2**m - 1))
    )


class TestMakeResidueSpec:
    def test_basic(self):
        spec = make_residue_spec(4, [1, 3])
        assert spec.m == 4
        assert spec.residues == (1, 3)
        assert spec.rsize == 2

    def test_classical_case(self):
        spec = make_residue_spec(1, [0])
        assert (spec.m, spec.residues) == (1, (0,))

    def test_sorts_input(self):
        assert make_residue_spec(5, [4, 0, 2]).residues == (0, 2, 4)

    def test_empty_residues_allowed(self):
        assert make_residue_spec(3, []).rsize == 0

    @pytest.mark.parametrize(
        "m,residues",
        [(3, [5]), (3, [-1]), (0, [0]), (-2, [0]), (4, [1, 1]), (2, [0, 2])],
    )
    def test_rejects_bad_specs(self, m, residues):
        with pytest.raises(SpecError):
            make_residue_spec(m, residues)


class TestPartsUpTo:
    def test_odd_parts(self):
        spec = make_residue_spec(2, [1])
        assert parts_up_to(spec, FULL_A, 7) == [1, 3, 5, 7]
        assert parts_up_to(spec, A_PLUS, 7) == [3, 5, 7]

    def test_modulus_one_tail_is_everything(self):
        spec = make_residue_spec(1, [0])
        assert parts_up_to(spec, A_PLUS, 4) == [1, 2, 3, 4]
        assert parts_up_to(spec, FULL_A, 4) == [1, 2, 3, 4]

    def test_rplus_drops_zero(self):
        spec = make_residue_spec(4, [0, 1, 3])
        assert parts_up_to(spec, R_PLUS, 10) == [1, 3]
        assert parts_up_to(spec, R_PLUS, 0) == []

    def test_single_residue_slice(self):
        spec = make_residue_spec(4, [1, 3])
        assert parts_up_to(spec, ArPlus(1), 14) == [5, 9, 13]
        assert parts_up_to(spec, ArPlus(3), 14) == [7, 11]
        with pytest.raises(SpecError):
            parts_up_to(spec, ArPlus(4), 14)

    def test_explicit_and_naturals(self):
        spec = make_residue_spec(2, [1])
        assert parts_up_to(spec, Explicit((9, 2, 5)), 6) == [2, 5]
        assert parts_up_to(spec, ALL_NATURALS, 4) == [1, 2, 3, 4]
        with pytest.raises(SpecError):
            Explicit((2, 2))
        with pytest.raises(SpecError):
            Explicit((0,))

    def test_empty_residues_enumerate_nothing(self):
        spec = make_residue_spec(3, [])
        assert parts_up_to(spec, FULL_A, 20) == []
        assert parts_up_to(spec, A_PLUS, 20) == []


class TestContains:
    @pytest.mark.parametrize(
        "m,residues,variant,a,expected",
        [
            (4, [1, 3], A_PLUS, 4, False),
            (4, [0], A_PLUS, 4, True),
            (4, [1], FULL_A, 1, True),
            (4, [1], A_PLUS, 1, False),
            (4, [0, 1], R_PLUS, 1, True),
            (4, [0, 1], R_PLUS, 4, False),
        ],
    )
    def test_membership(self, m, residues, variant, a, expected):
        assert contains(make_residue_spec(m, residues), variant, a) is expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            contains(make_residue_spec(2, [1]), FULL_A, 0)


@given(spec=spec_strategy(), bound=st.integers(0, 80))
@settings(max_examples=150)
def test_full_set_splits_into_head_and_tail(spec, bound):
    """The full set is the disjoint union of the tail set and the head parts."""
    full = parts_up_to(spec, FULL_A, bound)
    tail = parts_up_to(spec, A_PLUS, bound)
    head = parts_up_to(spec, R_PLUS, bound)
    assert set(tail) | set(head) == set(full)
    assert set(tail) & set(head) == set()


@given(spec=spec_strategy(), bound=st.integers(0, 80))
@settings(max_examples=150)
def test_tail_set_splits_into_residue_slices(spec, bound):
    """The tail set partitions into its single-residue slices."""
    tail = parts_up_to(spec, A_PLUS, bound)
    slices = [parts_up_to(spec, ArPlus(r), bound) for r in spec.residues]
    combined = [a for sl in slices for a in sl]
    assert sorted(combined) == tail
    assert len(combined) == len(set(combined))


@given(spec=spec_strategy(), bound=st.integers(0, 80))
@settings(max_examples=150)
def test_tail_members_at_least_m_in_class(spec, bound):
    for a in parts_up_to(spec, A_PLUS, bound):
        assert a >= spec.m
        assert a % spec.m in spec.residues
        assert contains(spec, A_PLUS, a)


@given(m=st.integers(1, 8), bound=st.integers(0, 60))
@settings(max_examples=60)
def test_zero_residue_makes_full_equal_tail(m, bound):
    """With R = {0} there are no head parts, so the full and tail sets agree."""
    spec = make_residue_spec(m, [0])
    assert parts_up_to(spec, FULL_A, bound) == parts_up_to(spec, A_PLUS, bound)


@given(spec=spec_strategy(), bound=st.integers(0, 60))
@settings(max_examples=100)
def test_enumeration_matches_membership(spec, bound):
    for variant in (FULL_A, A_PLUS, R_PLUS):
        members = parts_up_to(spec, variant, bound)
        assert members == sorted(set(members))
        expected = [a for a in range(1, bound + 1) if contains(spec, variant, a)]
        assert members == expected
