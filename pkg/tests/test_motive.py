from itertools import product

import pytest
from hypothesis import given, strategies as st

from toric_motives.errors import BadBranchCount, CellularityNotCertified, HypothesisViolated, NonCellularInput
from toric_motives.fan import Fan
from toric_motives.homology import FGAbelianGroup, GradedGroups, Z, cellular_bm_homology, normalize_group
from toric_motives.io import motive_from_json, motive_to_json
from toric_motives.motive import (
    Motive,
    assemble_motive,
    cellular_motive,
    cofiber_diagnostic,
    curve_motive,
    is_pure_tate,
    surface_closed_form,
    surface_cofiber,
    toric_surface_report,
)

groups = st.builds(
    normalize_group, st.integers(0, 3), st.lists(st.integers(1, 12), max_size=2)
)
graded = st.builds(
    lambda gs: GradedGroups(6, dict(enumerate(gs))), st.lists(groups, min_size=7, max_size=7)
)


def test_canonical_text():
    m = Motive.of((Z, 2), (normalize_group(1, [2]), 1), (Z, 0), (FGAbelianGroup(2), 1, 1))
    assert str(m) == "Z + Z{1} + Z/2{1} + Z^2{1}[1] + Z{2}"
    assert str(Motive()) == "0"
    assert Motive.of((Z, 1)) + Motive.of((Z, 1)) == Motive.of((FGAbelianGroup(2), 1))


@given(graded)
def test_text_and_records_round_trip(h):
    try:
        m = assemble_motive(h)
    except HypothesisViolated:
        return
    assert Motive.parse(str(m)) == m
    assert Motive.from_records(m.to_records()) == m
    assert motive_from_json(motive_to_json(m)) == m


@given(graded)
def test_hypothesis_violation_exactly_when_expected(h):
    bad = [i for i in range(4) if not h[2 * i].is_free and not h[2 * i + 1].is_zero]
    if bad:
        with pytest.raises(HypothesisViolated) as exc:
            assemble_motive(h)
        assert exc.value.degree_index == bad[0]
    else:
        m = assemble_motive(h)
        for n in range(7):
            assert m.group(n // 2, n % 2) == h[n]


def test_assemble_of_cellular_is_cellular_motive():
    for length in range(1, 7):
        for counts in product(range(5), repeat=length):
            assert assemble_motive(cellular_bm_homology(counts)) == cellular_motive(counts)


@pytest.mark.parametrize(
    "branches, text",
    [([], "Z + Z{1}"), ([1], "Z + Z{1}"), ([2], "Z + Z[1] + Z{1}"), ([2, 2, 2], "Z + Z^3[1] + Z{1}"), ([3, 1], "Z + Z^2[1] + Z{1}")],
)
def test_curve_examples(branches, text):
    assert str(curve_motive(branches)) == text


@given(st.lists(st.integers(1, 6), max_size=6))
def test_curve_odd_rank(branches):
    m = curve_motive(branches)
    assert m.group(0, 1).free_rank == sum(branches) - len(branches)
    assert is_pure_tate(m) == all(b == 1 for b in branches)


def test_curve_rejects_zero_branches():
    with pytest.raises(BadBranchCount):
        curve_motive([2, 0])


def test_surface_report_examples():
    f = Fan.from_data(2, [(0, 1), (-2, -1), (2, -1)], [(0, 1), (1, 2), (0, 2)])
    rep = toric_surface_report(f)
    assert str(rep.motive) == "Z + Z{1} + Z/2{1} + Z{2}"
    assert not rep.pure_tate and not rep.compact_support
    assert rep.motive == surface_closed_form(3, 2)
    a = toric_surface_report(Fan.from_data(2, [(0, 1), (7, -1)], [(0, 1)]))
    assert str(a.motive) == "Z/7{1} + Z{2}" and a.label == "Mc"


def test_surface_not_certified_when_flag_denies():
    f = Fan.from_data(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [(0, 1), (2, 3)])
    with pytest.raises(CellularityNotCertified):
        toric_surface_report(f)
    with pytest.raises(CellularityNotCertified):
        toric_surface_report(Fan.from_data(2, [(0, 1), (3, -1)], [(0, 1)]), quasiprojective=False)


def test_cofiber_index2():
    rep = surface_cofiber(Fan.from_data(2, [(0, 1), (-2, -1), (2, -1)], [(0, 1), (1, 2), (0, 2)]))
    assert str(rep.source) == "Z^3 + Z^5{1}"
    assert str(rep.target) == "Z^4 + Z^6{1} + Z{2}"
    assert [(c.degree, c.min_rank, c.max_rank) for c in rep.constraints] == [(0, 3, 3), (2, 5, 5), (4, 0, 0)]
    assert rep.status == "presented, not resolved"


def test_cofiber_without_x_gives_ranges_and_rejects_non_cellular():
    e = cellular_bm_homology([2, 1])
    z = cellular_bm_homology([2])
    xt = cellular_bm_homology([1, 3, 1])
    rep = cofiber_diagnostic(e, z, xt)
    assert [(c.min_rank, c.max_rank) for c in rep.constraints] == [(0, 2), (0, 1), (0, 0)]
    with pytest.raises(NonCellularInput):
        cofiber_diagnostic(GradedGroups(2, {1: Z}), z, xt)
