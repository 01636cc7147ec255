import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import cf_value, gcd_of_minors
from toric_motives.errors import BadParameters, RankMismatch, ZeroVector
from toric_motives.lattice import (
    complete_basis,
    det2,
    determinant,
    format_vector,
    hj_expand,
    hj_value,
    invariant_factors,
    kernel_basis,
    primitive,
    smith_decomposition,
    smith_normal_form,
    span_basis,
)

vec2 = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def test_primitive_examples():
    assert primitive((2, 4)) == (1, 2)
    assert primitive((-3, 0)) == (-1, 0)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


@given(vec2.filter(any))
def test_primitive_idempotent(v):
    p = primitive(v)
    assert primitive(p) == p
    assert gcd(*p) == 1


def test_det2_examples():
    assert det2((1, 0), (0, 1)) == 1
    assert det2((0, 1), (2, -1)) == -2
    assert det2((1, -1), (2, -1)) == 1
    with pytest.raises(RankMismatch):
        det2((1, 0, 0), (0, 1))


@given(vec2, vec2)
def test_det2_antisymmetric(a, b):
    assert det2(a, b) == -det2(b, a)
    assert det2(a, a) == 0


def test_smith_examples():
    assert smith_normal_form([(1, 0), (0, 1)]).diag == (1, 1)
    s = smith_normal_form([(0, 1), (-2, -1), (2, -1)])
    assert s.diag == (1, 2) and s.rank == 2
    for d in range(1, 12):
        assert smith_normal_form([(0, 1), (d, -1)]).diag == (1, d)


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@given(st.lists(st.tuples(*[st.integers(-9, 9)] * 3), min_size=1, max_size=5))
def test_smith_decomposition_is_a_factorization(rows):
    d, u, v = smith_decomposition(rows)
    assert _mul(_mul(u, rows), v) == d
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
    diag = smith_normal_form(rows).diag
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(st.lists(vec2, min_size=2, max_size=6))
def test_smith_product_matches_minor_gcd(rows):
    s = smith_normal_form(rows)
    g = gcd_of_minors(rows, 2)
    if s.rank == 2:
        assert s.diag[0] * s.diag[1] == g
    else:
        assert g == 0


def test_smith_matches_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = random.Random(7)
    for _ in range(60):
        rows = [[rng.randint(-12, 12) for _ in range(3)] for _ in range(rng.randint(2, 4))]
        ours = [x for x in smith_normal_form(rows).diag if x]
        theirs = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        k = min(theirs.shape)
        theirs = sorted(abs(int(theirs[i, i])) for i in range(k) if theirs[i, i] != 0)
        assert sorted(ours) == theirs


def test_hj_examples():
    assert hj_expand(2, 1) == [2]
    assert hj_expand(5, 3) == [2, 3]
    assert hj_expand(7, 1) == [7]
    for bad in ((1, 1), (5, 0), (6, 4), (4, 5)):
        with pytest.raises(BadParameters):
            hj_expand(*bad)


def test_hj_roundtrip_exhaustive():
    for d in range(2, 51):
        for k in range(1, d):
            if gcd(d, k) == 1:
                cf = hj_expand(d, k)
                assert all(a >= 2 for a in cf)
                assert cf_value(cf) == hj_value(cf) == Fraction(d, k)


def test_kernel_and_span_are_saturated():
    assert kernel_basis([(2, 4, 0)], 3) and all(gcd(*v) == 1 for v in kernel_basis([(2, 4, 0)], 3))
    b = span_basis([(2, 0, 0), (0, 2, 0)], 3)
    assert len(b) == 2 and smith_normal_form(b).diag == (1, 1)
    full = complete_basis(b, 3)
    assert abs(determinant(full)) == 1 and full[:2] == b


def test_invariant_factors():
    assert invariant_factors([4, 6]) == (2, 12)
    assert invariant_factors([1, 1]) == ()
    assert invariant_factors([2, 2]) == (2, 2)


def test_format_vector():
    assert format_vector((1, -2, 0)) == "e1-2e2"
    assert format_vector((0, 0, 1)) == "e3"
    assert format_vector((0, 0)) == "0"
