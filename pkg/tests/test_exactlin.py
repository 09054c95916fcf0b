from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcell import exactlin as el

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(rows=4, cols=4):
    return st.integers(1, rows).flatmap(
        lambda r: st.integers(1, cols).flatmap(
            lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_proportional_rows():
    rows, piv, rk = el.rref([[2, 4], [1, 2]])
    assert rk == 1 and piv == [0]
    assert rows[0] == [1, 2]


def test_rref_identity_fixed():
    ident = el.identity(3)
    rows, piv, rk = el.rref(ident)
    assert rows == ident and rk == 3


def test_rref_hand_reduced():
    rows, _, rk = el.rref([[1, 1], [1, -1]])
    assert rows == [[1, 0], [0, 1]] and rk == 2


def test_rational_canonical_form():
    q = el.rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert el.format_rational(F(0)) == "0/1"
    assert el.format_rational(F(-3, 2)) == "-3/2" and el.format_rational(2) == "2/1"
    assert el.rational(el.format_rational(F(7, 9))) == F(7, 9)


def test_membership_examples():
    S = el.Subspace(2, [[1, 2]])
    assert el.membership([0, 0], S) == [0]
    assert el.membership([1, 2], S) == [1]
    assert el.membership([1, 0], el.Subspace(2, [[1, 1]])) is None


def test_quotient_coords_examples():
    assert el.quotient_coords([3, 4], el.Subspace(2), [[1, 0], [0, 1]]) == [3, 4]
    S = el.Subspace(2, [[1, 1]])
    assert el.quotient_coords([2, 2], S, [[1, 0]]) == [0]
    assert el.quotient_coords([0, 1], S, [[1, 0]]) == [-1]


def test_coordinate_system_rejects_outside_span():
    cs = el.CoordinateSystem([[1, 0, 0], [0, 1, 1]], 3)
    assert cs.coords([2, 3, 3]) == [2, 3]
    with pytest.raises(el.NotInSpanError):
        cs.coords([0, 0, 1])


def test_nullspace_and_inverse():
    m = [[1, 2, 3], [2, 4, 6]]
    for v in el.nullspace(m):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(el.nullspace(m)) == 2
    a = [[2, 1], [1, 1]]
    assert el.matmul(a, el.inverse(a)) == el.identity(2)
    assert el.determinant(a) == 1


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    rows, piv, rk = el.rref(m)
    again = el.rref(rows)
    assert again[0] == rows and again[1] == piv and again[2] == rk


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(rationals, min_size=4, max_size=4))
def test_membership_certificate(m, coeffs):
    S = el.Subspace(len(m[0]), m)
    v = [sum((c * row[j] for c, row in zip(coeffs, m)), F(0)) for j in range(len(m[0]))]
    c = el.membership(v, S)
    assert c is not None
    assert [sum((a * row[j] for a, row in zip(c, S.basis_matrix)), F(0)) for j in range(S.ambient_rank)] == v


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3), rationals)
def test_quotient_coords_linear(u, v, c):
    S = el.Subspace(3, [[1, 1, 0]])
    lift = [[1, 0, 0], [0, 0, 1]]
    qu = el.quotient_coords(u, S, lift)
    qv = el.quotient_coords(v, S, lift)
    assert el.quotient_coords(el.add(u, v), S, lift) == el.add(qu, qv)
    assert el.quotient_coords(el.scale(c, u), S, lift) == el.scale(c, qu)
