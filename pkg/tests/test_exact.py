from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ohmgraph import exact

small = st.fractions(min_value=-9, max_value=9, max_denominator=7)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_to_fraction_parses_exact_forms():
    assert exact.to_fraction("-5/8") == F(-5, 8)
    assert exact.to_fraction("0.125") == F(1, 8)
    assert exact.to_fraction(3) == F(3)
    assert exact.to_fraction(" 7 ") == F(7)


def test_to_fraction_refuses_floats_and_junk():
    with pytest.raises(TypeError):
        exact.to_fraction(0.1)
    with pytest.raises(TypeError):
        exact.to_fraction(True)
    with pytest.raises(ValueError):
        exact.to_fraction("")
    with pytest.raises(ValueError):
        exact.to_fraction("one half")


def test_format_fraction():
    assert exact.format_fraction(F(6, 3)) == "2"
    assert exact.format_fraction(F(-3, 8)) == "-3/8"


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_det_matches_sympy(a):
    assert exact.det(a) == sympy.Matrix(a).det()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_is_multiplicative(ab):
    a, b = ab
    assert exact.det(exact.matmul(a, b)) == exact.det(a) * exact.det(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.lists(st.lists(small, min_size=5, max_size=5), min_size=r, max_size=r)))
def test_rank_matches_sympy(a):
    assert exact.rank(a) == sympy.Matrix(a).rank()


def test_bareiss_needs_a_row_swap():
    assert exact.bareiss_det([[0, 1], [1, 0]]) == -1
    assert exact.bareiss_det([[0, 0], [1, 0]]) == 0


def test_solve_and_inverse():
    a = [[F(2), F(1)], [F(1), F(3)]]
    inv = exact.inverse(a)
    assert exact.matmul(a, inv) == exact.identity(2)
    x = exact.solve(a, [[F(3)], [F(5)]])
    assert x == [[F(4, 5)], [F(7, 5)]]
    with pytest.raises(ZeroDivisionError):
        exact.solve([[F(1), F(2)], [F(2), F(4)]], [[F(1)], [F(1)]])


def test_in_column_span():
    cols = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    assert exact.in_column_span([F(2), F(3), F(5)], cols)
    assert not exact.in_column_span([F(0), F(0), F(1)], cols)
    assert exact.in_column_span([F(0), F(0), F(0)], [])
    assert not exact.in_column_span([F(1), F(0), F(0)], [])
