"""Exact matrices over Q, Z/p and polynomial rings."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lib.algebra.arith import GF
from lib.algebra.exceptions import CannotCompleteError, InputError
from lib.algebra.linalg import (
    ExactMatrix,
    complete_to_invertible,
    determinant,
    echelon_form,
    jacobian,
    kernel_basis,
    minors,
    rank,
)
from lib.algebra.poly import RingContext, parse_poly

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(size):
    return st.lists(st.lists(entries, min_size=size, max_size=size), min_size=size, max_size=size)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(square))
def test_determinant_matches_sympy(rows):
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).det()
    assert determinant(ExactMatrix.from_rows(rows)) == Fraction(int(expected.p), int(expected.q))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(min_value=-2, max_value=2), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_sympy(rows):
    assert rank(ExactMatrix.from_rows(rows)) == sympy.Matrix(rows).rank()


def test_small_determinants():
    assert determinant(ExactMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert determinant(ExactMatrix.from_rows([['1/2', 1], [1, 3]])) == Fraction(1, 2)
    assert determinant(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert determinant(ExactMatrix.from_rows([[1, 2], [3, 4]], GF(7))) == 5
    with pytest.raises(InputError):
        determinant(ExactMatrix.from_rows([[1, 2, 3]]))


def test_rank_over_prime_field():
    rows = [[1, 2], [3, 6 + 7]]
    assert rank(ExactMatrix.from_rows(rows)) == 2
    assert rank(ExactMatrix.from_rows(rows, GF(7))) == 1


def test_echelon_form():
    rows, pivots = echelon_form(ExactMatrix.from_rows([[2, 4, 2], [1, 2, 3]]))
    assert pivots == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


def test_kernel_basis():
    basis = kernel_basis(ExactMatrix.from_rows([[1, 2, 3]]))
    assert basis == [(1, Fraction(-1, 2), 0), (1, 0, Fraction(-1, 3))]
    assert kernel_basis(ExactMatrix.identity(2)) == []


def test_complete_to_invertible():
    column = ExactMatrix.from_rows([[0], [1], [0]])
    completed = complete_to_invertible(column)
    assert completed.cols == 3
    assert completed.column(0) == (0, 1, 0)
    assert determinant(completed) != 0
    with pytest.raises(CannotCompleteError):
        complete_to_invertible(ExactMatrix.from_rows([[0], [0]]))


def test_minors_order():
    matrix = ExactMatrix.from_rows([[1, 0, 2], [0, 1, 3]])
    assert minors(matrix, 2) == [1, 3, -2]
    with pytest.raises(InputError):
        minors(matrix, 3)


def test_polynomial_matrices():
    R = RingContext(('x', 'y', 'z', 'w'))
    matrix = ExactMatrix.from_polynomial_rows([[R.var('x'), R.var('y')], [R.var('z'), R.var('w')]], R)
    assert determinant(matrix) == parse_poly('x*w - y*z', R)
    assert determinant(matrix.evaluate([1, 2, 3, 4])) == -2


def test_jacobian():
    R = RingContext(('x', 'y', 'z'))
    jac = jacobian([parse_poly('x^2 + y*z', R), parse_poly('x - z', R)])
    assert (jac.rows, jac.cols) == (2, 3)
    assert jac.row(0) == (parse_poly('2*x', R), R.var('z'), R.var('y'))
    assert jac.evaluate([1, 1, 1]).row(1) == (1, 0, -1)
