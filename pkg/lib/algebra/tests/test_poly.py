"""Polynomial rings, orders, parsing and printing."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from lib.algebra.arith import GF, QQ
from lib.algebra.exceptions import PolynomialSyntaxError, RingMismatchError, UnknownVariableError
from lib.algebra.poly import (
    DEGREVLEX,
    LEX,
    Comparison,
    MonomialOrder,
    RingContext,
    compare_monomials,
    elimination_ring,
    format_poly,
    multidegree,
    normalize_juxtaposed,
    parse_poly,
    projective_ring,
)

R = RingContext(('x', 'y', 'z'))

monomials = st.tuples(*[st.integers(min_value=0, max_value=4)] * 3)
coefficients = st.fractions(max_denominator=9).filter(lambda c: abs(c.numerator) < 100)
polynomials = st.dictionaries(monomials, coefficients, max_size=6).map(R.from_dict)


def test_parse_and_print():
    f = parse_poly('x^2*y - 3/2*z + 1', R)
    assert f.coefficient((2, 1, 0)) == 1
    assert f.coefficient((0, 0, 1)) == Fraction(-3, 2)
    assert str(f) == 'x^2*y - 3/2*z + 1'


def test_parse_handles_parentheses_and_signs():
    f = parse_poly('-(x + y)*(x + y)', R)
    assert f == parse_poly('-x^2 - 2*x*y - y^2', R)
    assert parse_poly('x*-3', R) == parse_poly('-3*x', R)
    assert parse_poly('x - -3', R) == parse_poly('x + 3', R)
    assert parse_poly('-3*x + -2*y', R) == parse_poly('-3*x - 2*y', R)
    assert parse_poly('y*-1/2', R).coefficient((0, 1, 0)) == Fraction(-1, 2)


@pytest.mark.parametrize('text', ['x +', '2*', 'x^y', '(x + y', 'x $ y', '1/0', 'x*-y', '(x + y)^2'])
def test_parse_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, R)


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as info:
        parse_poly('x + w', R)
    assert info.value.name == 'w'


@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much])
@given(polynomials)
def test_print_parse_round_trip(f):
    assert parse_poly(format_poly(f), R) == f


@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much])
@given(polynomials, polynomials, polynomials)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R.zero()


@given(monomials, monomials, monomials)
def test_orders_are_multiplicative(a, b, c):
    for order in (DEGREVLEX, LEX, MonomialOrder.block((1, 2))):
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert compare_monomials(order, a, b) == compare_monomials(order, ac, bc)


def test_degrevlex_versus_lex():
    # x*z^2 against y^2*z: same degree, degrevlex looks at the last variable
    assert compare_monomials(DEGREVLEX, (1, 0, 2), (0, 2, 1)) == Comparison.LESS
    assert compare_monomials(LEX, (1, 0, 2), (0, 2, 1)) == Comparison.GREATER
    assert compare_monomials(DEGREVLEX, (0, 0, 3), (1, 0, 0)) == Comparison.GREATER


def test_block_order_eliminates_first_block():
    order = MonomialOrder.block((1, 2))
    assert compare_monomials(order, (1, 0, 0), (0, 5, 5)) == Comparison.GREATER


def test_leading_term_follows_ring_order():
    f = parse_poly('y^2 + x*z', R)
    assert f.leading_monomial == (0, 2, 0)
    g = f.in_ring(R.with_order(LEX))
    assert g.leading_monomial == (1, 0, 1)


def test_prime_field_ring():
    S = projective_ring(2, field=GF(5))
    f = parse_poly('3*x0 + 4*x0 - 1/2', S)
    assert f.coefficient((1, 0, 0)) == 2
    assert f.coefficient((0, 0, 0)) == 2
    assert str(f) == '2*x0 + 2'


def test_mixing_rings_fails():
    S = RingContext(('x', 'y', 'z'), GF(7))
    with pytest.raises(RingMismatchError):
        R.var('x') + S.var('x')


def test_multidegree():
    S = RingContext(('s0', 's1', 't0', 't1'))
    f = parse_poly('s0^2*t1 + s0*s1*t0', S)
    assert multidegree(f, [('s0', 's1'), ('t0', 't1')]) == (2, 1)
    assert multidegree(f + S.var('t0'), [('s0', 's1'), ('t0', 't1')]) is None


def test_substitute_and_evaluate():
    S = RingContext(('s', 't'))
    f = parse_poly('x*y - z^2', R)
    images = {'x': parse_poly('s^2', S), 'y': parse_poly('t^2', S), 'z': parse_poly('s*t', S)}
    assert f.substitute(images, S).is_zero()
    assert parse_poly('x^2 + y', R).evaluate([2, 3, 0]) == 7


def test_derivative():
    f = parse_poly('x^3*y + 2*y*z', R)
    assert f.derivative('y') == parse_poly('x^3 + 2*z', R)


def test_embed_by_name():
    S = RingContext(('t', 'x', 'y', 'z'))
    f = parse_poly('x*y + z', R).embed(S)
    assert f == parse_poly('x*y + z', S)
    with pytest.raises(RingMismatchError):
        parse_poly('t', S).embed(R)


def test_elimination_ring_puts_dropped_variables_first():
    ring, keep = elimination_ring(R, ['y'])
    assert ring.variables == ('y', 'x', 'z')
    assert keep == ('x', 'z')
    assert ring.order.kind == 'block'


def test_normalize_juxtaposed():
    names = ['x0', 'x1', 'x2', 'x12']
    assert normalize_juxtaposed('2x_0x_2 - x_1^2', names) == '2*x0*x2-x1^2'
    assert normalize_juxtaposed('x_0(x_1 + 3)', names) == 'x0*(x1+3)'
    S = projective_ring(2)
    assert parse_poly(normalize_juxtaposed('x_0^2 + 13x_0x_1', S.variables), S) == \
        parse_poly('x0^2 + 13*x0*x1', S)
