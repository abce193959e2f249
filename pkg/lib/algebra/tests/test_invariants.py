"""Hilbert numerators and projective invariants."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from lib.algebra.exceptions import InputError
from lib.algebra.groebner import Ideal
from lib.algebra.invariants import (
    InvariantReport,
    format_numerator,
    hf_product_check,
    hilbert_function_values,
    hilbert_numerator,
    variety_invariants,
)
from lib.algebra.poly import monomial_divides, projective_ring

P2 = projective_ring(2)
P3 = projective_ring(3)


def test_monomial_numerators():
    assert hilbert_numerator([]) == (1,)
    assert hilbert_numerator([(0, 0)]) == ()
    assert hilbert_numerator([(1, 1)]) == (1, 0, -1)
    assert hilbert_numerator([(2, 0, 0), (0, 3, 0)]) == (1, 0, -1, -1, 0, 1)


def test_numerator_length_check():
    with pytest.raises(InputError):
        hilbert_numerator([(1, 0), (1, 0, 0)], nvars=2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(*[st.integers(min_value=0, max_value=3)] * 3), min_size=1, max_size=4))
def test_hilbert_function_counts_standard_monomials(gens):
    numerator = hilbert_numerator(gens)
    values = hilbert_function_values(numerator, 3, 5)
    for t in range(6):
        standard = [m for m in product(range(t + 1), repeat=3)
                    if sum(m) == t and not any(monomial_divides(g, m) for g in gens)]
        assert values[t] == len(standard)


def test_twisted_cubic():
    ideal = Ideal.parse(P3, ['x0*x2 - x1^2', 'x0*x3 - x1*x2', 'x1*x3 - x2^2'])
    report = variety_invariants(ideal, truncation=5)
    assert (report.dimension, report.degree) == (1, 3)
    assert report.hilbert_function == (1, 4, 7, 10, 13, 16)
    assert report.hilbert_numerator == (1, 0, -3, 2)
    assert format_numerator(report.hilbert_numerator) == '1 - 3*t^2 + 2*t^3'


def test_plane_conic_and_point():
    conic = variety_invariants(Ideal.parse(P2, ['x0*x2 - x1^2']), truncation=3)
    assert (conic.dimension, conic.degree, conic.hilbert_function) == (1, 2, (1, 3, 5, 7))
    point = variety_invariants(Ideal.parse(P2, ['x1', 'x2']), truncation=2)
    assert (point.dimension, point.degree, point.hilbert_function) == (0, 1, (1, 1, 1))


def test_whole_space_and_empty_scheme():
    whole = variety_invariants(Ideal(P2), truncation=2)
    assert (whole.dimension, whole.degree, whole.hilbert_function) == (2, 1, (1, 3, 6))
    empty = variety_invariants(Ideal.parse(P2, ['x0', 'x1', 'x2']), truncation=2)
    assert empty.is_empty
    assert empty.degree is None
    assert empty.hilbert_function == (1, 0, 0)


def test_inhomogeneous_ideal_rejected():
    with pytest.raises(InputError):
        variety_invariants(Ideal.parse(P2, ['x0^2 - x1']))


def test_truncation_defaults_to_setting(settings):
    settings.HILBERT_TRUNCATION = 3
    report = variety_invariants(Ideal.parse(P2, ['x0']))
    assert report.truncation == 3


def test_format_numerator():
    assert format_numerator(()) == '0'
    assert format_numerator((1,)) == '1'
    assert format_numerator((-1, 2, 0, -1)) == '-1 + 2*t - t^3'


def test_hf_product_check():
    line = InvariantReport(3, 1, 1, (1, 2, 3, 4), (1, 0, -1))
    product = InvariantReport(3, 2, 2, (1, 4, 9, 15), (1, 0, -2, 1))
    assert hf_product_check([line, line], product) == (True, True, True, False)
    with pytest.raises(InputError):
        hf_product_check([line, line], product, truncation=4)
