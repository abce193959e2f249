import json
from fractions import Fraction

import pytest

from lib.algebra.groebner import Ideal
from lib.algebra.invariants import variety_invariants
from lib.algebra.poly import projective_ring
from lib.algebra.predictor import FactorSignature
from verification.harness import MatrixCertificate
from verification.serializers import (
    FactorSignatureSerializer,
    InvariantReportSerializer,
    MatrixCertificateSerializer,
    ScenarioOptionsSerializer,
    SuiteConfigSerializer,
    first_error,
    render_json,
)


def test_signature_serializer_builds_signatures():
    serializer = FactorSignatureSerializer(data={'r': '2', 'd': '1'})
    assert serializer.is_valid(), serializer.errors
    assert serializer.save() == FactorSignature(2, 1, 2, 1)

    serializer = FactorSignatureSerializer(data={'r': 1, 'd': 2, 'h': 4})
    assert serializer.is_valid(), serializer.errors
    assert serializer.save().h == 4


@pytest.mark.parametrize('data, message', [
    ({'r': 0, 'd': 1}, 'r: '),
    ({'r': 1}, 'd: '),
    ({'r': 'one', 'd': 1}, 'r: '),
    ({'r': 3, 'd': 1, 'h': 2}, 'h must be at least r'),
])
def test_signature_serializer_rejects(data, message):
    serializer = FactorSignatureSerializer(data=data)
    assert not serializer.is_valid()
    assert first_error(serializer.errors).startswith(message)


def test_scenario_options():
    assert ScenarioOptionsSerializer(data={'truncate': 3, 'seed': 2 ** 64 - 1}).is_valid()
    assert not ScenarioOptionsSerializer(data={'seed': 2 ** 64}).is_valid()
    assert not ScenarioOptionsSerializer(data={'budget': 0}).is_valid()


def _suite_data(signatures, ambients=(4,), seeds=(0,)):
    return {
        'signatures': [{'r': r, 'd': d} for r, d in signatures],
        'ambients': list(ambients),
        'seeds': list(seeds),
    }


def test_suite_config_bounds():
    assert SuiteConfigSerializer(data=_suite_data([(1, 1), (1, 2)])).is_valid()

    too_big = SuiteConfigSerializer(data=_suite_data([(3, 1), (2, 1)]))
    assert not too_big.is_valid()
    assert first_error(too_big.errors) == 'sum of r exceeds 4'

    relaxed = SuiteConfigSerializer(data=_suite_data([(3, 1), (2, 1)]), max_sum_r=5)
    assert relaxed.is_valid()

    steep = SuiteConfigSerializer(data=_suite_data([(1, 4), (1, 1)]))
    assert not steep.is_valid()
    assert first_error(steep.errors) == 'a degree exceeds 3'

    wide = SuiteConfigSerializer(data=_suite_data([(1, 1), (1, 1)], ambients=(13,)))
    assert not wide.is_valid()

    single = SuiteConfigSerializer(data=_suite_data([(1, 1)]))
    assert not single.is_valid()
    assert first_error(single.errors).startswith('signatures: ')


def test_first_error_flattens():
    assert first_error({'a': [{'b': ['deep']}]}) == 'a: b: deep'
    assert first_error({'non_field_errors': ['top']}) == 'top'
    assert first_error([]) == '[]'


def test_invariant_report_serializer():
    P2 = projective_ring(2)
    report = variety_invariants(Ideal.parse(P2, ['x0*x2 - x1^2']), truncation=3)
    data = InvariantReportSerializer(report).data
    assert data['dimension'] == 1
    assert data['degree'] == 2
    assert data['hilbert_function'] == [1, 3, 5, 7]
    assert data['numerator'] == '1 - t^2'


def test_exact_values_render_as_strings():
    certificate = MatrixCertificate([[Fraction(1, 2), 0]], 1, Fraction(-3))
    data = MatrixCertificateSerializer(certificate).data
    assert data['rows'] == [['1/2', '0']]
    assert data['determinant'] == '-3'
    assert data['rank'] == 1


def test_render_json():
    text = render_json({'name': 'X', 'values': [1, 2]})
    assert text.startswith('{\n  "name"')
    assert json.loads(text) == {'name': 'X', 'values': [1, 2]}
