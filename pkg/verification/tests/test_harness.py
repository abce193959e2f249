"""Compute-versus-predict comparison reports."""

from types import SimpleNamespace

import pytest

from lib.algebra.arith import QQ
from lib.algebra.geometry import hadamard_product, singular_locus
from lib.algebra.invariants import InvariantReport
from lib.algebra.predictor import LARGE, PARAMETRIC, FactorSignature, predict
from verification.claims import is_registered
from verification.harness import (
    CERTIFIED,
    FAILED,
    MATCH,
    MISMATCH,
    NOT_APPLICABLE,
    UNCERTIFIABLE,
    Certificates,
    ComparisonReport,
    Computed,
    FactorData,
    SecantCertificate,
    compare_scenario,
    example_verdicts,
    formula_verdicts,
    render_text,
)
from verification.scenarios import builtin_scenario, parse_scenario
from verification.serializers import ComparisonReportSerializer, render_json

TWO_LINES = """
ambient 3
field rational

factor X param vars s0 s1 degree 1
coord 0 = s0
coord 1 = s1
coord 2 = s0 + s1
coord 3 = s0 + 2*s1

factor Y param vars t0 t1 degree 1
coord 0 = t0
coord 1 = t1
coord 2 = t0 + t1
coord 3 = t0 - t1

truncate 4
"""

CONIC = FactorSignature(1, 2)
LINE = FactorSignature(1, 1)


def _report(dimension, degree, hf, ambient=4):
    return InvariantReport(ambient, dimension, degree, tuple(hf), ())


def _computed(product, singular=None):
    factors = (
        FactorData('X', 'parametric', CONIC, _report(1, 2, (1, 3, 5))),
        FactorData('Y', 'parametric', LINE, _report(1, 1, (1, 2, 3))),
    )
    return Computed(4, QQ, PARAMETRIC, factors, product, (), singular)


def _by_claim(verdicts):
    return {v.claim: v for v in verdicts}


def test_out_of_range_claims_are_not_applicable():
    prediction = predict([CONIC, CONIC], 4)
    verdicts = formula_verdicts(SimpleNamespace(product=None), prediction, Certificates())
    assert [v.claim for v in verdicts] == ['dimension_sum', 'degree_multinomial', 'hf_drop_at_1']
    assert all(v.status == NOT_APPLICABLE for v in verdicts)
    assert 'outside both regimes' in verdicts[0].note


def test_failed_genericity_gates_the_formulas():
    prediction = predict([CONIC, LINE], 4)
    certificates = Certificates(genericity=FAILED)
    verdicts = formula_verdicts(SimpleNamespace(product=None), prediction, certificates)
    gated, tables = verdicts[:3], verdicts[3:]
    assert all(v.status == NOT_APPLICABLE for v in gated)
    assert gated[0].note == 'genericity certificate failed'
    assert len(tables) == len(prediction.table_hits)
    assert all(v.claim == 'lemma_tables' and v.status == MATCH for v in tables)


def test_small_regime_verdicts():
    prediction = predict([CONIC, LINE], 4)
    product = _report(2, 4, (1, 5, 12))
    singular = SimpleNamespace(smooth=False, invariants=_report(0, 2, (1, 2, 2)))
    certificates = Certificates(genericity=CERTIFIED, secant=SecantCertificate(5, 4, 'terracini'))
    verdicts = formula_verdicts(_computed(product, singular), prediction, certificates)
    found = _by_claim(verdicts)

    assert found['dimension_sum'].status == MATCH
    assert found['degree_multinomial'].status == MATCH
    assert found['hf_drop_at_1'].status == MATCH
    assert found['hf_drop_at_1'].expected == '< 6'
    assert found['singular_bound'].status == MATCH
    assert found['singular_bound'].expected == '>= 0'

    secant = found['secant_dimension']
    assert secant.status == MISMATCH and not secant.strict
    report = ComparisonReport(_computed(product, singular), prediction, verdicts, certificates)
    assert report.mismatches == []
    assert report.exit_code == 0


def test_degree_mismatch_fails_the_report():
    prediction = predict([CONIC, LINE], 4)
    product = _report(2, 3, (1, 5, 11))
    certificates = Certificates(genericity=UNCERTIFIABLE)
    verdicts = formula_verdicts(_computed(product), prediction, certificates)
    report = ComparisonReport(_computed(product), prediction, verdicts, certificates)
    assert [v.claim for v in report.mismatches] == ['degree_multinomial']
    assert report.exit_code == 1


def test_example_verdicts():
    singular = SimpleNamespace(smooth=False, invariants=_report(0, 1, (1, 1, 1)))
    computed = _computed(_report(2, 4, (1, 4, 10)), singular)
    verdicts = _by_claim(example_verdicts('4.3', computed, None, Certificates()))
    assert verdicts['example.4.3.dimension'].status == MATCH
    assert verdicts['example.4.3.degree'].status == MATCH
    assert verdicts['example.4.3.singular_dimension'].status == MISMATCH
    assert all(is_registered(claim) for claim in verdicts)


def test_two_generic_lines():
    report = compare_scenario(parse_scenario(TWO_LINES, name='lines'))
    computed = report.computed
    assert computed.mode == PARAMETRIC
    assert [f.signature for f in computed.factors] == [LINE, LINE]
    assert (computed.product.dimension, computed.product.degree) == (2, 2)
    assert computed.singular.smooth

    assert report.predicted.regime == LARGE
    assert report.predicted.threshold == 3
    assert report.certificates.genericity == CERTIFIED
    assert report.certificates.m_prime.rank == 4
    assert report.certificates.equivalence.holds

    statuses = {v.claim: v.status for v in report.verdicts}
    assert statuses == {
        'dimension_sum': MATCH,
        'degree_multinomial': MATCH,
        'hf_multiplicative': MATCH,
        'smooth_prediction': MATCH,
    }
    assert report.exit_code == 0

    text = render_text(report)
    assert text.startswith('== lines in P^3 over QQ\n')
    assert 'genericity: certified' in text
    assert '[match] degree_multinomial expected 2, observed 2' in text

    data = ComparisonReportSerializer(report).data
    assert data['computed']['field'] == 'QQ'
    assert data['predicted']['regime'] == 'large'
    assert '"status":"match"' in render_json(data).replace(' ', '')


def test_modular_consensus_skips_bad_primes():
    text = TWO_LINES.replace('field rational', 'field prime 101')
    text = text.replace('coord 3 = s0 + 2*s1', 'coord 3 = 1/97*s0 + 2*s1')
    report = compare_scenario(parse_scenario(text, name='lines'), singular=False)
    assert report.computed.primes == (101, 89)
    assert (report.computed.product.dimension, report.computed.product.degree) == (2, 2)
    assert report.computed.singular is None
    assert 'primes: 101, 89' in render_text(report)


@pytest.mark.parametrize('precheck', [False, True])
def test_singular_locus_of_the_line_times_conic_product(settings, precheck):
    settings.SINGULAR_PRECHECK = precheck
    scenario = builtin_scenario('4.1')
    result = hadamard_product(scenario.factors, scenario.ambient)
    assert len({g.total_degree() for g in result.ideal.generators}) > 1

    report = singular_locus(result.ideal, dimension=2, seed=scenario.seed)
    assert not report.smooth
    assert report.method == 'minors'
    assert (report.invariants.dimension, report.invariants.degree) == (0, 5)


def _example_statuses(report):
    return {v.claim.rsplit('.', 1)[1]: v for v in report.verdicts if v.claim.startswith('example.')}


@pytest.mark.slow
def test_line_times_conic_at_the_threshold():
    report = compare_scenario(builtin_scenario('4.1'), example='4.1')
    claims = _example_statuses(report)
    assert report.predicted.regime == LARGE
    for field in ('dimension', 'degree', 'singular_dimension', 'singular_degree',
                  'm_prime_determinant', 'hf_product_fails'):
        assert claims[field].status == MATCH, claims[field]
    assert report.certificates.m_prime.determinant == 0
    assert report.certificates.genericity == FAILED
    assert report.exit_code == 0


@pytest.mark.slow
def test_line_times_conic_with_center_on_the_segre_variety():
    report = compare_scenario(builtin_scenario('4.2'), example='4.2')
    claims = _example_statuses(report)
    assert all(v.status == MATCH for v in claims.values()), claims
    center = report.certificates.coefficient_points
    assert center.rank == 5 and center.center_meets_segre
    assert report.certificates.genericity == FAILED
    assert report.exit_code == 0


@pytest.mark.slow
def test_line_times_conic_in_p3():
    report = compare_scenario(builtin_scenario('4.3'), example='4.3')
    statuses = {v.claim: v.status for v in report.verdicts}
    assert statuses['singular_bound'] == MATCH
    assert statuses['example.4.3.singular_dimension'] == MATCH
    assert report.predicted.singular_bound == 1
    assert report.exit_code == 0


@pytest.mark.slow
def test_conic_times_line_in_p3():
    report = compare_scenario(builtin_scenario('4.4', k=1), example='4.4', k=1)
    claims = _example_statuses(report)
    assert claims['degree'].status == MATCH
    assert claims['singular_dimension'].status == MATCH
    assert report.exit_code == 0


@pytest.mark.slow
def test_conic_times_plane_in_p5():
    report = compare_scenario(builtin_scenario('4.4', k=2), example='4.4', k=2)
    claims = _example_statuses(report)
    assert claims['dimension'].status == MATCH
    assert claims['degree'].status == MATCH
    assert report.computed.product.degree == 6
    assert report.exit_code == 0
