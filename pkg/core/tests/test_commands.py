"""Management commands: reports, exit codes and argument handling."""

import json
import re
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from core.utils import EXIT_BUDGET, EXIT_INPUT, EXIT_MISMATCH, parse_range, parse_signatures, run_command
from lib.algebra.exceptions import InputError
from lib.algebra.predictor import FactorSignature
from verification import suite
from verification.scenarios import parse_scenario
from verification.suite import FAILED, PASSED, SuiteInstance

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

TWISTED_CUBIC = 'x0*x2 - x1^2; x0*x3 - x1*x2; x1*x3 - x2^2'


def run(name, *args):
    out = StringIO()
    call_command(name, *args, stdout=out, stderr=StringIO())
    return out.getvalue()


@pytest.fixture
def two_lines(tmp_path):
    path = tmp_path / 'lines.txt'
    path.write_text(TWO_LINES, encoding='utf-8')
    return str(path)


def test_parse_signatures():
    assert parse_signatures('1:1, 1:2:3') == [FactorSignature(1, 1), FactorSignature(1, 2, 3)]
    with pytest.raises(InputError, match="bad factor signature '1'"):
        parse_signatures('1')
    with pytest.raises(InputError, match='h must be at least r'):
        parse_signatures('2:1:1')


def test_parse_range():
    assert parse_range('3..6') == (3, 4, 5, 6)
    assert parse_range('3,5') == (3, 5)
    with pytest.raises(InputError):
        parse_range('three')


def test_predict_text():
    text = run('predict', '--factors', '1:1,1:2', '--n', '4')
    assert text.splitlines()[:4] == [
        'N = 5 (parametric), regime small',
        'dim 2, deg 4, HF strictly-smaller-at-1',
        'dim sigma_2(S) = 5',
        'smoothness: singular-with-bound (dim Sing >= 0)',
    ]


def test_predict_json():
    data = json.loads(run('predict', '--factors', '1:1,1:1', '--n', '3', '--report', 'json'))
    assert data['regime'] == 'large'
    assert data['threshold'] == 3
    assert data['degree'] == 2
    assert data['smoothness'] == 'smooth'
    assert data['table_hits'] == []


def test_predict_out_of_range_is_not_an_error():
    text = run('predict', '--factors', '1:2,1:2', '--n', '4')
    assert text.startswith('N = 8 (parametric), regime out-of-range')


def test_predict_span_mode():
    text = run('predict', '--factors', '1:2:5,1:1', '--n', '11', '--mode', 'span')
    assert text.startswith('N = 11 (span), regime large')


def test_predict_writes_to_a_file(tmp_path):
    path = tmp_path / 'prediction.json'
    assert run('predict', '--factors', '1:1,1:1', '--n', '3', '--report', 'json', '--out', str(path)) == ''
    assert json.loads(path.read_text(encoding='utf-8'))['regime'] == 'large'


@pytest.mark.parametrize('args', [
    ('--factors', '1:1,1:1'),
    ('--factors', '1:0,1:1', '--n', '3'),
    ('--factors', 'one', '--n', '3'),
    ('--factors', '1:1,1:1', '--n', '0'),
])
def test_predict_input_errors(args):
    with pytest.raises(CommandError) as excinfo:
        run('predict', *args)
    assert excinfo.value.returncode == EXIT_INPUT


def test_table_sweep():
    text = run('predict', '--sweep')
    assert re.fullmatch(r'\d+ instantiated rows, 0 failing\n', text)


def test_invariants_of_an_ideal():
    text = run('invariants', '--ideal', TWISTED_CUBIC, '--ambient', '3', '--truncate', '3')
    assert text == 'ideal: dim=1 deg=3 HF=[1, 4, 7, 10] N(t)=1 - 3*t^2 + 2*t^3\n'

    data = json.loads(run('invariants', '--ideal', 'x0', '--ambient', '2', '--truncate', '2', '--report', 'json'))
    assert data == [{
        'name': 'ideal',
        'invariants': {
            'ambient': 2, 'dimension': 1, 'degree': 1,
            'hilbert_function': [1, 2, 3], 'hilbert_numerator': [1, -1], 'numerator': '1 - t',
        },
    }]


@pytest.mark.parametrize('args', [
    ('--ideal', 'x0'),
    ('--truncate', '3'),
    ('--ideal', 'x0 + 1', '--ambient', '2'),
])
def test_invariants_input_errors(args):
    with pytest.raises(CommandError) as excinfo:
        run('invariants', *args)
    assert excinfo.value.returncode == EXIT_INPUT


def test_invariants_of_scenario_factors(two_lines):
    text = run('invariants', '--scenario', two_lines, '--factor', 'Y', '--truncate', '2')
    assert text == 'Y: dim=1 deg=1 HF=[1, 2, 3] N(t)=1 - 2*t + t^2\n'


def test_implicitize(two_lines):
    text = run('implicitize', '--scenario', two_lines, '--factor', 'X')
    assert text == 'X:\n  x0 - 2*x2 + x3\n  x1 + x2 - x3\n'

    data = json.loads(run('implicitize', '--scenario', two_lines, '--report', 'json'))
    assert [entry['name'] for entry in data] == ['X', 'Y']
    assert all(len(entry['generators']) == 2 for entry in data)


def test_implicitize_needs_a_parametric_factor():
    with pytest.raises(CommandError, match='no parametric factor') as excinfo:
        run('implicitize', '--example', '4.3')
    assert excinfo.value.returncode == EXIT_INPUT


def test_singular_locus_of_an_ideal():
    assert run('singular', '--ideal', 'x0*x2 - x1^2', '--ambient', '2').startswith('ideal: smooth (')

    text = run('singular', '--ideal', 'x1^2*x2 - x0^3 - x0^2*x2', '--ambient', '2', '--no-precheck')
    assert text.startswith('ideal: singular locus dim=0 deg=1\n')

    data = json.loads(run('singular', '--ideal', 'x1^2*x2 - x0^3 - x0^2*x2', '--ambient', '2',
                          '--report', 'json'))
    assert data['singular']['smooth'] is False
    assert data['singular']['dimension'] == 0


def test_hadamard(two_lines):
    text = run('hadamard', '--scenario', two_lines)
    assert '[match] dimension_sum expected 2, observed 2' in text
    assert 'genericity: certified' in text


def test_hadamard_budget_exit_code(tmp_path):
    path = tmp_path / 'tight.txt'
    path.write_text(TWO_LINES + 'budget 1\n', encoding='utf-8')
    assert run_command(['hadamard', '--scenario', str(path), '--quiet']) == EXIT_BUDGET


def test_sample_generic():
    text = run('sample_generic', '--factors', '1:1,1:2', '--n', '4', '--seed', '1')
    assert text.startswith('# generic 1:1,1:2 in P^4\nambient 4\nfield rational\n')
    scenario = parse_scenario(text)
    assert [f.name for f in scenario.factors] == ['X1', 'X2']
    assert [f.multidegree for f in scenario.factors] == [(1,), (2,)]

    data = json.loads(run('sample_generic', '--factors', '1:1,1:2', '--n', '4', '--seed', '1',
                          '--report', 'json'))
    assert data['certified'] is True
    assert data['scenario'] == text


def test_sample_generic_rejects_negative_seeds():
    with pytest.raises(CommandError) as excinfo:
        run('sample_generic', '--factors', '1:1,1:1', '--n', '3', '--seed', '-1')
    assert excinfo.value.returncode == EXIT_INPUT


def test_suite_reports_failures(monkeypatch):
    def fake_run(task):
        index, signatures, ambient, seed, _ = task
        status = FAILED if index == 1 else PASSED
        mismatches = ('degree_multinomial',) if status == FAILED else ()
        return SuiteInstance(index, signatures, ambient, seed, status, mismatches)

    monkeypatch.setattr(suite, 'run_instance', fake_run)
    out = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command('suite', '--factors', '1:1,1:1', '--n', '3', '--seeds', '2', stdout=out)
    assert excinfo.value.returncode == EXIT_MISMATCH
    assert out.getvalue().splitlines()[-1] == 'passed 1, failed 1, errors 0, not generic 0'
    assert '1: ((1, 1), (1, 1)) n=3 seed=1 failed [degree_multinomial]' in out.getvalue()


def test_suite_needs_instances():
    with pytest.raises(CommandError) as excinfo:
        run('suite', '--seeds', '2')
    assert excinfo.value.returncode == EXIT_INPUT


def test_run_command_exit_codes(capsys):
    assert run_command(['predict', '--factors', '1:1,1:1', '--n', '3']) == 0
    assert 'regime large' in capsys.readouterr().out
    assert run_command(['predict', '--factors', '1:1,1:1']) == EXIT_INPUT
    assert run_command(['verify-example', '9.9']) == EXIT_INPUT
    assert run_command(['no-such-command']) == EXIT_INPUT
    assert run_command([]) == EXIT_INPUT


@pytest.mark.slow
def test_verify_example_exit_code(capsys):
    assert run_command(['verify-example', '4.3', '--quiet']) == 0
    assert '[match] example.4.3.singular_dimension' in capsys.readouterr().out
