import logging
import sys
from pathlib import Path

from django.core.management import get_commands, load_command_class
from django.core.management.base import BaseCommand, CommandError

from lib.algebra.exceptions import AlgebraError, BudgetExceededError, InputError
from verification.scenarios import builtin_scenario, load_scenario
from verification.serializers import FactorSignatureSerializer, first_error, render_json

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class AlgebraCommand(BaseCommand):
    """
    Base for the toolkit commands: ``--report json|text``, ``--out`` and the
    exit-code contract (1 mismatch, 2 input error, 3 Gröbner budget).
    """

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--report', choices=['json', 'text'], default='text')
        parser.add_argument('--out', help='write the report to this file instead of stdout')
        parser.add_argument('--quiet', action='store_true')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def debug(self, message):
        if not self._quiet:
            self.stderr.write(message)

    def handle(self, *args, **options):
        self._quiet = options['quiet']
        try:
            self._handle(**options)
        except CommandError:
            raise
        except BudgetExceededError as error:
            logger.error('Gröbner budget exhausted: %s', error)
            raise CommandError(f"budget exceeded: {error}", returncode=EXIT_BUDGET) from error
        except AlgebraError as error:
            raise CommandError(str(error), returncode=EXIT_INPUT) from error
        except Exception as error:
            logger.exception('Unexpected error: %s', error)
            raise

    def _handle(self, **options):
        raise NotImplementedError

    def emit(self, data, text, options):
        """Write the JSON (serialized ``data``) or text report to stdout or ``--out``."""
        content = render_json(data) + '\n' if options['report'] == 'json' else text
        if options.get('out'):
            Path(options['out']).write_text(content, encoding='utf-8')
            self.debug(f"report written to {options['out']}")
        else:
            self.stdout.write(content, ending='')

    def fail_on_mismatch(self, mismatches):
        if mismatches:
            raise CommandError(f"{len(mismatches)} claim(s) mismatched: {', '.join(mismatches)}",
                               returncode=EXIT_MISMATCH)


def parse_signatures(text):
    """``1:1,1:2`` or ``1:2:2,1:1`` into validated FactorSignatures."""
    signatures = []
    for chunk in text.split(','):
        parts = chunk.strip().split(':')
        if len(parts) not in (2, 3):
            raise InputError(f"bad factor signature '{chunk}' (expected r:d or r:d:h)")
        data = dict(zip(('r', 'd', 'h'), parts))
        serializer = FactorSignatureSerializer(data=data)
        if not serializer.is_valid():
            raise InputError(f"bad factor signature '{chunk}': {first_error(serializer.errors)}")
        signatures.append(serializer.save())
    return signatures


def parse_range(text):
    """``3..6`` or ``3,4,5`` into a tuple of integers."""
    try:
        if '..' in text:
            low, high = text.split('..', 1)
            return tuple(range(int(low), int(high) + 1))
        return tuple(int(v) for v in text.split(','))
    except ValueError:
        raise InputError(f"bad integer range '{text}'") from None


def run_command(argv):
    """
    Run one command from an argument vector (hyphenated names accepted) and
    return its exit code instead of exiting.
    """
    if not argv:
        sys.stderr.write("no command given\n")
        return EXIT_INPUT
    name = argv[0].replace('-', '_')
    commands = get_commands()
    if name not in commands:
        sys.stderr.write(f"Unknown command: {argv[0]}\n")
        return EXIT_INPUT
    command = load_command_class(commands[name], name)
    try:
        command.run_from_argv(['manage.py', name, *argv[1:]])
    except SystemExit as exit_:
        if exit_.code is None:
            return 0
        return exit_.code if isinstance(exit_.code, int) else EXIT_INPUT
    return 0


def add_scenario_arguments(parser, required=True):
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument('--scenario', help='scenario file')
    source.add_argument('--example', choices=['4.1', '4.2', '4.3', '4.4'], help='built-in example scenario')
    parser.add_argument('--k', type=int, default=1, help='k for example 4.4 (1 or 2)')
    parser.add_argument('--seed', type=int, default=0, help='sampling seed for example 4.4')
    parser.add_argument('--prime', type=int, help='rerun over GF(p) and primes below until two agree')


def scenario_from_options(options):
    if options.get('example'):
        scenario = builtin_scenario(options['example'], k=options['k'], seed=options['seed'])
    else:
        scenario = load_scenario(options['scenario'])
    if options.get('prime'):
        scenario = scenario.over_prime(options['prime'])
    return scenario
