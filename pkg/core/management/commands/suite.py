from lib.algebra.exceptions import InputError

from core.utils import AlgebraCommand, parse_range, parse_signatures
from verification.serializers import SuiteReportSerializer
from verification.suite import PRESETS, SuiteConfig, expand_preset, suite_generic


class Command(AlgebraCommand):
    help = 'Seeded generic instances through the comparison harness, with aggregate pass/fail counts'

    def add_command_arguments(self, parser):
        parser.add_argument('--preset', choices=sorted(PRESETS))
        parser.add_argument('--factors', help='comma-separated signatures r:d, e.g. 1:1,1:2')
        parser.add_argument('--n', help='ambient dimensions, e.g. 3..6 or 3,5')
        parser.add_argument('--seeds', type=int, default=3, help='number of seeds per instance')
        parser.add_argument('--workers', type=int, help='process pool size')
        parser.add_argument('--progress', action='store_true')

    def _handle(self, **options):
        if options['preset']:
            configs = expand_preset(options['preset'])
        elif options['factors'] and options['n']:
            signatures = tuple((s.r, s.d) for s in parse_signatures(options['factors']))
            configs = [SuiteConfig((signatures,), parse_range(options['n']), tuple(range(options['seeds'])))]
        else:
            raise InputError("suite needs --preset or --factors with --n")
        report = suite_generic(configs, workers=options['workers'], progress=options['progress'])
        lines = [f"{i.index}: {i.signatures} n={i.ambient} seed={i.seed} {i.status}"
                 + (f" [{', '.join(i.mismatches)}]" if i.mismatches else '')
                 + (f" ({i.note})" if i.note else '') for i in report.instances]
        lines.append(f"passed {report.passed}, failed {report.failed}, errors {report.errors}, "
                     f"not generic {report.not_generic}")
        self.emit(SuiteReportSerializer(report).data, '\n'.join(lines) + '\n', options)
        self.fail_on_mismatch([f"instance {i.index}" for i in report.instances if i.status == 'failed'])
