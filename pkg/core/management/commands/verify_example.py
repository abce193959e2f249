from core.utils import AlgebraCommand
from verification.harness import compare_scenario, render_text
from verification.scenarios import MAX_CONIC_SPACE, builtin_scenario
from verification.serializers import ComparisonReportSerializer


class Command(AlgebraCommand):
    help = 'Run a built-in example through the full pipeline and check its stated values'

    def add_command_arguments(self, parser):
        parser.add_argument('example_id', choices=['4.1', '4.2', '4.3', '4.4'])
        parser.add_argument('--k', type=int, default=1, choices=range(1, MAX_CONIC_SPACE + 1),
                            help='dimension of the linear factor in example 4.4')
        parser.add_argument('--seed', type=int, default=0)

    def _handle(self, **options):
        example_id = options['example_id']
        scenario = builtin_scenario(example_id, k=options['k'], seed=options['seed'])
        self.debug(f"== verify_example {example_id}")
        report = compare_scenario(scenario, example=example_id, k=options['k'])
        self.emit(ComparisonReportSerializer(report).data, render_text(report), options)
        self.fail_on_mismatch([v.claim for v in report.mismatches])
