from core.utils import AlgebraCommand, add_scenario_arguments, scenario_from_options
from verification.harness import compare_scenario, render_text
from verification.serializers import ComparisonReportSerializer


class Command(AlgebraCommand):
    help = 'Hadamard product of the scenario factors, compared against the closed-form predictions'

    def add_command_arguments(self, parser):
        add_scenario_arguments(parser)
        parser.add_argument('--no-singular', action='store_true', help='skip the singular locus')

    def _handle(self, **options):
        scenario = scenario_from_options(options)
        self.debug(f"== hadamard: {scenario.name or options['scenario']} in P^{scenario.ambient}")
        report = compare_scenario(
            scenario, singular=not options['no_singular'],
            example=options.get('example'), k=options['k'],
        )
        self.emit(ComparisonReportSerializer(report).data, render_text(report), options)
        self.fail_on_mismatch([v.claim for v in report.mismatches])
