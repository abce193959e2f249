from lib.algebra.exceptions import InputError
from lib.algebra.poly import format_poly

from core.utils import AlgebraCommand, add_scenario_arguments, scenario_from_options
from verification.serializers import IdealSerializer


class Command(AlgebraCommand):
    help = 'Reduced Gröbner basis of the ideal of each parametric factor'

    def add_command_arguments(self, parser):
        add_scenario_arguments(parser)
        parser.add_argument('--factor', action='append', help='factor name (repeatable; all by default)')

    def _handle(self, **options):
        scenario = scenario_from_options(options)
        names = options['factor'] or [f.name for f in scenario.factors if f.is_parametric]
        if not names:
            raise InputError("the scenario has no parametric factor")
        results = []
        for name in names:
            factor = scenario.factor(name)
            if not factor.is_parametric:
                raise InputError(f"factor {name} is already implicit")
            ideal = factor.implicit_ideal()
            results.append({'name': name, 'generators': [format_poly(g) for g in ideal.groebner_basis()]})
        text = ''.join(f"{r['name']}:\n" + ''.join(f"  {g}\n" for g in r['generators']) for r in results)
        self.emit(IdealSerializer(results, many=True).data, text, options)
