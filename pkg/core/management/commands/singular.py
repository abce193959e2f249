from lib.algebra.exceptions import InputError
from lib.algebra.geometry import hadamard_product, singular_locus
from lib.algebra.groebner import Ideal, budget_limit
from lib.algebra.poly import format_poly, projective_ring

from core.utils import AlgebraCommand, add_scenario_arguments, scenario_from_options
from verification.serializers import NamedSingularSerializer


class Command(AlgebraCommand):
    help = 'Singular locus by the Jacobian criterion, saturated by the irrelevant ideal'

    def add_command_arguments(self, parser):
        add_scenario_arguments(parser, required=False)
        parser.add_argument('--factor', help='a single factor instead of the product')
        parser.add_argument('--ideal', help="homogeneous generators separated by ';'")
        parser.add_argument('--ambient', type=int, help='n for --ideal (variables x0..xn)')
        parser.add_argument('--no-precheck', action='store_true', help='always use the full minor ideal')

    def _handle(self, **options):
        name, ideal, seed = self._target(options)
        report = singular_locus(ideal, seed=seed, precheck=False if options['no_precheck'] else None)
        generators = [format_poly(g) for g in report.ideal.groebner_basis()]
        result = {'name': name, 'singular': report, 'generators': generators}
        if report.smooth:
            text = f"{name}: smooth ({report.method})\n"
        else:
            text = (f"{name}: singular locus dim={report.invariants.dimension} deg={report.invariants.degree}\n"
                    + ''.join(f"  {g}\n" for g in generators))
        self.emit(NamedSingularSerializer(result).data, text, options)

    def _target(self, options):
        if options['ideal']:
            if options['ambient'] is None:
                raise InputError("--ideal needs --ambient")
            ring = projective_ring(options['ambient'])
            return 'ideal', Ideal.parse(ring, [g for g in options['ideal'].split(';') if g.strip()]), 0
        if not (options['scenario'] or options['example']):
            raise InputError("give --scenario, --example or --ideal")
        scenario = scenario_from_options(options)
        if options['factor']:
            return options['factor'], scenario.factor(options['factor']).implicit_ideal(), scenario.seed
        with budget_limit(pairs=scenario.budget):
            result = hadamard_product(scenario.factors, scenario.ambient)
        return '*'.join(f.name for f in scenario.factors), result.ideal, scenario.seed
