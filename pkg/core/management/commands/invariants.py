from lib.algebra.exceptions import InputError
from lib.algebra.geometry import hadamard_product
from lib.algebra.groebner import Ideal, budget_limit
from lib.algebra.invariants import format_numerator, variety_invariants
from lib.algebra.poly import projective_ring

from core.utils import AlgebraCommand, add_scenario_arguments, scenario_from_options
from verification.serializers import NamedInvariantsSerializer


class Command(AlgebraCommand):
    help = 'Dimension, degree, Hilbert function and Hilbert numerator of factors, products or ideals'

    def add_command_arguments(self, parser):
        add_scenario_arguments(parser, required=False)
        parser.add_argument('--factor', action='append', help='factor name (repeatable)')
        parser.add_argument('--product', action='store_true', help='invariants of the Hadamard product')
        parser.add_argument('--ideal', help="homogeneous generators separated by ';'")
        parser.add_argument('--ambient', type=int, help='n for --ideal (variables x0..xn)')
        parser.add_argument('--truncate', type=int, help='last degree of the Hilbert function')

    def _handle(self, **options):
        targets = self._targets(options)
        truncation = options['truncate']
        results = [{'name': name, 'invariants': variety_invariants(ideal, truncation)} for name, ideal in targets]
        lines = []
        for r in results:
            inv = r['invariants']
            lines.append(f"{r['name']}: dim={inv.dimension} deg={inv.degree} HF={list(inv.hilbert_function)} "
                         f"N(t)={format_numerator(inv.hilbert_numerator)}\n")
        self.emit(NamedInvariantsSerializer(results, many=True).data, ''.join(lines), options)

    def _targets(self, options):
        if options['ideal']:
            if options['ambient'] is None:
                raise InputError("--ideal needs --ambient")
            ring = projective_ring(options['ambient'])
            return [('ideal', Ideal.parse(ring, [g for g in options['ideal'].split(';') if g.strip()]))]
        if not (options['scenario'] or options['example']):
            raise InputError("give --scenario, --example or --ideal")
        scenario = scenario_from_options(options)
        if options['truncate'] is None:
            options['truncate'] = scenario.truncation
        targets = []
        names = options['factor'] or ([] if options['product'] else [f.name for f in scenario.factors])
        for name in names:
            targets.append((name, scenario.factor(name).implicit_ideal()))
        if options['product']:
            with budget_limit(pairs=scenario.budget):
                result = hadamard_product(scenario.factors, scenario.ambient)
            targets.append(('*'.join(f.name for f in scenario.factors), result.ideal))
        return targets
