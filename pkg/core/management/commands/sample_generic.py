from lib.algebra.exceptions import InputError
from lib.algebra.geometry import sample_generic_instance

from core.utils import AlgebraCommand, parse_signatures
from verification.scenarios import format_scenario, scenario_from_instance
from verification.serializers import SampleSerializer


class Command(AlgebraCommand):
    help = 'Sample certified-generic parametric factors and print them as a scenario'

    def add_command_arguments(self, parser):
        parser.add_argument('--factors', required=True, help='comma-separated signatures r:d')
        parser.add_argument('--n', type=int, required=True, help='ambient dimension')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--range', type=int, dest='sampling_range', help='coefficients in [-R, R]')

    def _handle(self, **options):
        if options['seed'] < 0:
            raise InputError("seed must be nonnegative")
        signatures = [(s.r, s.d) for s in parse_signatures(options['factors'])]
        instance = sample_generic_instance(signatures, options['n'], seed=options['seed'],
                                           sampling_range=options['sampling_range'])
        if not instance.certified:
            self.debug(f"no generic draw in {instance.attempts} attempts (rank {instance.rank})")
        scenario = scenario_from_instance(instance, options['n'], seed=options['seed'],
                                          name=f"generic {options['factors']} in P^{options['n']}")
        text = format_scenario(scenario)
        data = {'certified': instance.certified, 'rank': instance.rank,
                'attempts': instance.attempts, 'scenario': text}
        self.emit(SampleSerializer(data).data, text, options)
