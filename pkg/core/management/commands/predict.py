from lib.algebra.exceptions import InputError
from lib.algebra.predictor import PARAMETRIC, SPAN, predict, table_sweep

from core.utils import AlgebraCommand, parse_signatures
from verification.serializers import PredictionSerializer, SweepSerializer


class Command(AlgebraCommand):
    help = 'Closed-form predictions for factor signatures r:d[:h] in P^n'

    def add_command_arguments(self, parser):
        parser.add_argument('--factors', help='comma-separated signatures, e.g. 1:1,1:2')
        parser.add_argument('--n', type=int, help='ambient dimension')
        parser.add_argument('--mode', choices=[PARAMETRIC, SPAN], default=PARAMETRIC)
        parser.add_argument('--sweep', action='store_true', help='check every table row for values up to 4')

    def _handle(self, **options):
        if options['sweep']:
            return self._sweep(options)
        if not options['factors'] or options['n'] is None:
            raise InputError("predict needs --factors and --n")
        signatures = parse_signatures(options['factors'])
        prediction = predict(signatures, options['n'], options['mode'])
        lines = [
            f"N = {prediction.threshold} ({prediction.mode}), regime {prediction.regime}"
            + ("" if prediction.exceeds_sum else " (n <= sum r)"),
        ]
        if prediction.dimension is not None:
            lines.append(f"dim {prediction.dimension}, deg {prediction.degree}, HF {prediction.hf_relation}")
        if prediction.secant_dimension is not None:
            lines.append(f"dim sigma_2(S) = {prediction.secant_dimension}")
        smoothness = prediction.smoothness
        if prediction.singular_bound is not None:
            smoothness += f" (dim Sing >= {prediction.singular_bound})"
        lines.append(f"smoothness: {smoothness}")
        for hit in prediction.table_hits:
            lines.append(f"{hit.table} [{hit.row}]: {hit.inequality} -> {'holds' if hit.holds else 'FAILS'}")
        self.emit(PredictionSerializer(prediction).data, '\n'.join(lines) + '\n', options)

    def _sweep(self, options):
        rows = table_sweep()
        failures = [f"{table} [{row}] at {values}" for table, row, values, holds in rows if not holds]
        text = f"{len(rows)} instantiated rows, {len(failures)} failing\n" + ''.join(f"  {f}\n" for f in failures)
        self.emit(SweepSerializer({'rows': len(rows), 'failures': failures}).data, text, options)
        self.fail_on_mismatch(failures)
