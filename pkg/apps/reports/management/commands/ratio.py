from itertools import combinations

from apps.exact.ratios import DERIVATION_PIPELINES, PRIMARY_PIPELINES, ratio_pipelines_report
from apps.reports.base import VerificationFailed, VolumesCommand


class Command(VolumesCommand):
    help = 'Сверка независимых способов вычисления r_d = v_d^(1) / v_d^(0)'
    subcommand = 'ratio'

    def add_arguments(self, parser):
        parser.add_argument('--d', type=int, required=True, help='Степень многочлена')
        parser.add_argument('--all', action='store_true', help='Добавить промежуточные формы вывода')

    def handle(self, *args, **options):
        d = self.validate(d=options['d']).validated_data['d']
        pipelines = PRIMARY_PIPELINES + DERIVATION_PIPELINES if options['all'] else PRIMARY_PIPELINES
        values = ratio_pipelines_report(d, pipelines)
        for name, value in values.items():
            self.stdout.write(f"{name}: {'n/a' if value is None else value}")

        disagreements = 0
        applicable = [(name, value) for name, value in values.items() if value is not None]
        for (left, a), (right, b) in combinations(applicable, 2):
            agree = a == b
            disagreements += not agree
            self.stdout.write(f"{left} = {right}: {'pass' if agree else 'fail'}")
        if disagreements:
            raise VerificationFailed(f"d={d}: расхождений {disagreements}")
