import math

from apps.regions.oracles import exact_references
from apps.regions.sampling import estimate_volumes
from apps.reports.base import VolumesCommand
from apps.reports.serializers import ComparisonSerializer, EstimateRowSerializer, VolumeEstimateSerializer


def compare(estimate, references):
    """
    Сравнение оценок с известными точными v_d^(s).
    """
    comparisons = []
    for s, exact in sorted(references.items()):
        value = estimate.estimate(s)
        error = estimate.standard_error(s)
        deviation = value - float(exact)
        comparisons.append({
            's': s,
            'exact': exact,
            'estimate': value,
            'standard_error': error,
            'deviation': deviation,
            'within_3_stderr': abs(deviation) <= 3 * error if error else math.isclose(deviation, 0, abs_tol=1e-12),
        })
    return comparisons


def estimate_rows(estimate, comparisons):
    """
    По строке на каждое s: те же числа, что в results и checks JSON-вывода.
    """
    by_s = {row['s']: row for row in comparisons}
    rows = []
    for s, hits in enumerate(estimate.hits):
        reference = by_s.get(s, {})
        rows.append({
            's': s,
            'hits': hits,
            'estimate': estimate.estimates[s],
            'standard_error': estimate.standard_errors[s],
            'ratio_estimate': estimate.ratio_estimates[s],
            'exact': reference.get('exact'),
            'deviation': reference.get('deviation'),
            'within_3_stderr': reference.get('within_3_stderr'),
            'd': estimate.d,
            'total_samples': estimate.total_samples,
            'degenerate': estimate.degenerate,
            'misses': estimate.misses,
            'box_volume': estimate.box_volume,
            'seed': estimate.seed,
            'chunk_size': estimate.chunk_size,
            'rng_algorithm': estimate.rng_algorithm,
        })
    return rows


class Command(VolumesCommand):
    help = 'Оценка объемов v_d^(s) методом Монте-Карло и сравнение с точными значениями'
    subcommand = 'mc'

    def add_arguments(self, parser):
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--samples', type=int, default=None, help='Число выборок')
        parser.add_argument('--seed', type=int, default=None, help='Начальное значение генератора')
        parser.add_argument('--threads', type=int, default=None, help='Число потоков (на результат не влияет)')
        parser.add_argument('--chunk-size', type=int, default=None, help='Размер блока выборок')
        self.add_output_arguments(parser, default_format='json')

    def handle(self, *args, **options):
        serializer = self.validate(
            d=options['d'],
            samples=self.option(options, 'samples', 'DEFAULT_SAMPLES'),
            seed=self.option(options, 'seed', 'DEFAULT_SEED'),
            chunk_size=self.option(options, 'chunk_size', 'CHUNK_SIZE'),
            threads=self.option(options, 'threads', 'DEFAULT_THREADS'),
            format=options['format'],
        )
        config = serializer.validated_data
        estimate = estimate_volumes(
            config['d'], config['samples'], config['seed'],
            chunk_size=config['chunk_size'], threads=config['threads'],
        )
        comparisons = compare(estimate, exact_references(config['d']))
        if options['format'] == 'json':
            self.emit(
                'json', serializer.data, VolumeEstimateSerializer(estimate).data,
                ComparisonSerializer(comparisons, many=True).data, path=options['out'],
            )
        else:
            rows = EstimateRowSerializer(estimate_rows(estimate, comparisons), many=True).data
            self.emit('csv', serializer.data, rows, headers=list(EstimateRowSerializer().fields), path=options['out'])
