from apps.exact.asymptotics import asymptotic_table, residual_limit
from apps.exact.records import probability_records
from apps.reports.base import VerificationFailed, VolumesCommand
from apps.reports.checks import CheckResult
from apps.reports.serializers import AsymptoticRowSerializer

# после этой степени |r_d / L(d) - 1| убывает строго
MONOTONE_FROM = 30


def decreasing_check(rows):
    tail = [(d, abs(residual)) for d, residual, _ in rows if d >= MONOTONE_FROM]
    for (_, previous), (d, current) in zip(tail, tail[1:]):
        if current >= previous:
            return CheckResult('residual_decreasing', False, f"|residual| не убывает при d={d}")
    limit = float(residual_limit())
    return CheckResult(
        'residual_decreasing', True,
        f"|residual| строго убывает при d >= {MONOTONE_FROM}; предел d * residual = {limit:.12f}",
    )


class Command(VolumesCommand):
    help = 'Невязки асимптотики r_d и вероятностей p_d^(0), p_d^(1)'
    subcommand = 'asymptotics'

    def add_arguments(self, parser):
        parser.add_argument('--from', dest='d_from', type=int, default=20)
        parser.add_argument('--to', dest='d_to', type=int, default=200)
        parser.add_argument('--precision-bits', type=int, default=None)
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        serializer = self.validate(
            d_from=options['d_from'],
            d_to=options['d_to'],
            precision_bits=self.option(options, 'precision_bits', 'PRECISION_BITS'),
            format=options['format'],
        )
        config = serializer.validated_data
        d_from, d_to, bits = config['d_from'], config['d_to'], config['precision_bits']

        table = asymptotic_table(d_from, d_to, bits)
        records = {record.d: (record, residuals) for record, residuals in probability_records(d_to, bits)}
        rows = []
        for d, residual, scaled in table:
            record, (log_p0, log_p1) = records[d]
            rows.append({
                'd': d,
                'ratio': record.ratio,
                'residual': residual,
                'scaled_residual': scaled,
                'log_residual_p0': log_p0,
                'log_residual_p1': log_p1,
            })
        results = AsymptoticRowSerializer(rows, many=True).data
        checks = [decreasing_check(table)]

        self.emit(
            options['format'], serializer.data, results, self.serialize_checks(checks),
            headers=list(AsymptoticRowSerializer().fields), path=options['out'],
        )
        failed = [check.detail for check in checks if not check.passed]
        if failed:
            raise VerificationFailed("; ".join(failed))
