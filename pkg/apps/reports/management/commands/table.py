from apps.exact.records import ratio_records
from apps.reports.base import VerificationFailed, VolumesCommand
from apps.reports.checks import run_check
from apps.reports.serializers import ReportRowSerializer


def check_records(records):
    for record in records:
        record.check()
    return f"v1 = r_d v0 и p_s = v_s / v_d при {records[0].d} <= d <= {records[-1].d}"


class Command(VolumesCommand):
    help = 'Таблица r_d, точных объемов и вероятностей для 0 <= d <= d_max'
    subcommand = 'table'

    def add_arguments(self, parser):
        parser.add_argument('--d-max', type=int, default=20, help='Наибольшая степень (0..1000)')
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        serializer = self.validate(d_max=options['d_max'], format=options['format'])
        records = ratio_records(serializer.validated_data['d_max'])
        rows = ReportRowSerializer(records, many=True).data
        result = run_check('records', lambda: check_records(records))
        self.emit(
            options['format'], serializer.data, rows, self.serialize_checks([result]),
            headers=list(ReportRowSerializer().fields), path=options['out'],
        )
        if not result.passed:
            raise VerificationFailed(result.detail)
