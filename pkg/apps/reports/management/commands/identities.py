from apps.reports.base import VolumesCommand
from apps.reports.checks import run_identity_checks


class Command(VolumesCommand):
    help = 'Проверка биномиальных тождеств в заданных диапазонах'
    subcommand = 'identities'

    def add_arguments(self, parser):
        parser.add_argument('--max-a', type=int, default=60)
        parser.add_argument('--max-m', type=int, default=40)
        parser.add_argument('--max-pfaff', type=int, default=60)
        parser.add_argument('--max-526', type=int, default=20)

    def handle(self, *args, **options):
        ranges = self.validate(
            max_a=options['max_a'],
            max_m=options['max_m'],
            max_pfaff=options['max_pfaff'],
            max_526=options['max_526'],
        ).validated_data
        ranges.pop('subcommand')
        self.write_checks(run_identity_checks(**ranges))
