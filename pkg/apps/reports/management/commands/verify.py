from apps.reports.base import VolumesCommand
from apps.reports.checks import run_checks


class Command(VolumesCommand):
    help = 'Полный набор точных проверок; код 1, если хотя бы одна не пройдена'
    subcommand = 'verify'

    def add_arguments(self, parser):
        parser.add_argument(
            '--group', action='append', choices=('exact', 'regions'), default=None,
            help='Ограничить проверки группой (можно повторять)',
        )

    def handle(self, *args, **options):
        self.validate()
        results = run_checks(options['group'])
        self.write_checks(results)
        self.stdout.write(f"{len(results)} проверок пройдено")
