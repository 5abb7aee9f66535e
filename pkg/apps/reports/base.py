"""
Общая основа команд manage.py: проверка параметров через RunConfigSerializer,
вывод через exporters и перевод ошибок в коды возврата.

Коды возврата: 0 -- успех, 1 -- проверка не пройдена, 2 -- ошибка параметров,
3 -- ошибка ввода-вывода.
"""
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.exact.exceptions import VolumeError

from .exporters import OutputError, render, write_output
from .serializers import CheckResultSerializer, RunConfigSerializer

logger = logging.getLogger(__name__)

EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


class VerificationFailed(Exception):
    pass


class VolumesCommand(BaseCommand):
    subcommand = None

    @property
    def defaults(self):
        return settings.VOLUMES

    def option(self, options, name, setting):
        """
        Значение опции или умолчание из секции [Volumes] файла config.ini.
        """
        value = options.get(name)
        return self.defaults[setting] if value is None else value

    def add_output_arguments(self, parser, default_format='csv'):
        parser.add_argument('--format', choices=('csv', 'json'), default=default_format, help='Формат вывода')
        parser.add_argument('--out', default=None, help='Файл отчета (по умолчанию stdout)')

    def validate(self, **fields):
        data = {key: value for key, value in fields.items() if value is not None}
        serializer = RunConfigSerializer(data={'subcommand': self.subcommand, **data})
        if not serializer.is_valid():
            errors = '; '.join(f"{field}: {' '.join(map(str, messages))}" for field, messages in serializer.errors.items())
            raise CommandError(f"Некорректные параметры: {errors}", returncode=EXIT_USAGE)
        return serializer

    def emit(self, output_format, config, results, checks=(), headers=None, path=None):
        """
        results и checks -- уже сериализованные строки (списки словарей).
        """
        write_output(render(output_format, config, results, list(checks), headers), path, self.stdout)

    @staticmethod
    def serialize_checks(results):
        return CheckResultSerializer(results, many=True).data

    def write_checks(self, results):
        for result in results:
            status = 'PASS' if result.passed else 'FAIL'
            self.stdout.write(f"{status} {result.name}: {result.detail}")
        failed = [result.name for result in results if not result.passed]
        if failed:
            raise VerificationFailed(f"Не пройдено проверок: {len(failed)} ({', '.join(failed)})")

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except OutputError as exc:
            raise CommandError(str(exc), returncode=EXIT_IO) from exc
        except VerificationFailed as exc:
            raise CommandError(str(exc), returncode=EXIT_VERIFICATION) from exc
        except VolumeError as exc:
            logger.error("%s: %s", self.subcommand, exc)
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=EXIT_VERIFICATION) from exc
