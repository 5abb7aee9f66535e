"""
Вывод результатов: JSON через JSONRenderer, CSV через tablib.
Оба формата строятся из одних и тех же сериализованных строк.
"""
import logging

import tablib
from rest_framework.renderers import JSONRenderer

logger = logging.getLogger(__name__)


class OutputError(OSError):
    """
    Ошибка записи файла отчета; сообщение содержит путь.
    """


def render_json(config, results, checks):
    content = JSONRenderer().render(
        {'config': config, 'results': results, 'checks': checks},
        renderer_context={'indent': 2},
    )
    return content.decode('utf-8') + '\n'


def render_csv(rows, headers=None):
    rows = list(rows)
    if headers is None:
        headers = list(rows[0].keys()) if rows else []
    dataset = tablib.Dataset(*[tuple(_cell(row.get(h)) for h in headers) for row in rows], headers=headers)
    return dataset.export('csv', lineterminator='\n')


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ';'.join(_cell(item) for item in value)
    return value


def render(output_format, config, results, checks, headers=None):
    if output_format == 'json':
        return render_json(config, results, checks)
    return render_csv(results, headers)


def write_output(content, path, stream):
    """
    Пишет content в файл path (UTF-8, LF) или в stream, если путь не задан.
    """
    if not path:
        stream.write(content, ending='')
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(content)
    except OSError as exc:
        raise OutputError(f"Не удалось записать {path}: {exc.strerror or exc}") from exc
    logger.info("Отчет записан в %s", path)
