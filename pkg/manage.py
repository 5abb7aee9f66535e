#!/usr/bin/env python3
"""Точка входа: вычисления объемов и проверки запускаются как команды Django."""
import os
import sys


def main():
    """Запускает команду управления (table, ratio, mc, identities, asymptotics, series, verify)."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Не удалось импортировать Django. Установлены ли зависимости "
            "из requirements.txt и активировано ли виртуальное окружение?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
