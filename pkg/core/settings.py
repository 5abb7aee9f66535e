import os
import configparser
from pathlib import Path

from .conf.config import build_logging


BASE_DIR = Path(__file__).resolve().parent.parent

CONFIG = configparser.ConfigParser()
CONFIG.read(BASE_DIR / 'config.ini')


SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    CONFIG.get('Django', 'SECRET_KEY', fallback='contractive-volumes-offline'),
)

DEBUG = False

ALLOWED_HOSTS = []


INSTALLED_APPS = [
    'rest_framework',

    'apps.exact',
    'apps.regions',
    'apps.reports',
]


# Проект работает без базы данных: только вычисления и файлы отчетов
DATABASES = {}


LANGUAGE_CODE = CONFIG.get('Django', 'LANGUAGE_CODE', fallback='ru-ru')

TIME_ZONE = CONFIG.get('Django', 'TIME_ZONE', fallback='UTC')

USE_I18N = True

USE_TZ = True


# Параметры вычислений (секция [Volumes] файла config.ini)
VOLUMES = {
    'DEFAULT_SEED': CONFIG.getint('Volumes', 'DEFAULT_SEED', fallback=20100601),
    'DEFAULT_SAMPLES': CONFIG.getint('Volumes', 'DEFAULT_SAMPLES', fallback=1_000_000),
    'DEFAULT_THREADS': CONFIG.getint('Volumes', 'DEFAULT_THREADS', fallback=1),
    'CHUNK_SIZE': CONFIG.getint('Volumes', 'CHUNK_SIZE', fallback=10_000),
    'PRECISION_BITS': CONFIG.getint('Volumes', 'PRECISION_BITS', fallback=128),
    'RUN_SLOW_TESTS': CONFIG.getboolean('Volumes', 'RUN_SLOW_TESTS', fallback=False),
}

LOGGING = build_logging(CONFIG.get('Volumes', 'LOG_LEVEL', fallback='INFO'))
