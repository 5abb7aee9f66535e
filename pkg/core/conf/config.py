LOGGING_FORMATTERS = {
    'verbose': {
        'format': '%(levelname)s %(name)s: %(message)s',
    },
}


def build_logging(level):
    """
    Собирает конфигурацию логирования. Все сообщения идут в stderr,
    stdout остается за результатами команд.
    """
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': LOGGING_FORMATTERS,
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'stream': 'ext://sys.stderr',
                'formatter': 'verbose',
            },
        },
        'loggers': {
            'apps': {
                'handlers': ['console'],
                'level': level,
                'propagate': False,
            },
        },
    }
