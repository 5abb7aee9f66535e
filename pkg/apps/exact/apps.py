from django.apps import AppConfig


class ExactConfig(AppConfig):
    name = 'apps.exact'
    verbose_name = "Точные вычисления объемов"
