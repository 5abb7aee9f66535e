from fractions import Fraction

import mpmath
from rest_framework import serializers

FORMAT_CHOICES = (
    ('csv', 'CSV'),
    ('json', 'JSON'),
)

SUBCOMMAND_CHOICES = (
    ('table', 'Таблица отношений и вероятностей'),
    ('ratio', 'Сверка конвейеров отношения'),
    ('mc', 'Оценка объемов Монте-Карло'),
    ('identities', 'Биномиальные тождества'),
    ('asymptotics', 'Асимптотика'),
    ('series', 'Производящая функция'),
    ('verify', 'Полная проверка инвариантов'),
)

FLOAT_DIGITS = 17


class RationalField(serializers.Field):
    """
    Точное рациональное число в виде строки "p/q" (целые -- без знаменателя).
    """
    default_error_messages = {
        'invalid': 'Ожидается рациональное число вида "p/q".',
    }

    def to_representation(self, value):
        return str(Fraction(value))

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class IntegerStringField(serializers.Field):
    """
    Целое произвольной длины в виде десятичной строки.
    """
    default_error_messages = {
        'invalid': 'Ожидается целое число.',
    }

    def to_representation(self, value):
        return str(int(value))

    def to_internal_value(self, data):
        try:
            return int(str(data))
        except ValueError:
            self.fail('invalid')


class FloatStringField(serializers.Field):
    """
    Приближенное значение (только для чтения) с 17 значащими цифрами.
    Дроби переводятся через mpmath, чтобы не терять очень малые вероятности.
    """

    def __init__(self, **kwargs):
        kwargs['read_only'] = True
        super().__init__(**kwargs)

    def to_representation(self, value):
        with mpmath.workdps(FLOAT_DIGITS + 5):
            if isinstance(value, Fraction):
                value = mpmath.mpf(value.numerator) / value.denominator
            return mpmath.nstr(mpmath.mpf(value), FLOAT_DIGITS, strip_zeros=False, min_fixed=-4, max_fixed=8)


class ReportRowSerializer(serializers.Serializer):
    d = serializers.IntegerField(min_value=0)
    ratio = IntegerStringField()
    v_total = RationalField()
    v0 = RationalField()
    v1 = RationalField()
    v_rest = RationalField()
    p0 = RationalField()
    p1 = RationalField()
    v_total_float = FloatStringField(source='v_total')
    p0_float = FloatStringField(source='p0')
    p1_float = FloatStringField(source='p1')


class VolumeEstimateSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    total_samples = serializers.IntegerField()
    seed = serializers.IntegerField()
    chunk_size = serializers.IntegerField()
    rng_algorithm = serializers.CharField()
    hits = serializers.ListField(child=serializers.IntegerField())
    degenerate = serializers.IntegerField()
    misses = serializers.IntegerField()
    box_volume = RationalField()
    estimates = serializers.ListField(child=FloatStringField())
    standard_errors = serializers.ListField(child=FloatStringField())
    ratio_estimates = serializers.ListField(child=RationalField(allow_null=True))


class ComparisonSerializer(serializers.Serializer):
    s = serializers.IntegerField()
    exact = RationalField()
    exact_float = FloatStringField(source='exact')
    estimate = FloatStringField()
    standard_error = FloatStringField()
    deviation = FloatStringField()
    within_3_stderr = serializers.BooleanField()


class EstimateRowSerializer(serializers.Serializer):
    """
    Строка CSV команды mc: оценка для одного s, сравнение с точным значением
    (пусто, если оно неизвестно) и итоги прогона.
    """
    s = serializers.IntegerField()
    hits = serializers.IntegerField()
    estimate = FloatStringField()
    standard_error = FloatStringField()
    ratio_estimate = RationalField(allow_null=True)
    exact = RationalField(allow_null=True)
    exact_float = FloatStringField(source='exact')
    deviation = FloatStringField()
    within_3_stderr = serializers.BooleanField(allow_null=True)
    d = serializers.IntegerField()
    total_samples = serializers.IntegerField()
    degenerate = serializers.IntegerField()
    misses = serializers.IntegerField()
    box_volume = RationalField()
    seed = serializers.IntegerField()
    chunk_size = serializers.IntegerField()
    rng_algorithm = serializers.CharField()


class AsymptoticRowSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    ratio = IntegerStringField()
    residual = FloatStringField()
    scaled_residual = FloatStringField()
    log_residual_p0 = FloatStringField()
    log_residual_p1 = FloatStringField()


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class RunConfigSerializer(serializers.Serializer):
    """
    Параметры запуска. Число потоков принимается, но в вывод не попадает:
    результат от него не зависит.
    """
    subcommand = serializers.ChoiceField(choices=SUBCOMMAND_CHOICES)
    d = serializers.IntegerField(min_value=0, required=False)
    d_max = serializers.IntegerField(min_value=0, max_value=1000, required=False)
    d_from = serializers.IntegerField(min_value=2, required=False)
    d_to = serializers.IntegerField(min_value=2, required=False)
    samples = serializers.IntegerField(min_value=1, required=False)
    seed = serializers.IntegerField(min_value=0, required=False)
    chunk_size = serializers.IntegerField(min_value=1, required=False)
    threads = serializers.IntegerField(min_value=1, required=False, write_only=True)
    format = serializers.ChoiceField(choices=FORMAT_CHOICES, required=False)
    precision_bits = serializers.IntegerField(min_value=64, required=False)
    terms = serializers.IntegerField(min_value=0, max_value=2000, required=False)
    max_a = serializers.IntegerField(min_value=1, required=False)
    max_m = serializers.IntegerField(min_value=0, required=False)
    max_pfaff = serializers.IntegerField(min_value=0, required=False)
    max_526 = serializers.IntegerField(min_value=0, required=False)

    def validate(self, attrs):
        if attrs['subcommand'] == 'mc' and attrs.get('d', 1) < 1:
            raise serializers.ValidationError({'d': 'Для оценки Монте-Карло нужна степень d >= 1.'})
        if 'd_from' in attrs and 'd_to' in attrs and attrs['d_to'] < attrs['d_from']:
            raise serializers.ValidationError({'d_to': 'Конец диапазона меньше начала.'})
        return attrs
