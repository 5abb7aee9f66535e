"""
Отношение r_d = v_d^(1) / v_d^(0), вычисленное несколькими независимыми путями.

Основные конвейеры:
  closed_form  -- (P_d(3) - 2d - 1) / 4 через явную сумму для P_d,
  sum_form     -- знакопеременная сумма биномиальных коэффициентов,
  recurrence   -- линейная рекуррентность второго порядка,
  series       -- коэффициенты производящей функции V_1(z),
  integral     -- v1_exact_via_integral(d) / v0_exact(d).
Промежуточные этапы вывода (factorial, binomial_double, triple_sum, rho)
дают дополнительные проверки.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, factorial
from .exceptions import DomainError, InvariantViolation
from .identities import inner_sum_one_lhs, inner_sum_two_lhs
from .legendre import associated_legendre_rho, legendre_explicit
from .series import PowerSeries
from .volumes import v0_exact, v1_exact_via_integral

logger = logging.getLogger(__name__)


def _require_min_degree(name, d, minimum):
    if d < minimum:
        raise DomainError(f"{name}: d={d} < {minimum}")


def _as_integer(name, value):
    value = Fraction(value)
    if value.denominator != 1:
        raise InvariantViolation(f"{name}: значение {value} не целое")
    return value.numerator


def ratio_closed_form(d):
    """
    (P_d(3) - 2d - 1) / 4. Деление обязано быть точным.
    """
    _require_min_degree('ratio_closed_form', d, 0)
    p = _as_integer(f'P_{d}(3)', legendre_explicit(d, 3))
    numerator = p - 2 * d - 1
    quotient, remainder = divmod(numerator, 4)
    if remainder:
        raise InvariantViolation(f"ratio_closed_form: P_{d}(3) - 2d - 1 = {numerator} не делится на 4")
    return quotient


def ratio_sum_form(d):
    """
    sum_{a=2}^{d} (-1)^{d+a} 2^{a-2} C(d+a, 2a) (C(2a, a) - 2^a).
    """
    _require_min_degree('ratio_sum_form', d, 2)
    total = 0
    for a in range(2, d + 1):
        term = 2 ** (a - 2) * binomial(d + a, 2 * a) * (binomial(2 * a, a) - 2 ** a)
        total += -term if (d + a) % 2 else term
    return total


def ratio_recurrence_seq(n):
    """
    [r_0, ..., r_n] из d r_d - 3(2d-1) r_{d-1} + (d-1) r_{d-2} = 2d(d-1), r_0 = r_1 = 0.
    """
    _require_min_degree('ratio_recurrence_seq', n, 0)
    values = [0, 0]
    for d in range(2, n + 1):
        numerator = 2 * d * (d - 1) + 3 * (2 * d - 1) * values[-1] - (d - 1) * values[-2]
        quotient, remainder = divmod(numerator, d)
        if remainder:
            raise InvariantViolation(f"ratio_recurrence_seq: {numerator} не делится на d={d}")
        values.append(quotient)
    return values[:n + 1]


def rational_part_series(order):
    """
    (1+z)/(1-z)^2 как произведение рядов; коэффициент при z^d равен 2d + 1.
    """
    geometric = PowerSeries.geometric(order)
    return PowerSeries.from_polynomial((1, 1), order) * geometric * geometric


def legendre_gf_series(x, order):
    """
    1/sqrt(1 - 2xz + z^2) итерацией Ньютона; коэффициенты равны P_d(x).
    """
    x = Fraction(x)
    return PowerSeries.from_polynomial((1, -2 * x, 1), order).inverse_sqrt()


def ratio_gf_series(n):
    """
    Первые n+1 коэффициентов V_1(z) = (1/sqrt(1-6z+z^2) - (1+z)/(1-z)^2) / 4.
    """
    _require_min_degree('ratio_gf_series', n, 0)
    order = n + 1
    series = (legendre_gf_series(3, order) - rational_part_series(order)).scale(Fraction(1, 4))
    for d, coefficient in enumerate(series.coefficients):
        _as_integer(f'ratio_gf_series[z^{d}]', coefficient)
    return series


def ratio_via_integral(d):
    """
    v_d^(1) / v_d^(0) из исходной формулы с интегралом (результат -- дробь).
    """
    _require_min_degree('ratio_via_integral', d, 2)
    return v1_exact_via_integral(d) / v0_exact(d)


def ratio_factorial_form(d):
    """
    Отношение как двойная сумма произведений факториалов, умноженная на
    скобку интегрирования по частям.
    """
    _require_min_degree('ratio_factorial_form', d, 2)
    total = Fraction(0)
    for j in range(d - 1):
        for k in range(d - 1 - j):
            sign = -1 if (d + k + 1) % 2 else 1
            outer = Fraction(
                factorial(d + j + k + 2) * factorial(j + 2 * k + 2),
                factorial(d - j - k - 2) * factorial(j) * factorial(j + k + 2)
                * factorial(j + k + 1) * factorial(k + 1) ** 2,
            )
            bracket = Fraction(0)
            for r in range(1, j + 2):
                power = Fraction(-2) ** (r - 2)
                bracket += power * Fraction(
                    factorial(j) * factorial(k + 1),
                    factorial(j - r + 1) * factorial(k + r + 1),
                )
                bracket -= power * Fraction(
                    factorial(j) * factorial(2 * k + 2),
                    factorial(j - r + 1) * factorial(2 * k + r + 2),
                )
            total += sign * outer * bracket
    return total


def ratio_binomial_double_sum(d):
    """
    Та же двойная сумма, переписанная через биномиальные коэффициенты.
    """
    _require_min_degree('ratio_binomial_double_sum', d, 2)
    total = Fraction(0)
    for j in range(d - 1):
        for k in range(d - 1 - j):
            sign = -1 if (d + k + 1) % 2 else 1
            outer = binomial(d, j + k + 2) * binomial(d + j + k + 2, d) * Fraction(j + k + 2, j + 2 * k + 3)
            bracket = Fraction(0)
            for r in range(1, j + 2):
                common = Fraction(-2) ** (r - 2) * binomial(j + 2 * k + 3, 2 * k + r + 2)
                bracket += common * (binomial(2 * k + r + 2, k + 1) - binomial(2 * k + 2, k + 1))
            total += sign * outer * bracket
    return total


def ratio_triple_sum(d):
    """
    Разность двух внутренних сумм по b до их вычисления в замкнутом виде.
    """
    _require_min_degree('ratio_triple_sum', d, 2)
    total = Fraction(0)
    for a in range(2, d + 1):
        inner = Fraction(0)
        for r in range(1, a + 1):
            inner += Fraction(-2) ** (r - 2) * (inner_sum_one_lhs(a, r) - inner_sum_two_lhs(a, r))
        total += a * binomial(d, a) * binomial(d + a, d) * inner
    return -total if d % 2 else total


def ratio_via_rho(d):
    """
    (-1)^d (P_d(-3) - rho_d(-4)) / 4.
    """
    _require_min_degree('ratio_via_rho', d, 0)
    value = (legendre_explicit(d, -3) - associated_legendre_rho(d, -4)) / 4
    return -value if d % 2 else value


@dataclass(frozen=True)
class RatioPipeline:
    name: str
    compute: object
    min_degree: int = 0
    max_degree: int = None

    def applies_to(self, d):
        if d < self.min_degree:
            return False
        return self.max_degree is None or d <= self.max_degree


def _from_sequence(d):
    return ratio_recurrence_seq(d)[d]


def _from_series(d):
    return ratio_gf_series(d)[d]


PRIMARY_PIPELINES = (
    RatioPipeline('closed_form', ratio_closed_form),
    RatioPipeline('sum_form', ratio_sum_form, min_degree=2),
    RatioPipeline('recurrence', _from_sequence),
    RatioPipeline('series', _from_series),
    RatioPipeline('integral', ratio_via_integral, min_degree=2),
)

DERIVATION_PIPELINES = (
    RatioPipeline('factorial_form', ratio_factorial_form, min_degree=2),
    RatioPipeline('binomial_double_sum', ratio_binomial_double_sum, min_degree=2),
    RatioPipeline('triple_sum', ratio_triple_sum, min_degree=2),
    RatioPipeline('rho', ratio_via_rho),
)


def ratio_pipelines_report(d, pipelines=PRIMARY_PIPELINES + DERIVATION_PIPELINES):
    """
    Значения всех применимых конвейеров для степени d; None -- неприменим.
    """
    values = {}
    for pipeline in pipelines:
        values[pipeline.name] = pipeline.compute(d) if pipeline.applies_to(d) else None
    logger.debug("ratio d=%s: %s", d, values)
    return values
