"""
Асимптотика отношений r_d и вероятностей p_d^(s) в вещественной арифметике
повышенной точности (mpmath). Все величины считаются в логарифмах, так что
(3 + 2 sqrt 2)^d не переполняется ни при каком d.
"""
import logging

import mpmath

from .exceptions import DomainError, PrecisionError
from .ratios import ratio_recurrence_seq

logger = logging.getLogger(__name__)

MIN_PRECISION_BITS = 64
# невязка должна быть больше 2^(GUARD_BITS - precision), иначе она неразличима
GUARD_BITS = 16


def _check_precision(precision_bits):
    if precision_bits < MIN_PRECISION_BITS:
        raise PrecisionError(
            f"precision_bits={precision_bits} < {MIN_PRECISION_BITS}: невязку не разрешить"
        )


def log_fraction(value):
    """
    Натуральный логарифм положительной дроби в текущей точности mpmath.
    """
    if value <= 0:
        raise DomainError(f"log_fraction: {value} <= 0")
    return mpmath.log(value.numerator) - mpmath.log(value.denominator)


def log_leading_term(d):
    """
    log L(d), L(d) = (3 + 2 sqrt 2)^{d + 1/2} / (8 * 2^{1/4} * sqrt(pi d)).
    """
    lam = 3 + 2 * mpmath.sqrt(2)
    return (
        (d + mpmath.mpf(1) / 2) * mpmath.log(lam)
        - mpmath.log(8)
        - mpmath.log(2) / 4
        - mpmath.log(mpmath.pi * d) / 2
    )


def asymptotic_residual(d, precision_bits=128, ratio=None):
    """
    r_d / L(d) - 1 с точностью не менее precision_bits бит мантиссы.
    """
    if d < 2:
        raise DomainError(f"asymptotic_residual: d={d} < 2")
    _check_precision(precision_bits)
    if ratio is None:
        ratio = ratio_recurrence_seq(d)[d]
    with mpmath.workprec(precision_bits):
        residual = mpmath.expm1(mpmath.log(ratio) - log_leading_term(d))
        if residual == 0 or abs(residual) < mpmath.ldexp(1, GUARD_BITS - precision_bits):
            raise PrecisionError(
                f"asymptotic_residual: d={d}, невязка {residual} не разрешается при {precision_bits} битах"
            )
        return +residual


def asymptotic_table(d_from, d_to, precision_bits=128):
    """
    Список (d, residual, d * residual) для d_from <= d <= d_to.
    """
    if d_from < 2 or d_to < d_from:
        raise DomainError(f"asymptotic_table: некорректный диапазон [{d_from}, {d_to}]")
    ratios = ratio_recurrence_seq(d_to)
    rows = []
    with mpmath.workprec(precision_bits):
        for d in range(d_from, d_to + 1):
            residual = asymptotic_residual(d, precision_bits, ratio=ratios[d])
            rows.append((d, residual, d * residual))
    logger.info("asymptotic_table: d=%s..%s, %s бит", d_from, d_to, precision_bits)
    return rows


def residual_limit(precision_bits=128):
    """
    Предел d * (r_d / L(d) - 1) из разложения в особой точке:
    -1/8 + alpha / (4 (beta - alpha)), alpha = 3 - 2 sqrt 2, beta = 3 + 2 sqrt 2.
    """
    with mpmath.workprec(precision_bits):
        alpha = 3 - 2 * mpmath.sqrt(2)
        beta = 3 + 2 * mpmath.sqrt(2)
        return -mpmath.mpf(1) / 8 + alpha / (4 * (beta - alpha))


def probability_log_residuals(p0, p1, d, precision_bits=128):
    """
    log p_d^(0) + (log 2 / 2) d^2 - (1/8) log d и
    log p_d^(1) + (log 2 / 2) d^2 - d log(3 + 2 sqrt 2).
    Обе величины ограничены при d -> oo.
    """
    if d < 1:
        raise DomainError(f"probability_log_residuals: d={d} < 1")
    _check_precision(precision_bits)
    with mpmath.workprec(precision_bits):
        quadratic = mpmath.log(2) / 2 * d * d
        residual_0 = log_fraction(p0) + quadratic - mpmath.log(d) / 8
        residual_1 = None
        if p1 > 0:
            residual_1 = log_fraction(p1) + quadratic - d * mpmath.log(3 + 2 * mpmath.sqrt(2))
        return +residual_0, (None if residual_1 is None else +residual_1)
