"""
Многочлены Лежандра P_d(x) и присоединенные многочлены rho_d(x) в точной арифметике.

Для P_d есть три независимых пути вычисления: две явные суммы и
трехчленная рекуррентность. Все три обязаны давать одно и то же значение.
"""
from fractions import Fraction

from .combinatorics import binomial
from .exceptions import DomainError

LEGENDRE_METHODS = ('recurrence', 'explicit', 'shifted')


def _check_degree(name, d):
    if d < 0:
        raise DomainError(f"{name}: d={d} < 0")


def legendre_explicit(d, x):
    """
    P_d(x) = 2^{-d} sum_{k=0}^{floor(d/2)} (-1)^k C(d-k, k) C(2d-2k, d-k) x^{d-2k}.
    """
    _check_degree('legendre_explicit', d)
    x = Fraction(x)
    total = Fraction(0)
    for k in range(d // 2 + 1):
        term = binomial(d - k, k) * binomial(2 * d - 2 * k, d - k) * x ** (d - 2 * k)
        total += -term if k % 2 else term
    return total / 2 ** d


def legendre_shifted(d, x):
    """
    P_d(x) = sum_{k=0}^{d} C(d+k, 2k) C(2k, k) ((x-1)/2)^k.
    """
    _check_degree('legendre_shifted', d)
    t = (Fraction(x) - 1) / 2
    return sum(
        (binomial(d + k, 2 * k) * binomial(2 * k, k) * t ** k for k in range(d + 1)),
        Fraction(0),
    )


def legendre_sequence(n, x):
    """
    [P_0(x), ..., P_n(x)] по рекуррентности d P_d = (2d-1) x P_{d-1} - (d-1) P_{d-2}.
    """
    _check_degree('legendre_sequence', n)
    x = Fraction(x)
    values = [Fraction(1), x]
    for d in range(2, n + 1):
        values.append(((2 * d - 1) * x * values[-1] - (d - 1) * values[-2]) / d)
    return values[:n + 1]


def legendre(d, x, method='recurrence'):
    """
    P_d(x) выбранным способом.
    """
    if method == 'recurrence':
        _check_degree('legendre', d)
        return legendre_sequence(d, x)[d]
    if method == 'explicit':
        return legendre_explicit(d, x)
    if method == 'shifted':
        return legendre_shifted(d, x)
    raise DomainError(f"legendre: неизвестный способ {method!r}, допустимы {LEGENDRE_METHODS}")


def associated_legendre_rho(d, x):
    """
    rho_d(x) = sum_{k=0}^{d} C(d+k, d-k) x^k (определяющая сумма).
    """
    _check_degree('associated_legendre_rho', d)
    x = Fraction(x)
    return sum((binomial(d + k, d - k) * x ** k for k in range(d + 1)), Fraction(0))


def associated_legendre_rho_sequence(n, x):
    """
    [rho_0(x), ..., rho_n(x)] по рекуррентности rho_d = (x+2) rho_{d-1} - rho_{d-2}.

    Начальное значение rho_0 = 1 взято из определяющей суммы. Значение 0
    противоречит и сумме, и тождеству (-1)^d rho_d(-4) = 2d + 1.
    """
    _check_degree('associated_legendre_rho_sequence', n)
    x = Fraction(x)
    values = [Fraction(1), x + 1]
    for _ in range(2, n + 1):
        values.append((x + 2) * values[-1] - values[-2])
    return values[:n + 1]
