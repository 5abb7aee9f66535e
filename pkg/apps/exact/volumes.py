"""
Точные объемы областей коэффициентов сжимающих многочленов.

v_d       -- объем всей области (формула Фама),
v_d^(0)   -- вещественные корни (через интеграл Сельберга),
v_d^(1)   -- ровно одна пара комплексно-сопряженных корней (через обобщение Аомото
             и двойной интеграл по параболической области).
"""
from fractions import Fraction
from functools import lru_cache

from .combinatorics import binomial, factorial, falling_factorial
from .exceptions import DomainError


@lru_cache(maxsize=None)
def fam_volume(d):
    """
    v_d по формуле Фама с разбором четного и нечетного случая.
    """
    if d < 1:
        raise DomainError(f"fam_volume: d={d} < 1")
    m, odd = divmod(d, 2)
    volume = Fraction(1)
    if odd:
        for j in range(1, m + 1):
            volume *= Fraction(
                factorial(j) ** 2 * factorial(j - 1) ** 2,
                factorial(2 * j - 1) * factorial(2 * j + 1),
            )
        return volume * 2 ** (2 * m * m + 2 * m + 1)
    for j in range(1, m + 1):
        volume *= Fraction(factorial(j - 1) ** 4, factorial(2 * j - 1) ** 2)
    return volume * 2 ** (2 * m * m)


@lru_cache(maxsize=None)
def selberg_special(d):
    """
    S_d(1, 1, 1/2) = 1 / prod_{i=0}^{d-1} C(2i+1, i).
    """
    if d < 0:
        raise DomainError(f"selberg_special: d={d} < 0")
    denominator = 1
    for i in range(d):
        denominator *= binomial(2 * i + 1, i)
    return Fraction(1, denominator)


def aomoto_b(d, j, k):
    """
    B_d(j, k): частный случай обобщения Аомото интеграла Сельберга.
    Все множители записаны как дроби с целыми числителями, например
    2 + (d - i - 1)/2 = (d - i + 3)/2.
    """
    if min(d, j, k) < 0:
        raise DomainError(f"aomoto_b: отрицательный индекс (d={d}, j={j}, k={k})")
    value = selberg_special(d)
    for i in range(1, k + 1):
        denominator = 2 * d - i + 5
        if denominator == 0:
            raise DomainError(f"aomoto_b: нулевой множитель знаменателя (d={d}, j={j}, k={k}, i={i})")
        value *= Fraction(d - i + 3, denominator)
    for i in range(1, j + 1):
        value *= Fraction(d - i + 2, 2)
    for i in range(1, k + 1):
        value *= Fraction(d - i + 2, 2)
    for i in range(1, j + k + 1):
        denominator = 2 * d - i + 3
        if denominator == 0:
            raise DomainError(f"aomoto_b: нулевой множитель знаменателя (d={d}, j={j}, k={k}, i={i})")
        value /= Fraction(denominator, 2)
    return value


@lru_cache(maxsize=None)
def v0_exact(d):
    """
    v_d^(0) = 2^{d(d+1)/2} / d! * S_d(1, 1, 1/2).
    """
    if d < 0:
        raise DomainError(f"v0_exact: d={d} < 0")
    return Fraction(2 ** (d * (d + 1) // 2), factorial(d)) * selberg_special(d)


def partial_integration_bracket(j, k):
    """
    Разность двух сумм после итерированного интегрирования по частям:
    sum_r (-2)^{r-1} (j)_{r-1} / (k+r+1)_r - sum_r (-2)^{r-1} (j)_{r-1} / (2k+r+2)_r.
    """
    bracket = Fraction(0)
    for r in range(1, j + 2):
        numerator = (-2) ** (r - 1) * falling_factorial(j, r - 1)
        bracket += Fraction(numerator, falling_factorial(k + r + 1, r))
        bracket -= Fraction(numerator, falling_factorial(2 * k + r + 2, r))
    return bracket


@lru_cache(maxsize=None)
def inner_double_integral(j, k):
    """
    Точное значение int_{z=0}^{1} int_{y=-2 sqrt z}^{2 sqrt z} y^j (y+z+1)^k dy dz.
    """
    if j < 0 or k < 0:
        raise DomainError(f"inner_double_integral: j={j}, k={k}")
    return Fraction(2 ** (j + 2 * k + 4), k + 1) * partial_integration_bracket(j, k)


@lru_cache(maxsize=None)
def v1_exact_via_integral(d):
    """
    v_d^(1) по двойной сумме с B_{d-2} и двойным интегралом.

    Знак берется как (-1)^{d+k}: он совпадает по четности с (-1)^{d-k}.
    Границы суммирования: 0 <= j <= d-2, 0 <= k <= d-2-j.
    """
    if d < 2:
        raise DomainError(f"v1_exact_via_integral: d={d} < 2")
    n = d - 2
    total = Fraction(0)
    for j in range(n + 1):
        for k in range(n - j + 1):
            sign = -1 if (d + k) % 2 else 1
            weight = Fraction(
                sign * 2 ** (2 * d - 2 - 2 * k - j),
                factorial(j) * factorial(k) * factorial(n - j - k),
            )
            total += weight * aomoto_b(n, n - k, n - k - j) * inner_double_integral(j, k)
    return total * Fraction(2) ** ((d - 1) * (d - 2) // 2 - 2)
