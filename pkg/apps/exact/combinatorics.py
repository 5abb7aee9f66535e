"""
Комбинаторные примитивы над целыми числами произвольной точности.
"""
import math
from functools import lru_cache

from .exceptions import DomainError


@lru_cache(maxsize=None)
def factorial(n):
    """
    n! с кэшированием на уровне значений.
    """
    if n < 0:
        raise DomainError(f"factorial: n={n} < 0")
    return math.factorial(n)


def binomial(n, k):
    """
    Обобщенный биномиальный коэффициент C(n, k) = n(n-1)...(n-k+1)/k!
    для любого целого n и k >= 0.
    """
    if k < 0:
        raise DomainError(f"binomial: k={k} < 0 (n={n})")
    if n >= 0:
        # math.comb дает 0 при 0 <= n < k
        return math.comb(n, k)
    # верхнее отрицание: C(n, k) = (-1)^k C(k - n - 1, k)
    value = math.comb(k - n - 1, k)
    return -value if k % 2 else value


def falling_factorial(x, j):
    """
    (x)_j = x(x-1)...(x-j+1), (x)_0 = 1.
    """
    if j < 0:
        raise DomainError(f"falling_factorial: j={j} < 0")
    result = 1
    for i in range(j):
        result *= x - i
    return result
