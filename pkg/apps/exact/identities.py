"""
Биномиальные тождества, на которых держится вывод целочисленности отношения.

Каждая функция-оракул считает левую часть точно, сравнивает с правой и
возвращает левую часть. При расхождении бросается InvariantViolation с
параметрами, на которых тождество не выполнилось.
"""
from fractions import Fraction

from .combinatorics import binomial, factorial
from .exceptions import DomainError, InvariantViolation


def _assert_equal(name, params, lhs, rhs):
    if lhs != rhs:
        raise InvariantViolation(f"{name}{params}: левая часть {lhs} != правая часть {rhs}")
    return lhs


def inner_sum_one_lhs(a, r):
    """
    sum_{b=0}^{a-r} (-1)^b C(a+b, 2b+r) C(2b+r, b) / (a+b).
    """
    return sum(
        (Fraction((-1) ** b * binomial(a + b, 2 * b + r) * binomial(2 * b + r, b), a + b)
         for b in range(a - r + 1)),
        Fraction(0),
    )


def inner_sum_two_lhs(a, r):
    """
    sum_{b=0}^{a-r} (-1)^b C(a+b, 2b+r) C(2b, b) / (a+b).
    """
    return sum(
        (Fraction((-1) ** b * binomial(a + b, 2 * b + r) * binomial(2 * b, b), a + b)
         for b in range(a - r + 1)),
        Fraction(0),
    )


def _check_inner_range(name, a, r):
    if not 1 <= r <= a:
        raise DomainError(f"{name}: требуется 1 <= r <= a (a={a}, r={r})")


def inner_sum_one(a, r):
    """
    Первая внутренняя сумма равна delta_{r,a} / a.
    """
    _check_inner_range('inner_sum_one', a, r)
    rhs = Fraction(1, a) if r == a else Fraction(0)
    return _assert_equal('inner_sum_one', (a, r), inner_sum_one_lhs(a, r), rhs)


def inner_sum_two(a, r):
    """
    Вторая внутренняя сумма равна C(a-1, a-r) / (2a - r).
    """
    _check_inner_range('inner_sum_two', a, r)
    rhs = Fraction(binomial(a - 1, a - r), 2 * a - r)
    return _assert_equal('inner_sum_two', (a, r), inner_sum_two_lhs(a, r), rhs)


def sm_sum(m, n):
    """
    S_m = sum_{k=0}^{n} (-1)^k C(n+k, 2k) C(2k, k) / (k+m+1)
        = (-1)^n m! n! C(m, n) / (m+n+1)!.
    """
    if m < 0 or n < 0:
        raise DomainError(f"sm_sum: m={m}, n={n}")
    lhs = sum(
        (Fraction((-1) ** k * binomial(n + k, 2 * k) * binomial(2 * k, k), k + m + 1)
         for k in range(n + 1)),
        Fraction(0),
    )
    rhs = Fraction((-1) ** n * factorial(m) * factorial(n) * binomial(m, n), factorial(m + n + 1))
    return _assert_equal('sm_sum', (m, n), lhs, rhs)


def pfaff_sum(m):
    """
    sum_{k=0}^{m} (-2)^k (2m+1)/(2m-k+1) C(m, k) = (-1)^m 2^{2m} / C(2m, m).
    Биномиальный частный случай закона отражения Пфаффа.
    """
    if m < 0:
        raise DomainError(f"pfaff_sum: m={m} < 0")
    lhs = sum(
        (Fraction((-2) ** k * (2 * m + 1) * binomial(m, k), 2 * m - k + 1) for k in range(m + 1)),
        Fraction(0),
    )
    rhs = Fraction((-1) ** m * 4 ** m, binomial(2 * m, m))
    return _assert_equal('pfaff_sum', (m,), lhs, rhs)


def identity_5_26(l, q, m, n):
    """
    C(l+q+1, m+n+1) = sum_{0<=k<=l} C(l-k, m) C(q+k, n) при l, m >= 0, n >= q >= 0.
    """
    if l < 0 or m < 0 or not n >= q >= 0:
        raise DomainError(f"identity_5_26: требуется l, m >= 0, n >= q >= 0 (l={l}, q={q}, m={m}, n={n})")
    lhs = binomial(l + q + 1, m + n + 1)
    rhs = sum(binomial(l - k, m) * binomial(q + k, n) for k in range(l + 1))
    return _assert_equal('identity_5_26', (l, q, m, n), lhs, rhs)


def upper_negation(n, k):
    """
    (-1)^k C(k-n-1, k) = C(n, k) для целого n и k >= 0.
    """
    lhs = (-1) ** k * binomial(k - n - 1, k)
    return _assert_equal('upper_negation', (n, k), lhs, binomial(n, k))


def vandermonde(n, s, t):
    """
    sum_{k=0}^{n} C(n, k) C(s, k+t) = C(n+s, n+t) для целого s и n, t >= 0.
    """
    if n < 0 or t < 0:
        raise DomainError(f"vandermonde: n={n}, t={t}")
    lhs = sum(binomial(n, k) * binomial(s, k + t) for k in range(n + 1))
    return _assert_equal('vandermonde', (n, s, t), lhs, binomial(n + s, n + t))


def alternating_row_sum(n, k):
    """
    sum_{j=0}^{k} (-1)^j C(n, j) = (-1)^k C(n-1, k) при n, k >= 0.
    """
    if n < 0 or k < 0:
        raise DomainError(f"alternating_row_sum: n={n}, k={k}")
    lhs = sum((-1) ** j * binomial(n, j) for j in range(k + 1))
    return _assert_equal('alternating_row_sum', (n, k), lhs, (-1) ** k * binomial(n - 1, k))
