"""
Независимые точные значения для сверки с выборочными оценками.
"""
from fractions import Fraction

from apps.exact.exceptions import InvariantViolation
from apps.exact.records import ratio_records


def integrate_polynomial(coefficients, lo, hi):
    """
    Точный интеграл sum c_i t^i по [lo, hi] (коэффициенты по возрастанию степени).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    return sum(
        (Fraction(c) * (hi ** (i + 1) - lo ** (i + 1)) / (i + 1) for i, c in enumerate(coefficients)),
        Fraction(0),
    )


def exact_oracle_d2():
    """
    (v_2, v_2^(0), v_2^(1)) по геометрии треугольника |a_2| < 1, |a_1| < 1 + a_2,
    разрезанного параболой a_2 = a_1^2 / 4.
    """
    # ширина треугольника на уровне a_2 равна 2(1 + a_2)
    total = integrate_polynomial((2, 2), -1, 1)
    # комплексная пара: a_1^2/4 < a_2 < 1 при |a_1| < 2
    complex_pair = integrate_polynomial((1, 0, Fraction(-1, 4)), -2, 2)
    # вещественные корни: |a_1| - 1 < a_2 <= a_1^2/4, высота (1 - |a_1|/2)^2, симметрично по a_1
    real_roots = 2 * integrate_polynomial((1, -1, Fraction(1, 4)), 0, 2)
    if real_roots + complex_pair != total:
        raise InvariantViolation(f"exact_oracle_d2: {real_roots} + {complex_pair} != {total}")
    return total, real_roots, complex_pair


def exact_references(d):
    """
    Точные v_d^(s), известные для степени d: s = 0, 1 всегда, s = 2 через
    дополнение, когда s <= 2 исчерпывает степень (d = 4, 5).
    """
    record = ratio_records(d, d_min=d)[0]
    references = {0: record.v0}
    if d >= 2:
        references[1] = record.v1
    if d // 2 == 2:
        references[2] = record.v_rest
    return references
