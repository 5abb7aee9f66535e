"""
Точная проверка принадлежности области сжимающих многочленов и
классификация по числу пар комплексно-сопряженных корней.

Многочлены хранятся плотными списками коэффициентов по убыванию степени.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from apps.exact.exceptions import DomainError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonicPolynomial:
    """
    x^d + a_1 x^{d-1} + ... + a_d, coefficients = (a_1, ..., a_d).
    """
    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise DomainError("MonicPolynomial: степень должна быть не меньше 1")
        object.__setattr__(self, 'coefficients', tuple(Fraction(a) for a in self.coefficients))

    @property
    def degree(self):
        return len(self.coefficients)

    def dense(self):
        return [Fraction(1)] + list(self.coefficients)

    def __str__(self):
        return f"x^{self.degree} + " + " + ".join(
            f"({a}) x^{self.degree - i}" for i, a in enumerate(self.coefficients, start=1)
        )


@dataclass(frozen=True)
class RootClassification:
    """
    Результат classify.
    """


@dataclass(frozen=True)
class Unstable(RootClassification):
    pass


@dataclass(frozen=True)
class Classified(RootClassification):
    s: int
    real_roots: int


@dataclass(frozen=True)
class Degenerate(RootClassification):
    reason: str


def _trim(p):
    index = 0
    while index < len(p) - 1 and p[index] == 0:
        index += 1
    return p[index:]


def degree(p):
    p = _trim(p)
    return len(p) - 1 if p != [0] else -1


def derivative(p):
    n = len(p) - 1
    return [c * (n - i) for i, c in enumerate(p[:-1])] or [Fraction(0)]


def evaluate(p, x):
    value = Fraction(0)
    for c in p:
        value = value * x + c
    return value


def remainder(a, b):
    """
    Остаток от деления a на b (b не нулевой).
    """
    a = list(_trim(a))
    b = _trim(b)
    if degree(b) < 0:
        raise DomainError("remainder: деление на нулевой многочлен")
    while degree(a) >= degree(b) and degree(a) >= 0:
        factor = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= factor * b[i]
        a = _trim(a[1:]) if len(a) > 1 else [Fraction(0)]
    return a


def gcd(a, b):
    """
    Приведенный НОД двух многочленов алгоритмом Евклида.
    """
    a, b = _trim(a), _trim(b)
    while degree(b) >= 0:
        a, b = b, remainder(a, b)
    return [c / a[0] for c in a]


def integer_coefficients(p):
    """
    Плотный список целых коэффициентов, пропорциональный p, с положительным старшим.
    """
    dense = p.dense() if isinstance(p, MonicPolynomial) else p
    scale = math.lcm(*(Fraction(c).denominator for c in dense))
    return [int(c * scale) for c in dense]


def schur_cohn_integer(coefficients):
    """
    Редукция Шура-Кона без дробей. coefficients -- целые, старший положителен.
    Шаг: q_i = c_0 c_i - c_d c_{d-i}, что равно (p - kappa p*)/x, умноженному на c_0.
    Граница области (|kappa| = 1) считается неустойчивой: область открыта.
    """
    c = list(coefficients)
    while len(c) > 1:
        lead, constant = c[0], c[-1]
        if abs(constant) >= abs(lead):
            return False
        n = len(c) - 1
        c = [lead * c[i] - constant * c[n - i] for i in range(n)]
        common = math.gcd(*c)
        if common > 1:
            c = [x // common for x in c]
    return True


def schur_cohn_stable(p):
    """
    True, если все корни p лежат в открытом единичном круге.
    """
    return schur_cohn_integer(integer_coefficients(p))


def sturm_sequence(p):
    sequence = [_trim(p), _trim(derivative(p))]
    while degree(sequence[-1]) > 0:
        rest = remainder(sequence[-2], sequence[-1])
        if degree(rest) < 0:
            break
        sequence.append([-c for c in rest])
    return sequence


def sign_changes(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def _signs_at_infinity(sequence, negative):
    values = []
    for q in sequence:
        lead = q[0]
        if negative and degree(q) % 2:
            lead = -lead
        values.append(lead)
    return values


def count_real_roots(p, interval=None):
    """
    Число различных вещественных корней по последовательности Штурма:
    на всей прямой или на полуинтервале (lo, hi].
    """
    sequence = sturm_sequence(p)
    if interval is None:
        return (sign_changes(_signs_at_infinity(sequence, negative=True))
                - sign_changes(_signs_at_infinity(sequence, negative=False)))
    lo, hi = (Fraction(v) for v in interval)
    return (sign_changes([evaluate(q, lo) for q in sequence])
            - sign_changes([evaluate(q, hi) for q in sequence]))


def classify(p):
    """
    Unstable, Degenerate (кратные корни) или Classified(s, real_roots).
    """
    if not schur_cohn_stable(p):
        return Unstable()
    dense = p.dense()
    common = gcd(dense, derivative(dense))
    if degree(common) > 0:
        return Degenerate(reason=f"кратные корни: deg gcd(p, p') = {degree(common)}")
    real_roots = count_real_roots(dense)
    inside = count_real_roots(dense, (-1, 1))
    if inside != real_roots:
        raise InvariantViolation(
            f"classify: у устойчивого {p} корней на R {real_roots}, на (-1, 1) {inside}"
        )
    if (p.degree - real_roots) % 2:
        raise InvariantViolation(f"classify: нечетное число невещественных корней у {p}")
    return Classified(s=(p.degree - real_roots) // 2, real_roots=real_roots)
