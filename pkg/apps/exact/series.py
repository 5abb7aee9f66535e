"""
Усеченные формальные степенные ряды с рациональными коэффициентами.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DomainError, SeriesConvergenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerSeries:
    """
    Ряд sum c_k z^k, известный по модулю z^order.
    Индекс в coefficients равен степени z.
    """
    coefficients: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"PowerSeries: order={self.order} < 0")
        coefficients = tuple(Fraction(c) for c in self.coefficients[:self.order])
        coefficients += (Fraction(0),) * (self.order - len(coefficients))
        object.__setattr__(self, 'coefficients', coefficients)

    @classmethod
    def from_polynomial(cls, coefficients, order):
        return cls(tuple(coefficients), order)

    @classmethod
    def geometric(cls, order):
        """
        1/(1-z) = 1 + z + z^2 + ...
        """
        return cls((1,) * order, order)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return self.order

    def truncate(self, order):
        return PowerSeries(self.coefficients, min(order, self.order))

    def __add__(self, other):
        order = min(self.order, other.order)
        return PowerSeries(
            tuple(a + b for a, b in zip(self.coefficients[:order], other.coefficients[:order])),
            order,
        )

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coefficients), self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Fraction(factor)
        return PowerSeries(tuple(factor * c for c in self.coefficients), self.order)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        left, right = self.coefficients, other.coefficients
        product = []
        for n in range(order):
            acc = Fraction(0)
            for i in range(n + 1):
                if left[i] and right[n - i]:
                    acc += left[i] * right[n - i]
            product.append(acc)
        return PowerSeries(tuple(product), order)

    __rmul__ = scale

    def inverse_sqrt(self, order=None):
        """
        1/sqrt(f) итерацией Ньютона y <- y + y (1 - f y^2) / 2
        с удвоением точности на каждом шаге. Требуется f(0) = 1.
        """
        order = self.order if order is None else order
        if order > self.order:
            raise DomainError(f"inverse_sqrt: порядок {order} больше известного {self.order}")
        if self.coefficients and self.coefficients[0] != 1:
            raise DomainError(f"inverse_sqrt: свободный член {self.coefficients[0]} != 1")
        if order == 0:
            return PowerSeries((), 0)
        y = PowerSeries((1,), 1)
        budget = math.ceil(math.log2(order + 1)) + 1
        for _ in range(budget):
            if y.order >= order:
                break
            precision = min(2 * y.order, order)
            f = self.truncate(precision)
            y = PowerSeries(y.coefficients, precision)
            residual = PowerSeries((1,), precision) - f * y * y
            y = y + (y * residual).scale(Fraction(1, 2))
        check = self.truncate(order) * y * y
        if y.order < order or check.coefficients != PowerSeries((1,), order).coefficients:
            raise SeriesConvergenceError(
                f"inverse_sqrt: нет сходимости к порядку {order} за {budget} удвоений"
            )
        logger.debug("inverse_sqrt: порядок %s достигнут", order)
        return y
