"""
Оценка объемов v_d^(s) методом Монте-Карло (попадание в область).

Контракт воспроизводимости: поток выборок делится на блоки фиксированного
размера; блок i использует генератор Philox, инициализированный
SeedSequence(seed, spawn_key=(i,)). Блоки обрабатываются любым числом потоков,
результаты складываются в порядке номеров блоков, поэтому итог не зависит
от планирования.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from apps.exact.combinatorics import binomial
from apps.exact.exceptions import DomainError, InvariantViolation

from .polynomials import Classified, Degenerate, MonicPolynomial, classify, schur_cohn_integer

logger = logging.getLogger(__name__)

RNG_ALGORITHM = 'numpy.Philox4x64 / SeedSequence(seed, spawn_key=(chunk,))'
RANDOM_BITS = 53


@dataclass(frozen=True)
class BoundingBox:
    """
    Ящик |a_k| <= C(d, k): коэффициенты -- элементарные симметрические
    функции корней по модулю меньше 1.
    """
    half_widths: tuple

    @property
    def volume(self):
        return Fraction(math.prod(2 * h for h in self.half_widths))

    def contains(self, coefficients):
        return all(abs(a) < h for a, h in zip(coefficients, self.half_widths))


def coefficient_box(d):
    if d < 1:
        raise DomainError(f"coefficient_box: d={d} < 1")
    return BoundingBox(tuple(binomial(d, k) for k in range(1, d + 1)))


@dataclass
class ChunkCounts:
    hits: list
    degenerate: int = 0
    misses: int = 0

    def merge(self, other):
        return ChunkCounts(
            hits=[a + b for a, b in zip(self.hits, other.hits)],
            degenerate=self.degenerate + other.degenerate,
            misses=self.misses + other.misses,
        )


@dataclass(frozen=True)
class VolumeEstimate:
    d: int
    total_samples: int
    seed: int
    chunk_size: int
    hits: tuple
    degenerate: int
    misses: int
    box_volume: Fraction
    rng_algorithm: str = field(default=RNG_ALGORITHM)

    def __post_init__(self):
        if sum(self.hits) + self.degenerate + self.misses != self.total_samples:
            raise InvariantViolation(
                f"VolumeEstimate d={self.d}: попадания + вырожденные + промахи != {self.total_samples}"
            )

    def fraction_hit(self, s):
        return Fraction(self.hits[s], self.total_samples)

    def estimate(self, s):
        return float(self.box_volume * self.fraction_hit(s))

    def standard_error(self, s):
        p = float(self.fraction_hit(s))
        return math.sqrt(p * (1 - p) / self.total_samples) * float(self.box_volume)

    @property
    def estimates(self):
        return [self.estimate(s) for s in range(len(self.hits))]

    @property
    def standard_errors(self):
        return [self.standard_error(s) for s in range(len(self.hits))]

    @property
    def ratio_estimates(self):
        """
        Оценки v^(s) / v^(0); None, если нет попаданий с s = 0.
        """
        if not self.hits[0]:
            return [None] * len(self.hits)
        return [Fraction(h, self.hits[0]) for h in self.hits]


def chunk_generator(seed, chunk_index):
    sequence = np.random.SeedSequence(seed, spawn_key=(chunk_index,))
    return np.random.Generator(np.random.Philox(sequence))


def draw_chunk(d, seed, chunk_index, count):
    """
    Числители выборок блока при общем знаменателе 2^53.
    Координата a_k = C(d, k) (2m + 1 - 2^53) / 2^53, m равномерно в [0, 2^53):
    двоично-рациональные точки строго внутри ящика.
    """
    rng = chunk_generator(seed, chunk_index)
    draws = rng.integers(0, 2 ** RANDOM_BITS, size=(count, d), dtype=np.uint64).tolist()
    scale = 2 ** RANDOM_BITS
    widths = [binomial(d, k) for k in range(1, d + 1)]
    return [[w * (2 * m + 1 - scale) for w, m in zip(widths, row)] for row in draws]


def to_polynomial(numerators):
    return MonicPolynomial(tuple(Fraction(n, 2 ** RANDOM_BITS) for n in numerators))


def sample_chunk(d, seed, chunk_index, count):
    """
    Классифицирует count выборок блока.
    """
    scale = 2 ** RANDOM_BITS
    counts = ChunkCounts(hits=[0] * (d // 2 + 1))
    for numerators in draw_chunk(d, seed, chunk_index, count):
        if not schur_cohn_integer([scale] + numerators):
            counts.misses += 1
            continue
        polynomial = to_polynomial(numerators)
        outcome = classify(polynomial)
        if isinstance(outcome, Classified):
            counts.hits[outcome.s] += 1
        elif isinstance(outcome, Degenerate):
            counts.degenerate += 1
            logger.warning("Вырожденная выборка d=%s, блок %s: %s (%s)", d, chunk_index, polynomial, outcome.reason)
        else:
            raise InvariantViolation(f"classify и schur_cohn_stable расходятся на {polynomial}")
    return counts


def estimate_volumes(d, n_samples, seed, chunk_size=10_000, threads=1):
    """
    Оценка v_d^(s) для всех s; результат зависит только от (d, n_samples, seed, chunk_size).
    """
    if d < 1:
        raise DomainError(f"estimate_volumes: d={d} < 1")
    if n_samples < 1 or chunk_size < 1 or threads < 1:
        raise DomainError(
            f"estimate_volumes: n_samples={n_samples}, chunk_size={chunk_size}, threads={threads}"
        )
    if seed < 0:
        raise DomainError(f"estimate_volumes: seed={seed} < 0")
    n_chunks = -(-n_samples // chunk_size)

    def run(chunk_index):
        count = min(chunk_size, n_samples - chunk_index * chunk_size)
        return sample_chunk(d, seed, chunk_index, count)

    with ThreadPoolExecutor(max_workers=threads) as executor:
        results = list(executor.map(run, range(n_chunks)))

    total = ChunkCounts(hits=[0] * (d // 2 + 1))
    for counts in results:
        total = total.merge(counts)
    box = coefficient_box(d)
    logger.info(
        "estimate_volumes d=%s: %s выборок, %s блоков, попадания %s, вырожденные %s",
        d, n_samples, n_chunks, total.hits, total.degenerate,
    )
    return VolumeEstimate(
        d=d,
        total_samples=n_samples,
        seed=seed,
        chunk_size=chunk_size,
        hits=tuple(total.hits),
        degenerate=total.degenerate,
        misses=total.misses,
        box_volume=box.volume,
    )
