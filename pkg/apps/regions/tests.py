import itertools
from fractions import Fraction
from unittest import skipUnless

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from apps.exact.exceptions import DomainError
from apps.exact.ratios import ratio_closed_form

from .oracles import exact_oracle_d2, exact_references
from .polynomials import (
    Classified,
    Degenerate,
    MonicPolynomial,
    Unstable,
    classify,
    count_real_roots,
    schur_cohn_integer,
    schur_cohn_stable,
)
from .sampling import (
    RANDOM_BITS,
    chunk_generator,
    coefficient_box,
    draw_chunk,
    estimate_volumes,
    sample_chunk,
    to_polynomial,
)

slow = skipUnless(settings.VOLUMES['RUN_SLOW_TESTS'], "долгий прогон, включается RUN_SLOW_TESTS")


def polynomial_from_roots(real_roots, pairs):
    """
    Монический многочлен с заданными вещественными корнями и парами u +- iv.
    """
    dense = [Fraction(1)]
    factors = [[Fraction(1), -Fraction(r)] for r in real_roots]
    factors += [[Fraction(1), -2 * Fraction(u), Fraction(u) ** 2 + Fraction(v) ** 2] for u, v in pairs]
    for factor in factors:
        product = [Fraction(0)] * (len(dense) + len(factor) - 1)
        for i, a in enumerate(dense):
            for j, b in enumerate(factor):
                product[i + j] += a * b
        dense = product
    return MonicPolynomial(tuple(dense[1:]))


def random_dyadic_polynomial(rng, d, spread=1):
    box = coefficient_box(d)
    return MonicPolynomial(tuple(
        Fraction(int(rng.integers(-2 ** 20, 2 ** 20)), 2 ** 20) * h * spread for h in box.half_widths
    ))


def random_stable_polynomial(rng, d):
    pairs = []
    for _ in range(int(rng.integers(0, d // 2 + 1))):
        while True:
            u = Fraction(int(rng.integers(-99, 100)), 100)
            v = Fraction(int(rng.integers(1, 100)), 100)
            if u * u + v * v < 1:
                break
        pairs.append((u, v))
    real_roots = [Fraction(int(rng.integers(-999, 1000)), 1000) for _ in range(d - 2 * len(pairs))]
    return polynomial_from_roots(real_roots, pairs)


def stable_samples(d, seed, wanted, chunk_size=10_000):
    """
    Устойчивые выборки из того же потока блоков, что и у estimate_volumes.
    """
    scale = 2 ** RANDOM_BITS
    found = 0
    for chunk_index in itertools.count():
        for numerators in draw_chunk(d, seed, chunk_index, chunk_size):
            if schur_cohn_integer([scale] + numerators):
                yield to_polynomial(numerators)
                found += 1
                if found == wanted:
                    return


class SchurCohnTests(SimpleTestCase):

    def test_examples(self):
        self.assertTrue(schur_cohn_stable(MonicPolynomial((0, 0))))
        self.assertFalse(schur_cohn_stable(MonicPolynomial((0, 3))))
        self.assertFalse(schur_cohn_stable(MonicPolynomial((-2, 1))))

    def test_boundary_is_unstable(self):
        # корни 1/2 и -1
        self.assertFalse(schur_cohn_stable(polynomial_from_roots([Fraction(1, 2), -1], [])))
        # пара на единичной окружности
        self.assertFalse(schur_cohn_stable(polynomial_from_roots([], [(Fraction(3, 5), Fraction(4, 5))])))

    def test_agrees_with_numeric_roots(self):
        rng = np.random.default_rng(7)
        for d in range(2, 7):
            for _ in range(300):
                polynomial = random_dyadic_polynomial(rng, d, spread=Fraction(1, 2))
                roots = np.roots([1.0] + [float(a) for a in polynomial.coefficients])
                moduli = np.abs(roots)
                if np.min(np.abs(moduli - 1)) < 1e-6:
                    continue
                self.assertEqual(schur_cohn_stable(polynomial), bool(np.all(moduli < 1)), polynomial)

    def test_empty_polynomial(self):
        with self.assertRaises(DomainError):
            MonicPolynomial(())


class ClassifyTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(classify(MonicPolynomial((0, Fraction(1, 2), 0))), Classified(s=1, real_roots=1))
        self.assertEqual(classify(MonicPolynomial((0, Fraction(-1, 4)))), Classified(s=0, real_roots=2))
        self.assertIsInstance(classify(MonicPolynomial((-1, Fraction(1, 4)))), Degenerate)
        self.assertEqual(classify(MonicPolynomial((0, 3))), Unstable())

    def test_roots_construction(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n_pairs = int(rng.integers(0, 3))
            n_real = int(rng.integers(1 if n_pairs == 0 else 0, 4))
            real_roots = [Fraction(int(rng.integers(-99, 100)), 100) + Fraction(1, 1000 + i) for i in range(n_real)]
            pairs = []
            for _ in range(n_pairs):
                u = Fraction(int(rng.integers(-60, 61)), 100)
                v = Fraction(int(rng.integers(1, 61)), 100)
                pairs.append((u, v))
            polynomial = polynomial_from_roots(real_roots, pairs)
            outcome = classify(polynomial)
            if len(set(real_roots)) < len(real_roots) or len(set(pairs)) < len(pairs):
                self.assertIsInstance(outcome, Degenerate)
                continue
            self.assertEqual(outcome, Classified(s=n_pairs, real_roots=n_real))
            self.assertTrue(coefficient_box(polynomial.degree).contains(polynomial.coefficients))

    def test_unstable_iff_schur_cohn_fails(self):
        for d in range(2, 7):
            for numerators in draw_chunk(d, seed=3, chunk_index=d, count=2000):
                polynomial = to_polynomial(numerators)
                self.assertEqual(isinstance(classify(polynomial), Unstable), not schur_cohn_stable(polynomial))
        rng = np.random.default_rng(3)
        for d in range(2, 7):
            for _ in range(400):
                polynomial = random_dyadic_polynomial(rng, d, spread=Fraction(1, 2))
                self.assertEqual(isinstance(classify(polynomial), Unstable), not schur_cohn_stable(polynomial))

    def test_sturm_range_equivalence(self):
        for polynomial in (
            polynomial_from_roots([Fraction(1, 3), Fraction(-2, 3), 0], [(Fraction(1, 5), Fraction(1, 2))]),
            polynomial_from_roots([Fraction(9, 10)], [(0, Fraction(1, 3)), (Fraction(-1, 2), Fraction(1, 4))]),
        ):
            dense = polynomial.dense()
            self.assertEqual(count_real_roots(dense), count_real_roots(dense, (-1, 1)))

    def test_repeatable(self):
        polynomial = MonicPolynomial((Fraction(1, 7), Fraction(-2, 9), Fraction(1, 11)))
        self.assertEqual(classify(polynomial), classify(polynomial))


class BoxTests(SimpleTestCase):

    def test_box(self):
        self.assertEqual(coefficient_box(2).half_widths, (2, 1))
        self.assertEqual(coefficient_box(2).volume, 8)
        self.assertEqual(coefficient_box(3).half_widths, (3, 3, 1))
        self.assertEqual(coefficient_box(3).volume, 72)

    def test_sampled_stable_inside_box(self):
        for d, wanted in ((2, 2000), (3, 1000)):
            box = coefficient_box(d)
            polynomials = list(stable_samples(d, seed=5, wanted=wanted))
            self.assertEqual(len(polynomials), wanted)
            for polynomial in polynomials:
                self.assertTrue(box.contains(polynomial.coefficients), polynomial)
                self.assertNotIsInstance(classify(polynomial), Unstable)

    def test_constructed_stable_inside_box(self):
        rng = np.random.default_rng(5)
        for d in range(2, 7):
            box = coefficient_box(d)
            for _ in range(300):
                polynomial = random_stable_polynomial(rng, d)
                self.assertTrue(schur_cohn_stable(polynomial), polynomial)
                self.assertTrue(box.contains(polynomial.coefficients), polynomial)


class OracleTests(SimpleTestCase):

    def test_d2_oracle(self):
        total, real_roots, complex_pair = exact_oracle_d2()
        self.assertEqual((total, real_roots, complex_pair), (4, Fraction(4, 3), Fraction(8, 3)))
        self.assertEqual(complex_pair / real_roots, ratio_closed_form(2))

    def test_references(self):
        self.assertEqual(exact_references(2), {0: Fraction(4, 3), 1: Fraction(8, 3)})
        self.assertEqual(exact_references(4)[2], Fraction(2048, 525))
        self.assertNotIn(2, exact_references(6))


class EstimateTests(SimpleTestCase):

    def assertWithinErrors(self, estimate, s, exact, width=4):
        self.assertLess(abs(estimate.estimate(s) - float(exact)), width * estimate.standard_error(s), (estimate.d, s))

    def test_counting_identity(self):
        estimate = estimate_volumes(3, 5000, seed=1, chunk_size=700)
        self.assertEqual(sum(estimate.hits) + estimate.degenerate + estimate.misses, 5000)
        self.assertEqual(estimate.box_volume, 72)
        self.assertEqual(len(estimate.hits), 2)

    def test_determinism_across_threads(self):
        single = estimate_volumes(4, 6000, seed=42, chunk_size=500, threads=1)
        many = estimate_volumes(4, 6000, seed=42, chunk_size=500, threads=8)
        self.assertEqual(single, many)

    def test_chunks_are_independent_streams(self):
        first = chunk_generator(42, 0).integers(0, 2 ** 53, size=8, dtype=np.uint64).tolist()
        second = chunk_generator(42, 1).integers(0, 2 ** 53, size=8, dtype=np.uint64).tolist()
        self.assertNotEqual(first, second)
        self.assertEqual(sample_chunk(2, 42, 0, 1000), sample_chunk(2, 42, 0, 1000))

    def test_degree_two(self):
        estimate = estimate_volumes(2, 20000, seed=2010, chunk_size=5000)
        self.assertWithinErrors(estimate, 0, Fraction(4, 3))
        self.assertWithinErrors(estimate, 1, Fraction(8, 3))

    def test_degree_three(self):
        estimate = estimate_volumes(3, 20000, seed=2010, chunk_size=5000)
        self.assertWithinErrors(estimate, 0, Fraction(16, 45))
        self.assertWithinErrors(estimate, 1, Fraction(224, 45))

    def test_domain(self):
        with self.assertRaises(DomainError):
            estimate_volumes(2, 0, seed=1)

    @slow
    def test_million_samples(self):
        for d in (2, 3, 4):
            estimate = estimate_volumes(d, 1_000_000, seed=settings.VOLUMES['DEFAULT_SEED'])
            self.assertEqual(estimate.degenerate, 0)
            for s, exact in exact_references(d).items():
                self.assertWithinErrors(estimate, s, exact, width=3)


@slow
class LargeSampleTests(SimpleTestCase):

    def test_classify_matches_schur_cohn(self):
        for d in range(2, 7):
            checked = 0
            for chunk_index in range(10):
                for numerators in draw_chunk(d, settings.VOLUMES['DEFAULT_SEED'], chunk_index, 10_000):
                    polynomial = to_polynomial(numerators)
                    self.assertEqual(isinstance(classify(polynomial), Unstable), not schur_cohn_stable(polynomial))
                    checked += 1
            self.assertEqual(checked, 100_000)

    def test_stable_samples_inside_box(self):
        checked = 0
        for d, wanted in ((2, 60_000), (3, 40_000)):
            box = coefficient_box(d)
            for polynomial in stable_samples(d, settings.VOLUMES['DEFAULT_SEED'], wanted):
                self.assertTrue(box.contains(polynomial.coefficients), polynomial)
                self.assertNotIsInstance(classify(polynomial), Unstable)
                checked += 1
        self.assertEqual(checked, 100_000)
