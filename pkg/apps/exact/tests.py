import math
from fractions import Fraction

import mpmath
import sympy
from django.test import SimpleTestCase

from .asymptotics import (
    asymptotic_residual,
    asymptotic_table,
    probability_log_residuals,
    residual_limit,
)
from .combinatorics import binomial, falling_factorial
from .exceptions import DomainError, InvariantViolation, PrecisionError
from .identities import (
    alternating_row_sum,
    identity_5_26,
    inner_sum_one,
    inner_sum_two,
    pfaff_sum,
    sm_sum,
    upper_negation,
    vandermonde,
)
from .legendre import (
    associated_legendre_rho,
    associated_legendre_rho_sequence,
    legendre,
    legendre_explicit,
    legendre_sequence,
    legendre_shifted,
)
from .ratios import (
    legendre_gf_series,
    ratio_binomial_double_sum,
    ratio_closed_form,
    ratio_factorial_form,
    ratio_gf_series,
    ratio_pipelines_report,
    ratio_recurrence_seq,
    ratio_sum_form,
    ratio_triple_sum,
    ratio_via_integral,
    ratio_via_rho,
    rational_part_series,
)
from .records import probability_records, ratio_records
from .series import PowerSeries
from .volumes import (
    aomoto_b,
    fam_volume,
    inner_double_integral,
    selberg_special,
    v0_exact,
    v1_exact_via_integral,
)


class CombinatoricsTests(SimpleTestCase):

    def test_binomial(self):
        self.assertEqual(binomial(4, 2), 6)
        self.assertEqual(binomial(-7, 0), 1)
        self.assertEqual(binomial(-2, 3), -4)
        self.assertEqual(binomial(2, 5), 0)

    def test_binomial_negative_k(self):
        with self.assertRaises(DomainError):
            binomial(3, -1)

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(5, 2), 20)
        self.assertEqual(falling_factorial(11, 0), 1)
        self.assertEqual(falling_factorial(3, 4), 0)


class VolumeTests(SimpleTestCase):

    def test_fam_volume(self):
        self.assertEqual(fam_volume(1), 2)
        self.assertEqual(fam_volume(2), 4)
        self.assertEqual(fam_volume(3), Fraction(16, 3))
        self.assertEqual(fam_volume(4), Fraction(64, 9))
        with self.assertRaises(DomainError):
            fam_volume(0)

    def test_selberg_special(self):
        self.assertEqual(selberg_special(0), 1)
        self.assertEqual(selberg_special(2), Fraction(1, 3))
        self.assertEqual(selberg_special(4), Fraction(1, 1050))

    def test_aomoto_b(self):
        for d in range(6):
            self.assertEqual(aomoto_b(d, 0, 0), selberg_special(d))
        self.assertEqual(aomoto_b(0, 0, 0), 1)
        self.assertEqual(aomoto_b(2, 1, 0), Fraction(1, 6))

    def test_aomoto_b_zero_denominator(self):
        # при d = 0 множитель 3 + (2d - i - 1)/2 обращается в ноль на i = 5
        with self.assertRaises(DomainError) as ctx:
            aomoto_b(0, 0, 5)
        self.assertIn('i=5', str(ctx.exception))

    def test_v0_exact(self):
        self.assertEqual(v0_exact(0), 1)
        self.assertEqual(v0_exact(2), Fraction(4, 3))
        self.assertEqual(v0_exact(3), Fraction(16, 45))
        self.assertEqual(v0_exact(4), Fraction(64, 1575))

    def test_inner_double_integral(self):
        self.assertEqual(inner_double_integral(0, 0), Fraction(8, 3))
        self.assertEqual(inner_double_integral(1, 0), 0)
        self.assertEqual(inner_double_integral(0, 1), Fraction(64, 15))

    def test_inner_double_integral_symbolic_oracle(self):
        y, z = sympy.symbols('y z')
        t = sympy.symbols('t', positive=True)
        for j in range(7):
            for k in range(7):
                inner = sympy.integrate(y ** j * (y + z + 1) ** k, (y, -2 * t, 2 * t))
                inner = sympy.expand(inner.subs(z, t ** 2))
                # z = t^2, dz = 2t dt
                value = sympy.integrate(inner * 2 * t, (t, 0, 1))
                expected = Fraction(int(value.p), int(value.q))
                self.assertEqual(inner_double_integral(j, k), expected, (j, k))

    def test_v1_exact_via_integral(self):
        self.assertEqual(v1_exact_via_integral(2), Fraction(8, 3))
        self.assertEqual(v1_exact_via_integral(3), Fraction(224, 45))
        self.assertEqual(v1_exact_via_integral(4), 78 * Fraction(64, 1575))
        with self.assertRaises(DomainError):
            v1_exact_via_integral(1)

    def test_low_degree_exhaustion(self):
        for d in (2, 3):
            self.assertEqual(v0_exact(d) + v1_exact_via_integral(d), fam_volume(d))

    def test_canonical_form(self):
        for value in (v0_exact(7), v1_exact_via_integral(6), aomoto_b(5, 3, 2), inner_double_integral(4, 5)):
            self.assertEqual(math.gcd(value.numerator, value.denominator), 1)
            self.assertGreaterEqual(value.denominator, 1)


class LegendreTests(SimpleTestCase):
    points = (3, -3, 1, 0, Fraction(7, 2))

    def test_base_values(self):
        self.assertEqual(legendre(0, Fraction(5, 7)), 1)
        self.assertEqual(legendre(1, 3), 3)
        self.assertEqual(legendre(2, 3), 13)
        self.assertEqual(legendre(4, 3), 321)

    def test_paths_agree(self):
        for x in self.points:
            sequence = legendre_sequence(100, x)
            for d in range(101):
                self.assertEqual(legendre_explicit(d, x), sequence[d], (d, x))
                self.assertEqual(legendre_shifted(d, x), sequence[d], (d, x))

    def test_parity(self):
        plus = legendre_sequence(100, 3)
        minus = legendre_sequence(100, -3)
        for d in range(101):
            self.assertEqual(minus[d], (-1) ** d * plus[d])

    def test_unknown_method(self):
        with self.assertRaises(DomainError):
            legendre(3, 3, method='taylor')

    def test_rho_values(self):
        self.assertEqual(associated_legendre_rho(0, 9), 1)
        self.assertEqual(associated_legendre_rho(2, -4), 5)

    def test_rho_recurrence_matches_sum(self):
        for x in (-4, 1, Fraction(-1, 3)):
            sequence = associated_legendre_rho_sequence(40, x)
            for d in range(41):
                self.assertEqual(sequence[d], associated_legendre_rho(d, x))

    def test_rho_identity(self):
        sequence = associated_legendre_rho_sequence(200, -4)
        for d in range(201):
            self.assertEqual((-1) ** d * sequence[d], 2 * d + 1)


class SeriesTests(SimpleTestCase):

    def test_rational_part(self):
        series = rational_part_series(30)
        self.assertEqual(list(series.coefficients), [2 * d + 1 for d in range(30)])

    def test_inverse_sqrt_squares_back(self):
        f = PowerSeries.from_polynomial((1, Fraction(1, 2), -3), 12)
        y = f.inverse_sqrt()
        self.assertEqual((f * y * y).coefficients, PowerSeries((1,), 12).coefficients)

    def test_inverse_sqrt_needs_unit_constant(self):
        with self.assertRaises(DomainError):
            PowerSeries.from_polynomial((2, 1), 5).inverse_sqrt()

    def test_legendre_generating_function(self):
        series = legendre_gf_series(3, 40)
        self.assertEqual(list(series.coefficients), legendre_sequence(39, 3))

    def test_ratio_series(self):
        series = ratio_gf_series(10)
        self.assertEqual(list(series.coefficients[:4]), [0, 0, 2, 14])
        self.assertEqual(series[10], ratio_closed_form(10))


class RatioTests(SimpleTestCase):

    def test_closed_form(self):
        self.assertEqual(ratio_closed_form(0), 0)
        self.assertEqual(ratio_closed_form(1), 0)
        self.assertEqual(ratio_closed_form(2), 2)
        self.assertEqual(ratio_closed_form(4), 78)

    def test_sum_form(self):
        self.assertEqual(ratio_sum_form(2), 2)
        self.assertEqual(ratio_sum_form(3), 14)
        self.assertEqual(ratio_sum_form(5), 418)
        with self.assertRaises(DomainError):
            ratio_sum_form(1)

    def test_recurrence(self):
        self.assertEqual(ratio_recurrence_seq(1), [0, 0])
        self.assertEqual(ratio_recurrence_seq(3), [0, 0, 2, 14])
        self.assertEqual(ratio_recurrence_seq(5)[4:], [78, 418])

    def test_four_way_agreement(self):
        recurrence = ratio_recurrence_seq(200)
        series = ratio_gf_series(200)
        for d in range(201):
            closed = ratio_closed_form(d)
            self.assertEqual(closed, recurrence[d], d)
            self.assertEqual(closed, series[d], d)
            if 2 <= d <= 30:
                self.assertEqual(closed, ratio_sum_form(d), d)

    def test_integral_chain(self):
        for d in range(2, 31):
            self.assertEqual(ratio_via_integral(d), ratio_closed_form(d), d)

    def test_derivation_stages(self):
        for d in range(2, 16):
            expected = ratio_closed_form(d)
            self.assertEqual(ratio_factorial_form(d), expected, d)
            self.assertEqual(ratio_binomial_double_sum(d), expected, d)
            self.assertEqual(ratio_triple_sum(d), expected, d)
            self.assertEqual(ratio_via_rho(d), expected, d)

    def test_pipelines_report(self):
        report = ratio_pipelines_report(5)
        self.assertEqual(set(report.values()), {418})
        report = ratio_pipelines_report(1)
        self.assertIsNone(report['sum_form'])
        self.assertIsNone(report['integral'])
        self.assertEqual(report['closed_form'], 0)


class IdentityTests(SimpleTestCase):

    def test_inner_sums(self):
        for a in range(1, 61):
            self.assertEqual(inner_sum_one(a, a), Fraction(1, a))
            for r in range(1, a + 1):
                inner_sum_one(a, r)
                inner_sum_two(a, r)
        self.assertEqual(inner_sum_two(2, 1), Fraction(1, 3))

    def test_inner_sum_range(self):
        with self.assertRaises(DomainError):
            inner_sum_one(3, 4)

    def test_sm_sum(self):
        for m in range(41):
            for n in range(41):
                sm_sum(m, n)

    def test_pfaff_sum(self):
        self.assertEqual(pfaff_sum(1), -2)
        for m in range(61):
            pfaff_sum(m)

    def test_identity_5_26(self):
        for l in range(21):
            for m in range(21):
                for n in range(21):
                    for q in range(n + 1):
                        identity_5_26(l, q, m, n)

    def test_identity_5_26_constraints(self):
        with self.assertRaises(DomainError):
            identity_5_26(3, 2, 1, 1)

    def test_auxiliary_identities(self):
        for n in range(-10, 11):
            for k in range(11):
                upper_negation(n, k)
        for n in range(9):
            for s in range(-8, 9):
                for t in range(9):
                    vandermonde(n, s, t)
        for n in range(15):
            for k in range(15):
                alternating_row_sum(n, k)

    def test_mismatch_reports_parameters(self):
        from .identities import _assert_equal
        with self.assertRaises(InvariantViolation) as ctx:
            _assert_equal('vandermonde', (3, 4), Fraction(1), Fraction(2))
        self.assertIn('(3, 4)', str(ctx.exception))


class AsymptoticTests(SimpleTestCase):

    def test_residual_decreases(self):
        rows = asymptotic_table(30, 200, precision_bits=128)
        magnitudes = [abs(residual) for _, residual, _ in rows]
        for previous, current in zip(magnitudes, magnitudes[1:]):
            self.assertLess(current, previous)
        reference = abs(rows[-1][2])
        for _, _, scaled in rows:
            self.assertLess(abs(scaled), 2 * reference)
            self.assertGreater(abs(scaled), reference / 2)

    def test_residual_baseline(self):
        limit = float(residual_limit())
        self.assertAlmostEqual(limit, -0.11742, places=4)
        at_50 = float(50 * asymptotic_residual(50))
        self.assertLess(at_50, -0.10)
        self.assertGreater(at_50, -0.13)
        at_200 = float(200 * asymptotic_residual(200))
        self.assertAlmostEqual(at_200, limit, delta=0.005)

    def test_large_degree_log_space(self):
        residual = asymptotic_residual(1500, precision_bits=256)
        self.assertLess(abs(residual), mpmath.mpf('0.001'))

    def test_precision_guard(self):
        with self.assertRaises(PrecisionError):
            asymptotic_residual(20, precision_bits=32)
        with self.assertRaises(DomainError):
            asymptotic_residual(1)

    def test_probability_residuals_bounded(self):
        window_0, window_1 = [], []
        for record, (residual_0, residual_1) in probability_records(60):
            if record.d >= 10:
                window_0.append(residual_0)
                window_1.append(residual_1)
        self.assertLess(max(window_0) - min(window_0), 2)
        self.assertLess(max(window_1) - min(window_1), 2)

    def test_probability_log_residuals_without_complex_pairs(self):
        residual_0, residual_1 = probability_log_residuals(Fraction(1), Fraction(0), 1)
        self.assertIsNone(residual_1)
        self.assertAlmostEqual(float(residual_0), math.log(2) / 2)


class RecordTests(SimpleTestCase):

    def test_low_degrees(self):
        records = {record.d: record for record in ratio_records(4)}
        self.assertEqual(records[0].ratio, 0)
        self.assertEqual((records[2].p0, records[2].p1), (Fraction(1, 3), Fraction(2, 3)))
        self.assertEqual((records[3].p0, records[3].p1), (Fraction(1, 15), Fraction(14, 15)))
        self.assertEqual(records[4].v_rest, Fraction(2048, 525))
        self.assertEqual(records[4].v_rest / records[4].v0, 96)

    def test_probability_ratio(self):
        for record in ratio_records(25):
            self.assertEqual(record.p1, record.ratio * record.p0)

    def test_probability_records_domain(self):
        with self.assertRaises(DomainError):
            probability_records(1)
