"""
Набор точных проверок для команды verify (и частично identities).

Каждая проверка вызывается без аргументов и возвращает строку с
подробностями или бросает исключение. run_checks превращает это в CheckResult.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from apps.exact import identities
from apps.exact.asymptotics import asymptotic_table
from apps.exact.exceptions import InvariantViolation, VolumeError
from apps.exact.legendre import associated_legendre_rho_sequence, legendre_explicit, legendre_sequence, legendre_shifted
from apps.exact.ratios import (
    DERIVATION_PIPELINES,
    ratio_closed_form,
    ratio_gf_series,
    ratio_recurrence_seq,
    ratio_sum_form,
    ratio_via_integral,
)
from apps.exact.records import probability_records
from apps.exact.volumes import fam_volume, inner_double_integral, v0_exact, v1_exact_via_integral
from apps.regions.oracles import exact_oracle_d2
from apps.regions.polynomials import MonicPolynomial, Unstable, classify, schur_cohn_stable
from apps.regions.sampling import chunk_generator, coefficient_box, estimate_volumes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


REGISTRY = {}


def register(name, group):
    def decorator(func):
        REGISTRY[name] = (group, func)
        return func
    return decorator


def _expect(condition, message):
    if not condition:
        raise InvariantViolation(message)


def run_check(name, func):
    try:
        detail = func()
    except (VolumeError, ArithmeticError, ValueError) as exc:
        logger.error("Проверка %s не пройдена: %s", name, exc)
        return CheckResult(name, False, str(exc))
    return CheckResult(name, True, detail)


def run_checks(groups=None):
    results = []
    for name, (group, func) in REGISTRY.items():
        if groups is None or group in groups:
            results.append(run_check(name, func))
    return results


# --- exact-engine ---

@register('integer_ratios', 'exact')
def check_integer_ratios(d_max=200, sum_form_max=30):
    recurrence = ratio_recurrence_seq(d_max)
    series = ratio_gf_series(d_max)
    for d in range(d_max + 1):
        closed = ratio_closed_form(d)
        _expect(closed == recurrence[d] == series[d], f"d={d}: closed={closed}, recurrence={recurrence[d]}, series={series[d]}")
        if 2 <= d <= sum_form_max:
            _expect(closed == ratio_sum_form(d), f"d={d}: sum_form={ratio_sum_form(d)} != {closed}")
    return f"d <= {d_max}: closed = recurrence = series; sum_form при d <= {sum_form_max}"


@register('formula_chain', 'exact')
def check_formula_chain(d_max=30):
    for d in range(2, d_max + 1):
        value = ratio_via_integral(d)
        _expect(value == ratio_closed_form(d), f"d={d}: v1/v0 = {value}")
    return f"v1_exact_via_integral / v0_exact = closed_form при 2 <= d <= {d_max}"


@register('derivation_stages', 'exact')
def check_derivation_stages(d_max=20):
    for d in range(2, d_max + 1):
        expected = ratio_closed_form(d)
        for pipeline in DERIVATION_PIPELINES:
            value = pipeline.compute(d)
            _expect(value == expected, f"d={d}: {pipeline.name}={value} != {expected}")
    return f"{', '.join(p.name for p in DERIVATION_PIPELINES)} при 2 <= d <= {d_max}"


@register('low_degree_exhaustion', 'exact')
def check_low_degree_exhaustion():
    for d in (2, 3):
        total = v0_exact(d) + v1_exact_via_integral(d)
        _expect(total == fam_volume(d), f"d={d}: v0 + v1 = {total} != {fam_volume(d)}")
    return "v_2 = 4, v_3 = 16/3 исчерпываются s in {0, 1}"


@register('legendre_paths', 'exact')
def check_legendre_paths(d_max=100, points=(3, -3, 1, 0, Fraction(7, 2))):
    for x in points:
        sequence = legendre_sequence(d_max, x)
        mirrored = legendre_sequence(d_max, -Fraction(x))
        for d in range(d_max + 1):
            _expect(legendre_explicit(d, x) == sequence[d] == legendre_shifted(d, x), f"P_{d}({x}): пути расходятся")
            _expect(mirrored[d] == (-1) ** d * sequence[d], f"P_{d}(-{x}) != (-1)^d P_{d}({x})")
    return f"три пути и четность при d <= {d_max}, x in {{{', '.join(str(x) for x in points)}}}"


@register('rho_identity', 'exact')
def check_rho_identity(d_max=200):
    for d, value in enumerate(associated_legendre_rho_sequence(d_max, -4)):
        _expect((-1) ** d * value == 2 * d + 1, f"(-1)^{d} rho_{d}(-4) = {(-1) ** d * value}")
    return f"(-1)^d rho_d(-4) = 2d + 1 при d <= {d_max}"


def identity_families(max_a=60, max_m=40, max_pfaff=60, max_526=20):
    """
    Семейства тождеств: имя -> (описание диапазона, функция, возвращающая число наборов).
    """
    def inner_sums():
        cases = 0
        for a in range(1, max_a + 1):
            for r in range(1, a + 1):
                identities.inner_sum_one(a, r)
                identities.inner_sum_two(a, r)
                cases += 1
        return cases

    def sm_sums():
        for m in range(max_m + 1):
            for n in range(max_m + 1):
                identities.sm_sum(m, n)
        return (max_m + 1) ** 2

    def pfaff():
        for m in range(max_pfaff + 1):
            identities.pfaff_sum(m)
        return max_pfaff + 1

    def nested_binomial_sums():
        cases = 0
        for l in range(max_526 + 1):
            for m in range(max_526 + 1):
                for n in range(max_526 + 1):
                    for q in range(n + 1):
                        identities.identity_5_26(l, q, m, n)
                        cases += 1
        return cases

    def auxiliary():
        cases = 0
        for n in range(-max_526, max_526 + 1):
            for k in range(max_526 + 1):
                identities.upper_negation(n, k)
                cases += 1
        for n in range(max_526 // 2 + 1):
            for s in range(-max_526 // 2, max_526 // 2 + 1):
                for t in range(max_526 // 2 + 1):
                    identities.vandermonde(n, s, t)
                    cases += 1
        for n in range(max_526 + 1):
            for k in range(max_526 + 1):
                identities.alternating_row_sum(n, k)
                cases += 1
        return cases

    return {
        'inner_sums': (f"1 <= r <= a <= {max_a}", inner_sums),
        'sm_sum': (f"0 <= m, n <= {max_m}", sm_sums),
        'pfaff_sum': (f"m <= {max_pfaff}", pfaff),
        'identity_5_26': (f"l, q, m, n <= {max_526}", nested_binomial_sums),
        'auxiliary_identities': (f"параметры до {max_526}", auxiliary),
    }


def run_identity_checks(**ranges):
    results = []
    for name, (scope, family) in identity_families(**ranges).items():
        results.append(run_check(f"identity:{name}", lambda family=family, scope=scope: f"{scope}: {family()} наборов"))
    return results


@register('identities', 'exact')
def check_identities():
    failed = [result for result in run_identity_checks() if not result.passed]
    _expect(not failed, "; ".join(f"{r.name}: {r.detail}" for r in failed))
    return "семейства (a)-(h) в полных диапазонах"


@register('inner_integral_canonical', 'exact')
def check_canonical_form(limit=6):
    for j in range(limit + 1):
        for k in range(limit + 1):
            value = inner_double_integral(j, k)
            _expect(math.gcd(value.numerator, value.denominator) == 1 and value.denominator >= 1,
                    f"inner_double_integral({j}, {k}) = {value} не в несократимой форме")
    return f"несократимые дроби при j, k <= {limit}"


@register('asymptotics', 'exact')
def check_asymptotics(d_from=30, d_to=200, precision_bits=128):
    rows = asymptotic_table(d_from, d_to, precision_bits)
    magnitudes = [abs(residual) for _, residual, _ in rows]
    for (d, _, _), previous, current in zip(rows[1:], magnitudes, magnitudes[1:]):
        _expect(current < previous, f"|r_d / L(d) - 1| не убывает при d={d}")
    reference = abs(rows[-1][2])
    for d, _, scaled in rows:
        _expect(reference / 2 <= abs(scaled) <= 2 * reference, f"d * residual вне полосы при d={d}")
    return f"|residual| убывает при {d_from} <= d <= {d_to}, d * residual в полосе x2 от {float(rows[-1][2]):.6f}"


@register('probability_asymptotics', 'exact')
def check_probability_asymptotics(d_from=10, d_to=60, window=2):
    residuals_0, residuals_1 = [], []
    for record, (residual_0, residual_1) in probability_records(d_to):
        if record.d >= d_from:
            residuals_0.append(residual_0)
            residuals_1.append(residual_1)
    spread_0 = max(residuals_0) - min(residuals_0)
    spread_1 = max(residuals_1) - min(residuals_1)
    _expect(spread_0 < window and spread_1 < window, f"размах невязок {float(spread_0):.4f}, {float(spread_1):.4f}")
    return f"размах log-невязок p0: {float(spread_0):.4f}, p1: {float(spread_1):.4f} при {d_from} <= d <= {d_to}"


# --- region-lab ---

@register('d2_geometric_oracle', 'regions')
def check_d2_oracle():
    total, real_roots, complex_pair = exact_oracle_d2()
    _expect((total, real_roots, complex_pair) == (4, Fraction(4, 3), Fraction(8, 3)),
            f"оракул d=2: ({total}, {real_roots}, {complex_pair})")
    _expect(real_roots == v0_exact(2) and complex_pair == v1_exact_via_integral(2), "оракул d=2 расходится с формулами")
    return "(4, 4/3, 8/3) совпадает с v_2, v_2^(0), v_2^(1)"


@register('classification_consistency', 'regions')
def check_classification_consistency(samples_per_degree=2000, seed=20100601):
    stable = 0
    for d in range(2, 7):
        box = coefficient_box(d)
        rng = chunk_generator(seed, d)
        draws = rng.integers(-2 ** 30, 2 ** 30, size=(samples_per_degree, d)).tolist()
        for row in draws:
            polynomial = MonicPolynomial(tuple(Fraction(m, 2 ** 30) * h for m, h in zip(row, box.half_widths)))
            outcome = classify(polynomial)
            is_stable = schur_cohn_stable(polynomial)
            _expect(isinstance(outcome, Unstable) != is_stable, f"classify и schur_cohn расходятся на {polynomial}")
            _expect(classify(polynomial) == outcome, f"classify не повторяется на {polynomial}")
            stable += is_stable
    return f"{5 * samples_per_degree} выборок при 2 <= d <= 6, устойчивых {stable}; счет Штурма на R и (-1, 1) совпал"


@register('mc_determinism', 'regions')
def check_mc_determinism(samples=4000, seed=20100601):
    single = estimate_volumes(3, samples, seed, chunk_size=500, threads=1)
    parallel = estimate_volumes(3, samples, seed, chunk_size=500, threads=4)
    _expect(single == parallel, "оценки при 1 и 4 потоках различаются")
    return f"{samples} выборок, 1 и 4 потока дают одинаковый результат"
