from dataclasses import dataclass
from fractions import Fraction

from .asymptotics import probability_log_residuals
from .exceptions import DomainError, InvariantViolation
from .ratios import ratio_recurrence_seq
from .volumes import fam_volume, v0_exact


@dataclass(frozen=True)
class RatioRecord:
    """
    Сводка по степени d: отношение r_d, объемы и вероятности.
    v_rest = v_d - v_d^(0) - v_d^(1) -- объем полиномов с двумя и более
    парами комплексных корней.
    """
    d: int
    ratio: int
    v_total: Fraction
    v0: Fraction
    v1: Fraction
    p0: Fraction
    p1: Fraction

    @property
    def v_rest(self):
        return self.v_total - self.v0 - self.v1

    def check(self):
        """
        Проверяет точные соотношения между полями.
        """
        if self.v1 != self.ratio * self.v0:
            raise InvariantViolation(f"RatioRecord d={self.d}: v1 != ratio * v0")
        if self.p0 != self.v0 / self.v_total or self.p1 != self.v1 / self.v_total:
            raise InvariantViolation(f"RatioRecord d={self.d}: вероятности не согласованы с объемами")
        if self.d <= 3 and self.v_rest != 0:
            raise InvariantViolation(f"RatioRecord d={self.d}: v0 + v1 != v_total ({self.v_rest})")
        return self


def total_volume(d):
    """
    v_d для d >= 1 по формуле Фама; при d = 0 область -- одна точка меры 1.
    """
    return Fraction(1) if d == 0 else fam_volume(d)


def build_record(d, ratio):
    v_total = total_volume(d)
    v0 = v0_exact(d)
    v1 = ratio * v0
    return RatioRecord(
        d=d,
        ratio=ratio,
        v_total=v_total,
        v0=v0,
        v1=v1,
        p0=v0 / v_total,
        p1=v1 / v_total,
    ).check()


def ratio_records(d_max, d_min=0):
    """
    RatioRecord для d_min <= d <= d_max.
    """
    if d_max < 0 or d_min < 0:
        raise DomainError(f"ratio_records: d_min={d_min}, d_max={d_max}")
    ratios = ratio_recurrence_seq(d_max)
    return [build_record(d, ratios[d]) for d in range(d_min, d_max + 1)]


def probability_records(d_max, precision_bits=128):
    """
    Записи для d <= d_max вместе с двумя логарифмическими невязками вероятностей:
    список пар (RatioRecord, (residual_0, residual_1)). Для d = 0 невязки не определены.
    """
    if d_max < 2:
        raise DomainError(f"probability_records: d_max={d_max} < 2")
    result = []
    for record in ratio_records(d_max):
        residuals = (None, None)
        if record.d >= 1:
            residuals = probability_log_residuals(record.p0, record.p1, record.d, precision_bits)
        result.append((record, residuals))
    return result
