class VolumeError(Exception):
    """
    Базовая ошибка вычислений объемов.
    """


class DomainError(VolumeError, ValueError):
    """
    Аргумент вне области определения операции (например, d < 1).
    """


class InvariantViolation(VolumeError, ArithmeticError):
    """
    Нарушен точный инвариант: неделимость, расхождение тождества или конвейеров.
    Значение никогда не округляется, вычисление прерывается.
    """


class SeriesConvergenceError(VolumeError):
    """
    Итерация Ньютона для степенного ряда не сошлась за отведенное число удвоений.
    """


class PrecisionError(VolumeError):
    """
    Точности вещественной арифметики недостаточно для разрешения невязки.
    """
