"""Exception hierarchy. Every error raised by the package derives from QExtendError."""


class QExtendError(ValueError):
    pass


class NotPrime(QExtendError):
    pass


class EvenCharacteristic(QExtendError):
    pass


class FieldTooLarge(QExtendError):
    pass


class ZeroInverse(QExtendError, ZeroDivisionError):
    pass


class ZeroCoefficient(QExtendError):
    pass


class DimensionMismatch(QExtendError):
    pass


class DegenerateForm(QExtendError):
    pass


class ZeroLevel(QExtendError):
    pass


class GridTooLarge(QExtendError):
    pass


class BadExponent(QExtendError):
    pass


class SurfaceMismatch(QExtendError):
    pass


class EmptyFamily(QExtendError):
    pass


class BadTheta(QExtendError):
    pass


class DegenerateDenominator(QExtendError):
    pass


class ZeroShift(QExtendError):
    pass


class SizeOutOfRegime(QExtendError):
    pass


class SizeTooLarge(QExtendError):
    pass


class BudgetExceeded(QExtendError):
    pass


class SetTooLarge(QExtendError):
    pass


class ConfigError(QExtendError):
    pass
