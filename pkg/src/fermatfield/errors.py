"""Exception hierarchy.

Every error raised by the library derives from :class:`FermatFieldError`.
The CLI maps :class:`BoundError` to exit code 4 and every other
:class:`DomainError` to exit code 3; the class name is reported verbatim.
"""


class FermatFieldError(Exception):
    pass


class DomainError(FermatFieldError, ValueError):
    pass


class BoundError(FermatFieldError, ValueError):
    """An exhaustive computation was asked to run beyond its declared limit."""


# modarith
class NotPrime(DomainError):
    pass


class ZeroInverse(DomainError, ZeroDivisionError):
    pass


class EvenModulus(DomainError):
    pass


# polyring
class DivisionByZeroPoly(DomainError, ZeroDivisionError):
    pass


class BothZero(DomainError):
    pass


class ConstantPolynomial(DomainError):
    pass


class ModulusMismatch(DomainError):
    pass


# galois
class ReduciblePolynomial(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class NotMonic(DomainError):
    pass


class FieldMismatch(DomainError):
    pass


class ZeroElement(DomainError):
    pass


class ZeroSource(DomainError):
    pass


class FieldTooLarge(BoundError):
    pass


# fermat
class IncompleteSurvey(DomainError):
    pass


class NoCoreExponent(DomainError):
    pass


# elliptic
class SingularCurve(DomainError):
    pass


class NonInvertibleLeadingCoefficient(DomainError):
    pass


class PointNotOnCurve(DomainError):
    pass


class SmallCharacteristic(DomainError):
    pass


class BadReduction(DomainError):
    pass


class CharacteristicDividesM(DomainError):
    pass


class SmallPrime(DomainError):
    pass


class ZeroParameter(DomainError):
    pass


class ExtensionBoundExceeded(BoundError):
    pass


# metricgeom
class InexactMetricForOddExponent(DomainError):
    pass


class InexactMetric(DomainError):
    pass
