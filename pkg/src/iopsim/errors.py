"""Exception hierarchy for the i-operator library."""


class IopsimError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(IopsimError):
    pass


class NotHermitian(IopsimError):
    pass


class NoConvergence(IopsimError):
    pass


class TraceNotOne(IopsimError):
    pass


class NotPositive(IopsimError):
    pass


class ResultNotIOperator(IopsimError):
    pass


class SupportViolation(IopsimError):
    pass


class ZeroProbabilityLabel(IopsimError):
    pass


class ZeroProbabilityOutcome(IopsimError):
    pass


class NotDefinitive(IopsimError):
    pass


class NotPure(IopsimError):
    pass


class ZeroVector(IopsimError):
    pass


class InsufficientPoints(IopsimError):
    pass


class BadSlitGeometry(IopsimError):
    pass


class UnknownScenario(IopsimError):
    pass


class BadParameter(IopsimError):
    pass


class ParseError(IopsimError):
    pass
