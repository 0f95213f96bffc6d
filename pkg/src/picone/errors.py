"""Exception hierarchy shared by all modules."""


class PiconeError(ValueError):
    """Base class for all domain errors raised by this package."""


class NonPositiveU(PiconeError):
    pass


class NonPositiveV(PiconeError):
    pass


class NegativeV(PiconeError):
    pass


class BadExponent(PiconeError):
    pass


class ExponentOrder(PiconeError):
    pass


class NegativeInnerProduct(PiconeError):
    pass


class NonPositiveF(PiconeError):
    pass


class NonPositiveCoefficient(PiconeError):
    pass


class NegativeS(PiconeError):
    pass


class NotOutsideRegion(PiconeError):
    pass


class BadRange(PiconeError):
    pass


class GridMismatch(PiconeError):
    pass


class UnboundedRatio(PiconeError):
    pass


class NonPositiveWeightIntegral(PiconeError):
    pass


class NoConvergence(PiconeError):
    pass


class StepFailure(PiconeError):
    pass
