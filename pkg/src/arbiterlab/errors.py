"""Exception types raised by arbiterlab."""


class ArbiterLabError(ValueError):
    """Base class for all input and contract errors in this package."""


class IdenticalPayoffs(ArbiterLabError):
    pass


class NotSymmetric(ArbiterLabError):
    pass


class NotNormalized(ArbiterLabError):
    """Raised when a state or profile does not have unit norm.

    The measured squared norm is kept on ``norm`` so callers can report it.
    """

    def __init__(self, norm: float, message: str | None = None):
        self.norm = norm
        super().__init__(message or f"state is not normalized: squared norm = {norm!r}")


class SymmetryViolated(ArbiterLabError):
    pass


class InvalidTarget(ArbiterLabError):
    pass
