"""Exception hierarchy.

``InputError`` subclasses describe rejected inputs (CLI exit code 2);
``CertificateError`` means a computed witness failed re-verification,
which is always an internal bug (CLI exit code 3).
"""


class InputError(ValueError):
    """Input rejected before any verdict was computed."""


class CertificateError(RuntimeError):
    """A computed certificate failed exact re-verification."""


class NotPointed(InputError):
    def __init__(self, certificate):
        super().__init__(
            "cone is not pointed: both w and -w lie in the cone for w = "
            + ",".join(str(a) for a in certificate)
        )
        self.certificate = certificate


class NotGenerating(InputError):
    def __init__(self, direction):
        super().__init__(
            "cone is not generating: it spans a proper subspace missing direction "
            + ",".join(str(a) for a in direction)
        )
        self.direction = direction


class InconsistentReps(InputError):
    def __init__(self, message, certificate):
        super().__init__(f"generators and inequalities disagree: {message}")
        self.certificate = certificate


class DimensionMismatch(InputError):
    pass


class NotPositive(InputError):
    """An argument required to be >= 0 is not in the positive cone."""


class ZeroElement(InputError):
    """An argument required to be nonzero is zero."""


class NotALowerBound(InputError):
    pass
