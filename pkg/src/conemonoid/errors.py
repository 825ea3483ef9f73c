"""Exception hierarchy with machine-readable error codes used by the CLI."""


class ConemonoidError(Exception):
    """Base class; ``code`` is the stable machine-readable identifier."""

    code = "error"


class QuadFieldError(ConemonoidError):
    code = "incompatible-quadratic-fields"


class NotPointedError(ConemonoidError):
    code = "not-pointed"


class WindowTooSmallError(ConemonoidError):
    code = "window-too-small"


class NotInteriorError(ConemonoidError):
    code = "x-not-interior"


class GeneratorsInsufficientError(ConemonoidError):
    code = "generators-insufficient"


class NotMemberError(ConemonoidError):
    code = "not-a-member"


class StepInGammaError(ConemonoidError):
    code = "s-in-gamma"


class RationalBoundError(ConemonoidError):
    code = "rational-bound"


class BoundOrderError(ConemonoidError):
    code = "alpha-ge-beta"


class BoundExhaustedError(ConemonoidError):
    code = "bound-exhausted"


class CertificateInvalidError(ConemonoidError):
    code = "certificate-invalid"


class NotOhfmError(ConemonoidError):
    code = "not-ohfm"


class SpecError(ConemonoidError):
    """Malformed or unsupported analysis request."""

    code = "bad-spec"
