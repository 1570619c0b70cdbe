"""Exception hierarchy shared by every sfword module."""


class SfwordError(ValueError):
    """Base class for domain errors raised by sfword."""


class InvalidCharacter(SfwordError):
    pass


class NotInterior(SfwordError):
    pass


class NotSquareFree(SfwordError):
    pass


class TooShort(SfwordError):
    pass


class NotProlongable(SfwordError):
    pass


class ImageTooShort(SfwordError):
    pass


class MorphismSpecError(SfwordError):
    pass


class NoSuchLength(SfwordError):
    pass


class OutOfRange(SfwordError):
    pass


class VerificationFailed(SfwordError):
    """A constructed word failed its own irreducibility check."""


class NoRecurrence(SfwordError):
    pass
