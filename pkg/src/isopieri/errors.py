"""Exception hierarchy shared by all modules.

Every domain error derives from :class:`DomainError` so the CLI can map
them to exit code 1 in one place.
"""


class DomainError(ValueError):
    pass


class InvalidParameters(DomainError):
    pass


class InvalidSymbol(DomainError):
    pass


class WrongLieType(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class NotLeq(DomainError):
    """Raised when T <= P (componentwise) fails."""


class NotPreceq(DomainError):
    """Raised when T is not below P in the Bruhat order."""


class UnknownSymbol(DomainError, KeyError):
    pass


class SizeLimitExceeded(DomainError):
    pass


class PreconditionViolated(DomainError):
    pass


class InvalidSpecial(DomainError):
    pass


class ModulusMismatch(DomainError):
    pass
