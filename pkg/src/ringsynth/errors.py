"""Exception hierarchy shared by all modules."""


class RingSynthError(Exception):
    exit_code = 1


class ParseError(RingSynthError, ValueError):
    exit_code = 1


class DomainError(RingSynthError, ValueError):
    """An element or matrix lies outside the ring an operation requires."""
    exit_code = 3


class NotUnitaryError(RingSynthError, ValueError):
    exit_code = 2


class UnsupportedError(RingSynthError):
    exit_code = 3


class DeterminantError(UnsupportedError):
    """Ancilla-free synthesis requested for a matrix whose determinant is not 1."""


class VerificationError(RingSynthError):
    exit_code = 4


class AncillaError(VerificationError):
    """A circuit broke its clean or dirty ancilla contract."""
