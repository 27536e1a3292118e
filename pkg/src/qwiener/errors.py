"""Exception hierarchy shared by every module."""


class QWienerError(Exception):
    """Base class for all library errors."""


class DomainError(QWienerError, ValueError):
    pass


class StructureError(QWienerError):
    """A matrix or series violates the structure it is required to carry."""


class AliasError(QWienerError):
    pass


class SizeError(QWienerError, ValueError):
    pass


class GridError(QWienerError, ValueError):
    pass


class NotPlusError(QWienerError, ValueError):
    pass


class ConvergenceError(QWienerError):
    pass


class ClassificationError(QWienerError):
    pass


class NotInvertibleError(QWienerError):
    """Raised when a symbol vanishes (or nearly vanishes) on the relevant set.

    ``min_abs`` is the smallest modulus observed and ``witness`` the
    location where it was attained (an angle, a line parameter or a root).
    """

    def __init__(self, message, min_abs=None, witness=None):
        super().__init__(message)
        self.min_abs = min_abs
        self.witness = witness


class NotPositiveError(QWienerError):
    def __init__(self, message, min_eig=None, witness=None):
        super().__init__(message)
        self.min_eig = min_eig
        self.witness = witness


class DocumentError(QWienerError, ValueError):
    """A serialized document is malformed or of the wrong kind."""
