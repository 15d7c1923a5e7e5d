"""Exception types shared across the package."""


class LdcellError(Exception):
    """Base class for package-specific errors."""


class RegimeError(LdcellError):
    """Raised when a formula or constructor is used outside its
    interference regime of validity."""


class CapacityError(LdcellError):
    """Raised when an exhaustive operation exceeds its size or node budget.

    The ``partial`` attribute, when set, carries the best result found
    before the budget ran out.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class ConstructionError(LdcellError):
    """Raised when no verified scheme reaching the target rate was found.

    ``best`` carries the best verified scheme encountered (possibly empty).
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best
