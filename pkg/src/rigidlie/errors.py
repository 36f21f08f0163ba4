"""Exception types shared across the package."""


class RigidLieError(Exception):
    """Base class for all errors raised by rigidlie."""


class FieldError(RigidLieError, ValueError):
    """An operation was asked to work over the wrong base field."""


class StructureError(RigidLieError, ValueError):
    """Malformed input: bad indices, wrong dimensions, unparseable data."""


class SingularMatrixError(RigidLieError, ValueError):
    """A matrix that had to be invertible is singular.

    ``witness`` is a nonzero kernel vector.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSplitError(RigidLieError):
    """A polynomial does not split into linear factors over the working field."""

    def __init__(self, message, factor=None, element=None):
        super().__init__(message)
        self.factor = factor
        self.element = element


class NotSolvableError(RigidLieError):
    pass


class NotDiagonalizableError(RigidLieError):
    def __init__(self, message, element=None, minpoly=None):
        super().__init__(message)
        self.element = element
        self.minpoly = minpoly
