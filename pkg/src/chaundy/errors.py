"""Exception types shared by every module."""


class DomainError(ValueError):
    """Inputs fall outside the region where an operation is defined."""


class ResourceError(ValueError):
    """An exhaustive oracle was asked for a problem too large to enumerate."""


class PropertyFailure(AssertionError):
    """An identity that must hold exactly did not.

    Reaching this in a correct build is a bug, never a user error.
    """
