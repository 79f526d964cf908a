"""Exception hierarchy.

Every domain error carries a short ``code`` (the class name without the
``Error`` suffix) so that the command line can report which invariant or
precondition failed.
"""


class ExoticError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        name = type(self).__name__
        return name[:-5] if name.endswith("Error") else name


class BadParametersError(ExoticError, ValueError):
    pass


# -- diagram validation -------------------------------------------------------

class DiagramError(ExoticError, ValueError):
    """A raw connection table violates a cup diagram invariant."""


class CrossingError(DiagramError):
    pass


class DanglingCupError(DiagramError):
    pass


class RayInsideCupError(DiagramError):
    pass


class HalfCupInsideCupError(DiagramError):
    pass


class RayRightOfHalfCupError(DiagramError):
    pass


class BadIndexError(DiagramError):
    pass


class NotStandardError(ExoticError, ValueError):
    pass


class ShapeMismatchError(ExoticError, ValueError):
    pass


class NotARayError(ExoticError, ValueError):
    pass


class NotAPartitionError(ExoticError, ValueError):
    pass


# -- other modules ------------------------------------------------------------

class SizeMismatchError(ExoticError, ValueError):
    pass


class BadPointError(ExoticError, ValueError):
    pass


class DegreeTooLargeError(ExoticError, ValueError):
    pass


class ParameterMismatchError(ExoticError, ValueError):
    pass


class IndexOutOfRangeError(ExoticError, ValueError):
    pass


class GroupTooLargeError(ExoticError, ValueError):
    pass


class ParseError(ExoticError, ValueError):
    """Malformed textual input (words, ring expressions, group elements)."""
