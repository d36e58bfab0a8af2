"""Exception hierarchy.

Every error raised for bad input derives from :class:`InvalidInput`, which is
a :class:`ValueError`.  :class:`UnsupportedDimension` is kept apart because it
signals a configuration the library declines to handle, not malformed data.
"""


class InvalidInput(ValueError):
    """Input violates a documented invariant."""


class Disconnected(InvalidInput):
    pass


class DuplicateComponentId(InvalidInput):
    pass


class UnknownComponentInNode(InvalidInput):
    pass


class UnknownComponent(InvalidInput):
    pass


class NotProper(InvalidInput):
    """A subcurve must be nonempty and not the whole curve."""


class InvalidSheaf(InvalidInput):
    pass


class NonPositiveDegree(InvalidInput):
    pass


class ComponentMismatch(InvalidInput):
    pass


class AllZero(InvalidInput):
    """A stability parameter with every weight zero (or negative weights)."""


class ZeroMultirank(InvalidInput):
    pass


class OrderViolation(InvalidInput):
    pass


class BelowRegularity(InvalidInput):
    pass


class NonPositiveDenominator(InvalidInput):
    pass


class NonIntegralDimension(InvalidInput):
    pass


class UnsupportedDimension(Exception):
    """Chamber enumeration requested for k > 3 without opting into sampling."""
