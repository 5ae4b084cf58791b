"""Exception hierarchy for fockcalc."""


class FockcalcError(Exception):
    """Base class for all fockcalc errors."""


class PartitionError(FockcalcError, ValueError):
    """Invalid partition data."""


class NonMonotone(PartitionError):
    """Parts are not weakly decreasing."""


class Negative(PartitionError):
    """A part is negative."""


class InsufficientWindow(FockcalcError, ValueError):
    """A windowed computation cannot guarantee exact coefficients."""


class ShapeOutOfBox(FockcalcError, ValueError):
    """A shape does not fit the r x (n-r) box."""


class DimensionMismatch(FockcalcError, ValueError):
    """Operands of incompatible sizes."""


class ChargeMixed(FockcalcError, ValueError):
    """An operation needs a vector homogeneous in charge."""


class ExprParseError(FockcalcError, ValueError):
    """An operator expression could not be parsed."""


class ConfigError(FockcalcError, ValueError):
    """Invalid configuration value."""
