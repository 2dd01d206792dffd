"""Exception types shared across the package."""


class AreaZeroError(ArithmeticError):
    """The signed area is zero, so the shoelace centroid is undefined."""


class WrongSizeError(ValueError):
    """The operation requires a polygon with a specific vertex count."""


class UnsupportedSizeError(ValueError):
    """No counterexample polygon exists for this vertex count."""


class InsufficientDataError(RuntimeError):
    """Too few defined centroids to anchor a verification."""


class DegenerateDenominatorError(ArithmeticError):
    """The closed-form centroid denominator vanished (zero-area iterate)."""


class PolygonDocumentError(ValueError):
    """A polygon document is malformed."""


class ExactModeError(PolygonDocumentError):
    """A decimal coordinate was supplied to the exact parsing mode."""
