"""Exception types raised across the toolkit."""


class GldIqaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidImage(GldIqaError):
    """A raster could not be decoded or has no pixels."""


class PairMismatch(GldIqaError):
    """Reference and test rasters have different pixel dimensions."""


class InvalidArgument(GldIqaError):
    """A parameter is outside its documented range."""


class DegenerateSaliency(GldIqaError):
    """Both saliency maps are identically zero; pooling weights vanish."""


class DegenerateSeries(GldIqaError):
    """A score series is constant (or too short) for the requested statistic."""


class ParseError(GldIqaError):
    """A manifest or report file violates its schema.

    ``line`` carries the 1-based offending line number when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class IncompatibleReports(GldIqaError):
    """Two evaluation reports do not cover the same scored record sets."""
