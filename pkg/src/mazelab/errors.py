"""Exception types shared across the package."""


class MazelabError(Exception):
    """Base class for all package-specific errors."""


class NoValidStartError(MazelabError):
    """No node satisfies the start-position constraints for this maze."""


class NoPathError(MazelabError):
    """The requested endpoints are not connected."""


class InvalidPathError(MazelabError):
    """A node sequence is not a valid simple walk in the maze."""


class ShapeError(MazelabError):
    """Two rasters that must share a side length do not."""


class NumericalDivergenceError(MazelabError):
    """An iterative map produced a non-finite value."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class TrajectoryFormatError(MazelabError):
    """A trajectory file is malformed; ``offset`` is the failing byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class RangeError(MazelabError):
    """An index or parameter is outside its documented range."""


class SpecError(MazelabError):
    """A synthetic-trajectory spec is internally inconsistent."""


class MatrixError(MazelabError):
    """A distance matrix is not symmetric nonnegative with zero diagonal."""


class ConfigError(MazelabError):
    """An experiment configuration is invalid."""
