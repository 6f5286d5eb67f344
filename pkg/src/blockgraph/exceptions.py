class BlockGraphError(ValueError):
    """Base class for all errors raised by this package."""


class GraphFormatError(BlockGraphError):
    """Malformed graph text or invalid construction arguments."""


class NotBlockGraphError(BlockGraphError):
    """Raised when an operation requires a block graph and gets something else."""


class PreconditionError(BlockGraphError):
    """An operation was called outside its documented domain."""


class OracleSizeError(BlockGraphError):
    """The graph is larger than the exact-determinant size guard allows."""
