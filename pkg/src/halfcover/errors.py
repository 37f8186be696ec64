"""Exception types shared across the solver suite."""


class HalfcoverError(Exception):
    """Base class for all package-specific errors."""


class EmptyInput(HalfcoverError):
    """An operation that needs at least one element got an empty sequence."""


class GenericityFailure(HalfcoverError):
    """No rotation in the fixed triple list produced a generic instance."""


class HalfplaneContainsCenter(HalfcoverError):
    """A star-coverage halfplane contains the polygon's center point."""


class NotStarShaped(HalfcoverError):
    """Polygon vertices are not star-shaped around the given center."""


class SubsetViolation(HalfcoverError):
    """Kernel candidate is not a subset of the ground set."""


class CapExceeded(HalfcoverError):
    """Brute-force kernel input larger than the configured cap."""


class BudgetExceeded(HalfcoverError):
    """Oracle enumeration would exceed its declared budget."""


class InvalidInstance(HalfcoverError):
    """Instance file or in-memory instance fails validation."""
