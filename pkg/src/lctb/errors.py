"""Exception and warning types shared across the package."""


class LctbError(Exception):
    """Base class for all library errors."""


class DeterminantError(LctbError):
    """Parameter tuple (a, b, c, d) does not satisfy ad - bc = 1."""


class NonFiniteError(LctbError):
    """An input contains NaN or infinity."""


class BranchError(LctbError):
    """Operation requires the other branch of the transform (b = 0 vs b != 0)."""


class DomainError(LctbError):
    """A requested evaluation point lies outside the sampled domain."""


class GridError(LctbError):
    """Sampling grids are incompatible (step mismatch or off-lattice offset)."""


class ToleranceError(LctbError):
    """A constructed object violates its compatibility tolerance."""


class ShapeError(LctbError):
    """Sequence depths or representation shapes do not match."""


class SmoothnessError(LctbError):
    """The supplied delta family is not smooth enough for the requested derivative."""


class TruncationWarning(UserWarning):
    """Signal is not negligible at its grid boundary; results include truncation error."""


class ConvergenceWarning(UserWarning):
    """A diagnostic sequence that should decrease failed to do so."""
