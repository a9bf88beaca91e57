"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ResourceLimit(RuntimeError):
    """An operation refused to run because a configured cap was exceeded."""


class TruncationError(RuntimeError):
    """A truncated enumerator's tail bound was too large for the request.

    Carries ``log_tail_bound``, the natural log of the omitted-tail bound.
    """

    def __init__(self, message: str, log_tail_bound: float):
        super().__init__(message)
        self.log_tail_bound = log_tail_bound


class CheckFailed(RuntimeError):
    """A verification check ran to completion and did not hold."""
