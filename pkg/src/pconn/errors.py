class PreconditionError(ValueError):
    """An input does not satisfy the hypothesis of the requested construction."""


class VerificationError(RuntimeError):
    """A construction produced an object that failed its own oracle check.

    This points at a bug (or a gap in the underlying argument), never at bad input.
    """
