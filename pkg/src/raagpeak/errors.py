"""Exception types shared by the library and the command line."""


class RaagError(Exception):
    """Base class; `exit_code` is what the CLI returns for it."""

    exit_code = 1


class MalformedInput(RaagError):
    exit_code = 1


class NegativeDecision(RaagError):
    exit_code = 2


class CapExceeded(RaagError):
    exit_code = 3


class InternalError(RaagError):
    """A post-hoc verification failed; this is a bug, never user error."""

    exit_code = 4
