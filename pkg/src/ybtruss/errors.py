"""Exception hierarchy shared by the library and the CLI exit-code contract."""


class YBError(Exception):
    """Base class for all library errors."""


class InputError(YBError, ValueError):
    """Malformed input: bad shape, out-of-range entry, schema violation."""


class PreconditionError(YBError, ValueError):
    """Well-formed input that does not satisfy an operation's hypothesis."""


class ResourceError(YBError, RuntimeError):
    """Requested computation exceeds a configured budget."""


class InvariantError(YBError, AssertionError):
    """A proven identity failed to hold; signals a bug, not a data problem."""
