"""Exception types raised across the package."""


class C5CritError(Exception):
    """Base class for every error raised by c5crit."""


class InvalidVertex(C5CritError, ValueError):
    pass


class LoopRejected(C5CritError, ValueError):
    pass


class SameVertex(C5CritError, ValueError):
    pass


class WouldCreateLoop(C5CritError, ValueError):
    pass


class InvalidPin(C5CritError, ValueError):
    pass


class NotApplicable(C5CritError, ValueError):
    """Operation precondition on the coloring status of the input fails."""


class NotCritical(C5CritError, ValueError):
    pass


class NoSignature(C5CritError, ValueError):
    pass


class NotACycle(C5CritError, ValueError):
    pass


class AmbiguousRule(C5CritError, RuntimeError):
    """A discharging rule has no well-defined recipient (strict mode only)."""


class InvalidConstruction(C5CritError, ValueError):
    pass


class InvalidComposition(C5CritError, ValueError):
    pass


class ParseError(C5CritError, ValueError):
    """Malformed graph6 / edge-list input.

    ``offset`` is the byte offset of the offending character when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset
