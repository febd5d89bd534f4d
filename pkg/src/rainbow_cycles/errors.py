from typing import Optional


class RainbowError(Exception):
    """
    Base class for every error raised by ``rainbow_cycles``.

    Parameters
    ----------
    message : str
        Human readable description.
    index : int | None
        0-based position of the offending family member, when one exists.

    Notes
    -----
    ``code`` is the stable name used in CLI error documents; it defaults to
    the class name.
    """

    def __init__(self, message: str, *, index: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.index = index

    @property
    def code(self) -> str:
        return self.__class__.__name__


# --- bad input -------------------------------------------------------------


class ParseError(RainbowError, ValueError):
    pass


class InvalidParameters(RainbowError, ValueError):
    pass


class WrongSize(RainbowError, ValueError):
    pass


class NotIndependent(RainbowError, ValueError):
    pass


class WrongCycleOrder(RainbowError, ValueError):
    pass


# --- tripwires: unreachable unless the implementation is wrong --------------


class NotAnArc(RainbowError, RuntimeError):
    pass


class NoValidK(RainbowError, RuntimeError):
    pass


class AssignmentOutOfArc(RainbowError, RuntimeError):
    pass


class ClaimViolation(RainbowError, RuntimeError):
    pass
