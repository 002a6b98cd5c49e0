"""Exception hierarchy shared by every module."""


class TGPError(Exception):
    """Base class for all errors raised by the package."""


class ParseError(TGPError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class MalformedPresentation(TGPError, ValueError):
    """An edge label does not occur exactly twice."""


class UnknownEdge(TGPError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class TooLarge(TGPError, ValueError):
    """The requested enumeration exceeds its configured bound."""


class VariableMismatch(TGPError, ValueError):
    pass


class MissingVariable(TGPError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InsufficientAdmissiblePoints(TGPError, ValueError):
    pass


class NotAValuation(TGPError, ValueError):
    pass


class LoopPattern(TGPError, ValueError):
    """The distinguished edge of a tensor pattern is a loop."""


class SingularSystem(TGPError, ZeroDivisionError):
    pass


class UnknownIdentity(TGPError, KeyError):
    def __str__(self):
        return Exception.__str__(self)
