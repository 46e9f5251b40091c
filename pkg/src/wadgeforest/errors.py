"""Exception hierarchy shared by every module."""


class WadgeError(Exception):
    """Base class for all library errors."""


class ParseError(WadgeError, ValueError):
    pass


class UnknownElement(WadgeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownBuiltin(WadgeError, ValueError):
    pass


class NotNormalForm(WadgeError, ValueError):
    pass


class InvariantViolation(WadgeError, ValueError):
    pass


class BadLength(WadgeError, ValueError):
    pass


class BadHead(WadgeError, ValueError):
    pass


class InvalidSelector(WadgeError, IndexError):
    pass


class JumpTermNotEvaluable(WadgeError, ValueError):
    pass


class NotReducible(WadgeError):
    pass


class ResourceLimit(WadgeError, RuntimeError):
    pass
