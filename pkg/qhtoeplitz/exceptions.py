"""Exception handling module"""
# Standard Library
from functools import wraps

# qhtoeplitz Modules
from qhtoeplitz.util.log import logger


class ToeplitzError(Exception):

    """Base exception for qhtoeplitz related errors"""

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class SymbolDomainError(ToeplitzError):

    """A radial symbol term falls outside L¹([0,1], r dr) or uses an
    unsupported log exponent.
    """


class UnsupportedTermError(ToeplitzError):

    """The symbol algebra cannot represent the result in closed form"""


class PoleError(ToeplitzError):

    """A numerator Gamma factor has an uncancelled pole"""

    def __init__(self, message, z=None, argument=None):
        super().__init__(message)
        self.z = z
        self.argument = argument


class WindowTooSmall(ToeplitzError):

    """The requested index window does not cover the support bound"""

    def __init__(self, message, requested=None, required=None):
        super().__init__(message)
        self.requested = requested
        self.required = required


class MarginViolation(ToeplitzError):

    """A coefficient outside the theoretical support does not vanish"""

    def __init__(self, message, index=None, coefficient=None):
        super().__init__(message)
        self.index = index
        self.coefficient = coefficient


class QuadratureError(ToeplitzError):

    """Adaptive quadrature did not converge"""

    def __init__(self, message, panels=0):
        super().__init__(message)
        self.panels = panels


class ValidationMismatch(ToeplitzError):

    """Predicted and computed quantities disagree"""

    def __init__(self, message, field=None, expected=None, found=None):
        super().__init__(message)
        self.field = field
        self.expected = expected
        self.found = found


class SymbolParseError(ToeplitzError):

    """Raised by the symbol and grid grammars"""

    def __init__(self, message, text="", position=0):
        super().__init__("%s at position %d in %r" % (message, position, text))
        self.text = text
        self.position = position


class InvalidTheorem(ToeplitzError):

    """Unknown theorem family or verification suite"""


def watch_errors(function):
    """Decorator used to turn ToeplitzError exceptions into exit codes"""

    @wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except ToeplitzError as ex:
            logger.error(ex.message)
            return 2

    return wrapper
