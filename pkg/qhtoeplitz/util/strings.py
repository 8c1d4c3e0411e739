"""Symbol and grid grammars used on the command line"""
# Standard Library
import re
from fractions import Fraction

# qhtoeplitz Modules
from qhtoeplitz.exceptions import SymbolParseError

NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?(?:/\d+)?")
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Scanner:

    """Cursor over a grammar string that knows its position for errors"""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    @property
    def done(self):
        self.skip_space()
        return self.pos >= len(self.text)

    def accept(self, token):
        self.skip_space()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            self.error("expected %r" % token)

    def number(self):
        self.skip_space()
        match = NUMBER_RE.match(self.text, self.pos)
        if not match:
            return None
        try:
            value = Fraction(match.group(0))
        except (ValueError, ZeroDivisionError):
            self.error("invalid number %r" % match.group(0))
        self.pos = match.end()
        return value

    def signed_number(self):
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        value = self.number()
        if value is None:
            self.error("expected a number")
        return sign * value

    def error(self, message):
        raise SymbolParseError(message, self.text, self.pos)


def _parse_term(scanner, sign):
    """Parse `c*r^m*log` where every part is optional but one is present"""
    coeff = Fraction(1)
    power = Fraction(0)
    logexp = 0
    start = scanner.pos
    seen = False

    value = scanner.number()
    if value is not None:
        coeff = value
        seen = True
        starred = scanner.accept("*")
        scanner.skip_space()
        if not scanner.text.startswith(("r", "log"), scanner.pos):
            if starred:
                scanner.error("expected 'r' or 'log'")
            return sign * coeff, power, logexp
    if scanner.accept("r"):
        seen = True
        power = Fraction(1)
        if scanner.accept("^"):
            if scanner.accept("("):
                power = scanner.signed_number()
                scanner.expect(")")
            else:
                power = scanner.signed_number()
        if scanner.accept("*"):
            if not scanner.accept("log"):
                scanner.error("expected 'log'")
            logexp = 1
    elif scanner.accept("log"):
        seen = True
        logexp = 1
    if logexp and scanner.accept("("):
        scanner.expect("r")
        scanner.expect(")")
    if not seen:
        scanner.pos = start
        scanner.error("expected a term")
    return sign * coeff, power, logexp


def parse_symbol(text):
    """Parse a radial symbol such as ``3*r^-1 - r^3`` or ``r^2*log``.

    Returns a list of (coeff, power, logexp) tuples of floats; reals may be
    written in decimal or as a fraction ``p/q``.
    """
    scanner = _Scanner(text or "")
    if scanner.done:
        scanner.error("empty symbol")
    sign = 1
    if scanner.accept("-"):
        sign = -1
    else:
        scanner.accept("+")
    terms = []
    while True:
        coeff, power, logexp = _parse_term(scanner, sign)
        terms.append((float(coeff), float(power), logexp))
        if scanner.done:
            break
        if scanner.accept("+"):
            sign = 1
        elif scanner.accept("-"):
            sign = -1
        else:
            scanner.error("expected '+' or '-'")
    return terms


def _grid_value(text):
    value = Fraction(text)
    if value.denominator == 1:
        return int(value)
    return float(value)


def parse_grid(text):
    """Parse a grid specification into an ordered dict of value lists.

    ``k1=-6..6,k2=-6..6,m=-1..7`` gives inclusive integer ranges,
    ``m=0.5|1|2.5`` an explicit list, ``m=3`` a single value.
    """
    grid = {}
    offset = 0
    for field in (text or "").split(","):
        position = offset + len(field) - len(field.lstrip())
        offset += len(field) + 1
        field = field.strip()
        if not field:
            raise SymbolParseError("empty grid field", text, position)
        name, sep, values = field.partition("=")
        name = name.strip()
        if not sep or not NAME_RE.fullmatch(name):
            raise SymbolParseError("expected name=values", text, position)
        if name in grid:
            raise SymbolParseError("duplicate grid axis %r" % name, text, position)
        values = values.strip()
        try:
            if ".." in values:
                low, high = (_grid_value(part.strip()) for part in values.split("..", 1))
                if not isinstance(low, int) or not isinstance(high, int):
                    raise SymbolParseError("ranges take integer bounds", text, position)
                if low > high:
                    raise SymbolParseError("empty range %s" % values, text, position)
                grid[name] = list(range(low, high + 1))
            else:
                grid[name] = [_grid_value(part.strip()) for part in values.split("|")]
        except (ValueError, ZeroDivisionError):
            raise SymbolParseError("invalid value in %r" % values, text, position)
    return grid


def format_real(value, max_denominator=1000):
    """Short text for a real: an integer, a small fraction or a decimal"""
    value = float(value)
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    fraction = Fraction(value).limit_denominator(max_denominator)
    if abs(float(fraction) - value) <= 1e-12 * max(1.0, abs(value)):
        return "%d/%d" % (fraction.numerator, fraction.denominator)
    return "%.15g" % value
