"""Radial symbols, Mellin transforms and Gamma-ratio evaluation.

A radial symbol is a finite sum of terms c·r^p·(log r)^e with p > -2 and
e in {0, 1}. Its Mellin transform ∫₀¹ f(r) r^(z-1) dr is rational in z:
r^p maps to 1/(z+p) and r^p·log r to -1/(z+p)². The transforms that the
finite-rank criteria produce are ratios of Gamma functions; they are either
inverted back to a radial symbol by partial fractions or kept on the Mellin
side and evaluated through log-Gamma.
"""
# Standard Library
import enum
import math
from collections import namedtuple

# Third Party Libraries
import numpy as np
from scipy import special

# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult
from qhtoeplitz.exceptions import PoleError, SymbolDomainError, UnsupportedTermError
from qhtoeplitz.util import strings
from qhtoeplitz.util.log import logger

# Powers must stay above this to be integrable against r dr
POWER_FLOOR = -2.0

Term = namedtuple("Term", ("coeff", "power", "logexp"))
NotRational = namedtuple("NotRational", ("reason",))


def _snap(value, tolerance=1e-12):
    """Round values that are integers up to floating point noise"""
    nearest = round(value)
    if abs(value - nearest) <= tolerance:
        return float(nearest)
    return float(value)


def nonpositive_integer(value, tolerance=None):
    """Return n if value == -n for a natural number n, None otherwise"""
    if tolerance is None:
        tolerance = settings.INTEGRALITY_TOLERANCE
    nearest = round(value)
    if nearest <= 0 and abs(value - nearest) <= tolerance:
        return int(-nearest)
    return None


def odd_multiple_index(m, k1, tolerance=None):
    """Return n >= 0 such that m = (2n+1)·k1, or None"""
    if tolerance is None:
        tolerance = settings.INTEGRALITY_TOLERANCE
    ratio = (m / k1 - 1) / 2
    nearest = round(ratio)
    if nearest >= 0 and abs(ratio - nearest) <= tolerance:
        return int(nearest)
    return None


class RadialSymbol:

    """Finite sum of c·r^p·(log r)^e terms, p > -2, e in {0, 1}.

    Terms sharing (power, logexp) are merged and zero coefficients dropped,
    so two symbols are equal exactly when their term tuples are.
    """

    def __init__(self, terms=()):
        merged = {}
        for term in terms:
            coeff = float(term[0])
            if coeff == 0:
                continue
            power = _snap(float(term[1]))
            logexp = int(term[2]) if len(term) > 2 else 0
            if logexp not in (0, 1):
                raise SymbolDomainError("log exponent %s is not supported" % logexp)
            if not power > POWER_FLOOR:
                raise SymbolDomainError(
                    "r^%s is not integrable against r dr" % strings.format_real(power)
                )
            merged[(power, logexp)] = merged.get((power, logexp), 0.0) + coeff
        self.terms = tuple(
            Term(coeff, power, logexp)
            for (power, logexp), coeff in sorted(merged.items())
            if coeff != 0
        )

    @classmethod
    def monomial(cls, power, coeff=1.0, logexp=0):
        return cls([(coeff, power, logexp)])

    @classmethod
    def constant(cls, value):
        return cls([(value, 0, 0)])

    @classmethod
    def parse(cls, text):
        """Build a symbol from the command line grammar, e.g. ``3*r^-1 - r^3``"""
        return cls(strings.parse_symbol(text))

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = RadialSymbol.constant(other)
        if not isinstance(other, RadialSymbol):
            return NotImplemented
        return RadialSymbol(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return RadialSymbol((-term.coeff, term.power, term.logexp) for term in self.terms)

    def __sub__(self, other):
        if isinstance(other, (int, float, RadialSymbol)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return RadialSymbol((term.coeff * other, term.power, term.logexp) for term in self.terms)
        if not isinstance(other, RadialSymbol):
            return NotImplemented
        terms = []
        for left in self.terms:
            for right in other.terms:
                if left.logexp + right.logexp > 1:
                    raise UnsupportedTermError("product %s · %s needs a squared logarithm" % (self, other))
                terms.append((left.coeff * right.coeff, left.power + right.power, left.logexp + right.logexp))
        return RadialSymbol(terms)

    __rmul__ = __mul__

    def __truediv__(self, number):
        return self * (1.0 / number)

    def shift(self, power):
        """Multiply by r^power"""
        return RadialSymbol((term.coeff, term.power + power, term.logexp) for term in self.terms)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        total = np.zeros_like(r)
        for term in self.terms:
            value = term.coeff * np.power(r, term.power)
            if term.logexp:
                value = value * np.log(r)
            total = total + value
        if total.ndim == 0:
            return float(total)
        return total

    def __eq__(self, other):
        return isinstance(other, RadialSymbol) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return all(term.power == 0 and term.logexp == 0 for term in self.terms)

    @property
    def powers(self):
        return sorted({term.power for term in self.terms})

    @property
    def magnitude(self):
        return max((abs(term.coeff) for term in self.terms), default=0.0)

    def almost_equal(self, other, tolerance=1e-9):
        scale = max(1.0, self.magnitude, other.magnitude)
        difference = self - other
        return all(abs(term.coeff) <= tolerance * scale for term in difference.terms)

    def proportional_to(self, other, tolerance=1e-9):
        """Return C with self = C·other, or None"""
        if self.is_zero or other.is_zero:
            return None
        lead = other.terms[-1]
        for term in self.terms:
            if (term.power, term.logexp) == (lead.power, lead.logexp):
                ratio = term.coeff / lead.coeff
                break
        else:
            return None
        if self.almost_equal(other * ratio, tolerance):
            return ratio
        return None

    def as_text(self):
        if not self.terms:
            return "0"
        parts = []
        for index, term in enumerate(self.terms):
            magnitude = abs(term.coeff)
            factors = []
            if term.power != 0:
                factors.append("r" if term.power == 1 else "r^%s" % strings.format_real(term.power))
            if term.logexp:
                factors.append("log")
            if not factors or magnitude != 1:
                factors.insert(0, strings.format_real(magnitude))
            text = "*".join(factors)
            if index == 0:
                parts.append("-" + text if term.coeff < 0 else text)
            else:
                parts.append(("- " if term.coeff < 0 else "+ ") + text)
        return " ".join(parts)

    def __str__(self):
        return self.as_text()

    def __repr__(self):
        return "RadialSymbol(%r)" % self.as_text()

    def to_dict(self):
        return {
            "text": self.as_text(),
            "terms": [[term.coeff, term.power, term.logexp] for term in self.terms],
        }


def _gamma_product(numerator, denominator, prefactor=1.0):
    """Evaluate prefactor·∏Γ(x)/∏Γ(y) through log-Gamma with sign tracking.

    A Gamma argument at a nonpositive integer -n is replaced by its residue
    (-1)^n/n!; the returned order counts numerator poles minus denominator
    poles. The value is only meaningful when the order is 0.
    """
    if prefactor == 0:
        return 0.0, 0
    log_abs = math.log(abs(prefactor))
    sign = math.copysign(1.0, prefactor)
    order = 0
    for argument in numerator:
        n = nonpositive_integer(argument)
        if n is None:
            log_abs += float(special.gammaln(argument))
            sign *= float(special.gammasgn(argument))
        else:
            order += 1
            log_abs -= float(special.gammaln(n + 1))
            sign *= (-1) ** n
    for argument in denominator:
        n = nonpositive_integer(argument)
        if n is None:
            log_abs -= float(special.gammaln(argument))
            sign *= float(special.gammasgn(argument))
        else:
            order -= 1
            log_abs += float(special.gammaln(n + 1))
            sign *= (-1) ** n
    return sign * math.exp(log_abs), order


class GammaRatioTransform:

    """C·∏Γ((z+aᵢ)/s) / ∏Γ((z+bⱼ)/s)"""

    def __init__(self, prefactor, scale, num_offsets, den_offsets):
        if len(num_offsets) != len(den_offsets):
            raise ValueError("Gamma ratio needs as many numerator as denominator factors")
        if not scale > 0:
            raise ValueError("Gamma ratio scale must be positive, got %s" % scale)
        self.prefactor = float(prefactor)
        self.scale = float(scale)
        self.num_offsets = tuple(float(offset) for offset in num_offsets)
        self.den_offsets = tuple(float(offset) for offset in den_offsets)

    @classmethod
    def commutator_family(cls, k1, k2, m, prefactor=1.0):
        """φ̂ for which [T_{e^{ik1θ}r^m}, T_{e^{ik2θ}φ}] can have finite rank, k1 > 0"""
        return cls(prefactor, 2 * k1, (k2, m + k1 - k2), (2 * k1 - k2, m + k1 + k2))

    @classmethod
    def product_family(cls, k1, k2, m, prefactor=1.0):
        """ψ̂ paired with commutator_family in T_{e^{ik1θ}r^m}T_{e^{ik2θ}φ} - T_{e^{i(k1+k2)θ}ψ}"""
        return cls(prefactor, 2 * k1, (k1 + k2, m - k2), (k1 - k2, m + 2 * k1 + k2))

    def numerator_arguments(self, z):
        return [(z + offset) / self.scale for offset in self.num_offsets]

    def denominator_arguments(self, z):
        return [(z + offset) / self.scale for offset in self.den_offsets]

    def __call__(self, z):
        return gamma_ratio_eval(self, z)

    def scaled(self, factor):
        return GammaRatioTransform(self.prefactor * factor, self.scale, self.num_offsets, self.den_offsets)

    def poles(self, zmin=2.0, zmax=None):
        """Real z >= zmin where a numerator Gamma pole is left uncancelled"""
        tolerance = settings.INTEGRALITY_TOLERANCE
        candidates = set()
        for offset in self.num_offsets:
            step = 0
            while True:
                z = -offset - self.scale * step
                if z < zmin - tolerance:
                    break
                if zmax is None or z <= zmax + tolerance:
                    candidates.add(_snap(z, tolerance))
                step += 1
        poles = []
        for z in sorted(candidates):
            _value, order = _gamma_product(self.numerator_arguments(z), self.denominator_arguments(z))
            if order > 0:
                poles.append(z)
        return poles

    def __repr__(self):
        return "GammaRatioTransform(%s, scale=%s, num=%s, den=%s)" % (
            strings.format_real(self.prefactor),
            strings.format_real(self.scale),
            [strings.format_real(offset) for offset in self.num_offsets],
            [strings.format_real(offset) for offset in self.den_offsets],
        )

    def to_dict(self):
        return {
            "prefactor": self.prefactor,
            "scale": self.scale,
            "num_offsets": list(self.num_offsets),
            "den_offsets": list(self.den_offsets),
        }


def gamma_ratio_eval(ratio, z):
    """Value of a GammaRatioTransform at real z.

    Raises PoleError when a numerator pole at z is not cancelled by the
    denominator; a surplus of denominator poles gives 0.
    """
    value, order = _gamma_product(
        ratio.numerator_arguments(z), ratio.denominator_arguments(z), ratio.prefactor
    )
    if order > 0:
        logger.debug("Pole of %s at z=%s", ratio, z)
        arguments = [arg for arg in ratio.numerator_arguments(z) if nonpositive_integer(arg) is not None]
        raise PoleError("%r has a pole at z=%s" % (ratio, z), z=z, argument=arguments[0])
    if order < 0:
        return 0.0
    return value


def _closed_form(symbol, z):
    value = 0.0
    for term in symbol.terms:
        shift = z + term.power
        if shift == 0:
            raise PoleError("Mellin transform of %s has a pole at z=%s" % (symbol, z), z=z, argument=shift)
        if term.logexp:
            value -= term.coeff / (shift * shift)
        else:
            value += term.coeff / shift
    return value


class MellinTransform:

    """Mellin-side radial part: a closed form, Gamma ratios, or a sum of both.

    Values are cached per z since operator coefficients evaluate the same
    points over and over.
    """

    def __init__(self, symbol=None, ratios=()):
        self.ratios = tuple(ratios)
        if symbol is None and not self.ratios:
            symbol = RadialSymbol()
        self.symbol = symbol
        self._cache = {}

    @property
    def variant(self):
        return "gamma-side" if self.ratios else "closed-form"

    @property
    def witness(self):
        """The radial symbol when the transform is known in closed form"""
        if self.ratios:
            return None
        return self.symbol

    def __call__(self, z):
        key = float(z)
        try:
            return self._cache[key]
        except KeyError:
            pass
        value = 0.0
        if self.symbol is not None:
            value += _closed_form(self.symbol, key)
        for ratio in self.ratios:
            value += gamma_ratio_eval(ratio, key)
        self._cache[key] = value
        return value

    def __add__(self, other):
        other = as_transform(other)
        if self.symbol is None or other.symbol is None:
            symbol = self.symbol if other.symbol is None else other.symbol
        else:
            symbol = self.symbol + other.symbol
        return MellinTransform(symbol, self.ratios + other.ratios)

    __radd__ = __add__

    def __mul__(self, factor):
        if not isinstance(factor, (int, float)):
            return NotImplemented
        symbol = self.symbol * factor if self.symbol is not None else None
        return MellinTransform(symbol, [ratio.scaled(factor) for ratio in self.ratios])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __repr__(self):
        if self.ratios:
            return "MellinTransform(%r, %r)" % (self.symbol, list(self.ratios))
        return "MellinTransform(%r)" % self.symbol

    def to_dict(self):
        data = {"variant": self.variant}
        if self.symbol is not None and not self.symbol.is_zero:
            data["symbol"] = self.symbol.to_dict()
        if self.ratios:
            data["ratios"] = [ratio.to_dict() for ratio in self.ratios]
        return data


def mellin_of_symbol(symbol):
    """Closed-form Mellin transform of a radial symbol"""
    return MellinTransform(symbol=symbol)


def as_transform(value):
    """Coerce a symbol, Gamma ratio, number or transform to a MellinTransform"""
    if isinstance(value, MellinTransform):
        return value
    if isinstance(value, RadialSymbol):
        return MellinTransform(symbol=value)
    if isinstance(value, GammaRatioTransform):
        return MellinTransform(ratios=[value])
    if isinstance(value, (int, float)):
        return MellinTransform(symbol=RadialSymbol.constant(value))
    raise TypeError("Can't build a Mellin transform from %r" % (value,))


def _convolve_terms(left, right):
    """Mellin convolution of two single terms as a list of terms"""
    if left.logexp and right.logexp:
        raise UnsupportedTermError("Mellin convolution of two logarithmic terms")
    if right.logexp:
        left, right = right, left
    coeff = left.coeff * right.coeff
    a, b = left.power, right.power
    if not left.logexp:
        if a == b:
            return [(-coeff, a, 1)]
        return [(coeff / (b - a), a, 0), (-coeff / (b - a), b, 0)]
    if a == b:
        raise UnsupportedTermError("convolving r^%s·log r with r^%s needs a squared logarithm" % (a, b))
    # -1/((z+a)²(z+b)) split over (z+a)², (z+a) and (z+b)
    gap = b - a
    return [(coeff / gap, a, 1), (coeff / gap ** 2, a, 0), (-coeff / gap ** 2, b, 0)]


def mellin_convolve(first, second):
    """(f ∗ g)(r) = ∫_r¹ f(r/t) g(t) dt/t for radial symbols, in closed form"""
    terms = []
    for left in first.terms:
        for right in second.terms:
            terms.extend(_convolve_terms(left, right))
    return RadialSymbol(terms)


def gamma_ratio_to_partial_fractions(ratio):
    """Invert a telescoping Gamma ratio to a radial symbol.

    Offsets are paired by residue class modulo the scale; each pair collapses
    to a finite product of linear factors. The resulting proper rational
    function is split into simple fractions (r^p terms) and double ones
    (r^p·log r terms). Anything else comes back as NotRational.
    """
    tolerance = settings.INTEGRALITY_TOLERANCE
    scale = ratio.scale
    unmatched = list(ratio.den_offsets)
    numerator_roots = []
    denominator_roots = []
    constant = ratio.prefactor
    for top in ratio.num_offsets:
        for index, bottom in enumerate(unmatched):
            steps = (bottom - top) / scale
            if abs(steps - round(steps)) <= tolerance:
                break
        else:
            return NotRational("offset %s does not telescope" % strings.format_real(top))
        del unmatched[index]
        steps = int(round(steps))
        # Γ(x)/Γ(x+d) = 1/∏(x+i), factors (z + top + s·i)/s
        for step in range(steps):
            denominator_roots.append(top + scale * step)
            constant *= scale
        for step in range(-steps):
            numerator_roots.append(bottom + scale * step)
            constant /= scale

    remaining = []
    for root in denominator_roots:
        for index, other in enumerate(numerator_roots):
            if abs(other - root) <= tolerance:
                del numerator_roots[index]
                break
        else:
            remaining.append(root)
    denominator_roots = remaining

    if len(numerator_roots) >= len(denominator_roots):
        return NotRational(
            "improper ratio of degree %d over %d" % (len(numerator_roots), len(denominator_roots))
        )

    clusters = []
    for root in sorted(denominator_roots):
        if clusters and abs(clusters[-1][0] - root) <= tolerance:
            clusters[-1][1] += 1
        else:
            clusters.append([root, 1])

    terms = []
    for root, multiplicity in clusters:
        if multiplicity > 2:
            return NotRational("factor of multiplicity %d at z=%s" % (multiplicity, strings.format_real(-root)))
        if not root > POWER_FLOOR:
            return NotRational("pole at z=%s" % strings.format_real(-root))
        others = [other for other in denominator_roots if abs(other - root) > tolerance]
        value = constant
        for other in numerator_roots:
            value *= other - root
        for other in others:
            value /= other - root
        if multiplicity == 1:
            terms.append((value, root, 0))
        else:
            slope = sum(1.0 / (other - root) for other in numerator_roots)
            slope -= sum(1.0 / (other - root) for other in others)
            terms.append((value * slope, root, 0))
            terms.append((-value, root, 1))
    return RadialSymbol(terms)


class TransformFamily(enum.Enum):
    COMMUTATOR = "phi"
    PRODUCT = "psi"


TFunctionCase = namedtuple("TFunctionCase", ("family", "case_id", "n"))


def t_function_classify(family, k1, k2, m):
    """Which case makes the Gamma-side transform of `family` a T-function.

    family COMMUTATOR: φ̂ from GammaRatioTransform.commutator_family, cases
        (1) k2 <= -2 and m + k1 = 0, (2) -2 < k2 < m+k1+2,
        (3) k2 >= m+k1+2 and m = (2n+1)k1.
    family PRODUCT: ψ̂ from GammaRatioTransform.product_family, cases
        (1) k2 <= -k1-2 and m + k1 = 0, (2) -k1-2 < k2 < m+2,
        (3) k2 >= m+2 and m = (2n+1)k1.
    """
    family = TransformFamily(family)
    if k1 <= 0:
        raise ValueError("t_function_classify expects k1 > 0, got %s" % k1)
    if m < -1:
        raise SymbolDomainError("exponent m=%s is below -1" % m)
    tolerance = settings.INTEGRALITY_TOLERANCE
    if family is TransformFamily.COMMUTATOR:
        low, high = -2, m + k1 + 2
    else:
        low, high = -k1 - 2, m + 2
    if k2 <= low and abs(m + k1) <= tolerance:
        return TFunctionCase(family, 1, None)
    if low < k2 < high - tolerance:
        return TFunctionCase(family, 2, None)
    if k2 >= high - tolerance:
        n = odd_multiple_index(m, k1)
        if n is not None:
            return TFunctionCase(family, 3, n)
    return TFunctionCase(family, None, None)


class MonotoneKind(enum.Enum):
    F = "F"
    G = "G"


def _monotone_arguments(kind, a, b, x):
    if kind is MonotoneKind.F:
        return (x, x + b - a), (x - a, x + b)
    return (a - x, b + 1 - x), (1 - x, b + a - x)


def monotone_value(kind, a, b, x):
    """F(x) = Γ(x)Γ(x+b-a)/(Γ(x-a)Γ(x+b)) or G(x) = Γ(a-x)Γ(b+1-x)/(Γ(1-x)Γ(b+a-x))"""
    kind = MonotoneKind(kind)
    numerator, denominator = _monotone_arguments(kind, a, b, x)
    value, order = _gamma_product(numerator, denominator)
    if order:
        return math.nan
    return value


def digamma_log_derivative(kind, a, b, x):
    """d/dx log F (or log G) written as a digamma sum"""
    kind = MonotoneKind(kind)
    numerator, denominator = _monotone_arguments(kind, a, b, x)
    sign = 1.0 if kind is MonotoneKind.F else -1.0
    total = sum(float(special.digamma(arg)) for arg in numerator)
    total -= sum(float(special.digamma(arg)) for arg in denominator)
    return sign * total


def _monotone_domain(kind, a):
    """(direction, (lo, hi)) of strict monotonicity, or (None, None)"""
    if kind is MonotoneKind.F:
        if a > 0:
            return 1, (a, math.inf)
        if a < 0:
            return -1, (0.0, math.inf)
    else:
        if 0 < a < 1:
            return 1, (-math.inf, a)
        if a > 1:
            return -1, (-math.inf, 1.0)
    return None, None


def monotonicity_certificate(kind, params, interval, samples=200):
    """Check strict monotonicity of F or G on a sample grid.

    The direction is the one predicted from the sign of `a`; the digamma form
    of the log-derivative must agree in sign at every grid point.
    """
    kind = MonotoneKind(kind)
    a, b = params
    lo, hi = interval
    name = "monotonicity-%s" % kind.value
    details = {"a": a, "b": b, "interval": [lo, hi], "samples": samples}
    if not b > 0:
        details["reason"] = "b must be positive"
        return CheckResult(name, False, details)
    direction, domain = _monotone_domain(kind, a)
    if direction is None or not domain[0] < lo < hi < domain[1]:
        details["reason"] = "interval outside the monotonicity domain"
        return CheckResult(name, False, details)
    details["direction"] = "increasing" if direction > 0 else "decreasing"

    grid = np.linspace(lo, hi, samples)
    values = np.array([monotone_value(kind, a, b, x) for x in grid])
    steps = np.diff(values) * direction
    violations = np.nonzero(~(steps > 0))[0]
    if violations.size:
        index = int(violations[0])
        details["violation"] = [float(grid[index]), float(grid[index + 1])]
        details["values"] = [float(values[index]), float(values[index + 1])]
        return CheckResult(name, False, details)
    for x in grid:
        if digamma_log_derivative(kind, a, b, x) * direction <= 0:
            details["violation"] = [float(x)]
            details["reason"] = "digamma log-derivative has the wrong sign"
            return CheckResult(name, False, details)
    return CheckResult(name, True, details)
