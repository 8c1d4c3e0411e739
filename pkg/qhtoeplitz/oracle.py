"""Independent numerical checks from first principles.

Nothing here uses the closed-form Mellin transforms: radial integrals are
computed by adaptive Gauss-Legendre quadrature and projection coefficients
come from the reproducing kernel expansions K(z, w) = Σ (n+1)(z w̄)ⁿ and
R = K + conj(K) - 1 with the normalized area measure dA = r dr dθ / π.
"""
# Standard Library
import math

# Third Party Libraries
import numpy as np

# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult
from qhtoeplitz.exceptions import QuadratureError, SymbolDomainError
from qhtoeplitz.operators import Space
from qhtoeplitz.util.log import logger

_RULES = {}


def _legendre_rule(order):
    if order not in _RULES:
        _RULES[order] = np.polynomial.legendre.leggauss(order)
    return _RULES[order]


def _panel(func, lo, hi, order):
    nodes, weights = _legendre_rule(order)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(weights, func(half * nodes + 0.5 * (hi + lo))))


def adaptive_gauss_legendre(func, lo, hi, tolerance=None, order=None, max_panels=None):
    """Integrate a vectorised function on [lo, hi] by bisection.

    A panel is accepted when its estimate agrees with the sum of its two
    halves within its share of the tolerance.
    """
    tolerance = settings.QUADRATURE_TOLERANCE if tolerance is None else tolerance
    order = order or settings.QUADRATURE_ORDER
    max_panels = max_panels or settings.QUADRATURE_MAX_PANELS
    length = hi - lo
    stack = [(lo, hi, _panel(func, lo, hi, order))]
    total = 0.0
    panels = 0
    while stack:
        left_end, right_end, whole = stack.pop()
        middle = 0.5 * (left_end + right_end)
        left = _panel(func, left_end, middle, order)
        right = _panel(func, middle, right_end, order)
        panels += 1
        local = tolerance * (right_end - left_end) / length
        if abs(left + right - whole) <= max(local, 1e-15 * abs(left + right)):
            total += left + right
            continue
        if panels >= max_panels:
            raise QuadratureError("quadrature did not converge after %d panels" % panels, panels=panels)
        stack.append((left_end, middle, left))
        stack.append((middle, right_end, right))
    return total


def _truncation(terms, z, tolerance):
    """Length S of [0, S] beyond which the substituted integrand is below tolerance"""
    rate = min(z + term.power for term in terms)
    if rate <= 0:
        raise SymbolDomainError("∫ r^(z-1) φ(r) dr diverges at z=%s" % z)
    weight = sum(abs(term.coeff) for term in terms)
    length = max(1.0, math.log(max(weight, 1.0) / (rate * tolerance)) / rate)
    if any(term.logexp for term in terms):
        for _attempt in range(3):
            length = max(1.0, math.log(max(weight, 1.0) * max(length, 1.0) / (rate * tolerance)) / rate)
    return length


def quad_mellin(phi, z, tolerance=None):
    """∫₀¹ φ(r) r^(z-1) dr by quadrature.

    With r = e^{-s} the integral becomes ∫₀^∞ Σ c·(-s)^e·e^{-s(z+p)} ds, which
    removes the endpoint singularity at r = 0; the tail is cut where it drops
    below the tolerance.
    """
    tolerance = settings.QUADRATURE_TOLERANCE if tolerance is None else tolerance
    if phi.is_zero:
        return 0.0
    terms = phi.terms
    length = _truncation(terms, z, tolerance)

    def integrand(s):
        total = np.zeros_like(s)
        for term in terms:
            value = term.coeff * np.exp(-s * (z + term.power))
            if term.logexp:
                value = -s * value
            total = total + value
        return total

    return adaptive_gauss_legendre(integrand, 0.0, length, tolerance)


class KernelEvaluator:

    """Reproducing kernel of the Bergman (K_z) or harmonic Bergman (R_z) space at z"""

    def __init__(self, space, point):
        point = complex(point)
        if not abs(point) < 1:
            raise ValueError("Kernel point %s is outside the unit disk" % point)
        self.space = Space(space)
        self.point = point

    @staticmethod
    def coefficient(n):
        """Weight of (z w̄)ⁿ in the kernel expansion"""
        return n + 1

    def evaluate(self, w):
        w = np.asarray(w, dtype=complex)
        bergman = 1.0 / (1.0 - w * np.conj(self.point)) ** 2
        if self.space is Space.BERGMAN:
            return bergman
        return bergman + np.conj(bergman) - 1.0

    def series(self, w, terms=60):
        w = np.asarray(w, dtype=complex)
        product = w * np.conj(self.point)
        total = np.zeros_like(w)
        for n in range(terms):
            total = total + self.coefficient(n) * product ** n
        if self.space is Space.HARMONIC:
            for n in range(1, terms):
                total = total + self.coefficient(n) * np.conj(product) ** n
        return total


def _radial_moment(phi, power, tolerance):
    """2∫₀¹ φ(r) r^power dr"""
    return 2.0 * quad_mellin(phi, power + 1, tolerance)


def quad_projection_coeff(k, phi, l, space=Space.HARMONIC, tolerance=None):
    """λ with T_{e^{ikθ}φ}(e_l) = λ·e_{l+k}, computed from the kernel.

    Projecting u = φ(r)·r^|l|·e^{i(l+k)θ} against the kernel leaves, after
    the exact angular integration, the single term of degree t = l+k:
    coefficient(|t|)·∫ u·conj(e_t) dA = (|t|+1)·2∫₀¹ φ(r) r^(|l|+|t|+1) dr.
    """
    space = Space(space)
    target = l + k
    if space is Space.BERGMAN:
        if l < 0:
            raise ValueError("Bergman basis index must be nonnegative, got %s" % l)
        if target < 0:
            return 0.0
    return KernelEvaluator.coefficient(abs(target)) * _radial_moment(phi, abs(l) + abs(target) + 1, tolerance)


def _monomial(index, w):
    if index >= 0:
        return w ** index
    return np.conj(w) ** (-index)


def reproducing_check(index, point, space=Space.HARMONIC, tolerance=1e-9, angles=256):
    """⟨h, K⟩ = h(point) for the monomial h = e_index.

    The inner product is computed with Gauss-Legendre in r and the
    trapezoidal rule in θ, exact up to the decay of the kernel's Fourier
    coefficients.
    """
    space = Space(space)
    if space is Space.BERGMAN and index < 0:
        raise ValueError("z̄ monomials are not in the Bergman space")
    kernel = KernelEvaluator(space, point)
    nodes, weights = _legendre_rule(settings.QUADRATURE_ORDER)
    radii = 0.5 * (nodes + 1.0)
    radial_weights = 0.5 * weights
    thetas = 2.0 * np.pi * np.arange(angles) / angles
    w = radii[:, None] * np.exp(1j * thetas[None, :])
    integrand = _monomial(index, w) * np.conj(kernel.evaluate(w))
    angular = integrand.sum(axis=1) * (2.0 * np.pi / angles)
    value = complex(np.dot(radial_weights, radii * angular) / np.pi)
    expected = complex(_monomial(index, kernel.point))
    error = abs(value - expected)
    logger.debug("reproducing check e_%d at %s: error %.3g", index, point, error)
    return CheckResult(
        "reproducing",
        error <= tolerance,
        {"index": index, "point": [kernel.point.real, kernel.point.imag], "error": error},
    )
