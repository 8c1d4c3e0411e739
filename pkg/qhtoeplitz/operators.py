"""Quasihomogeneous Toeplitz operators as weighted shifts.

On the harmonic Bergman space the basis vectors are e_l = r^|l|·e^{ilθ},
l in ℤ; on the Bergman space they are zⁿ, n >= 0. An operator with symbol
e^{ikθ}φ(r) maps each basis vector to a multiple of the vector shifted by k,
or annihilates it on the Bergman space. Products are computed by chaining
two single applications, never through matrices.
"""
# Standard Library
import enum
from collections import namedtuple

# Third Party Libraries
import numpy as np

# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult
from qhtoeplitz.exceptions import WindowTooSmall
from qhtoeplitz.mellin import MellinTransform, RadialSymbol, as_transform
from qhtoeplitz.util.log import logger


class Space(enum.Enum):
    HARMONIC = "h"
    BERGMAN = "a"


class QHOperator:

    """Toeplitz operator with symbol e^{ikθ}φ(r) on one of the two spaces"""

    def __init__(self, space, degree, radial):
        self.space = Space(space)
        self.degree = int(degree)
        self.radial = as_transform(radial)

    @property
    def symbol(self):
        """Radial symbol witness, None for Gamma-side radial parts"""
        return self.radial.witness

    def adjoint(self):
        """T_{e^{ikθ}φ}* = T_{e^{-ikθ}φ} for real φ"""
        return QHOperator(self.space, -self.degree, self.radial)

    def __repr__(self):
        return "QHOperator(%s, k=%d, %r)" % (self.space.value, self.degree, self.radial)


class BasisImage(namedtuple("BasisImage", ("target", "coefficient"))):

    """Image of a basis vector: coefficient times the target basis vector"""

    __slots__ = ()

    @property
    def annihilated(self):
        return self.target is None


ANNIHILATED = BasisImage(None, 0.0)


def _unpack(operator):
    if isinstance(operator, QHOperator):
        return operator.degree, operator.radial
    degree, radial = operator
    return int(degree), as_transform(radial)


def harmonic_lambda(k, transform, l):
    """λ_{k,l} with T(e_l) = λ_{k,l}·e_{l+k} on the harmonic space"""
    if l >= 0:
        if l >= -k:
            return 2 * (l + k + 1) * transform(2 * l + k + 2)
        return 2 * (-l - k + 1) * transform(-k + 2)
    if -l >= k:
        return 2 * (-l - k + 1) * transform(-2 * l - k + 2)
    return 2 * (l + k + 1) * transform(k + 2)


def apply_harmonic(operator, l):
    """Image of e_l under a harmonic-space operator (or a (degree, radial) pair)"""
    if isinstance(operator, QHOperator) and operator.space is not Space.HARMONIC:
        raise ValueError("apply_harmonic needs a harmonic-space operator")
    k, transform = _unpack(operator)
    return BasisImage(l + k, harmonic_lambda(k, transform, l))


def apply_bergman(operator, n):
    """Image of zⁿ under a Bergman-space operator (or a (degree, radial) pair)"""
    if isinstance(operator, QHOperator) and operator.space is not Space.BERGMAN:
        raise ValueError("apply_bergman needs a Bergman-space operator")
    if n < 0:
        raise ValueError("Bergman basis index must be nonnegative, got %s" % n)
    k, transform = _unpack(operator)
    if n < -k:
        return ANNIHILATED
    return BasisImage(n + k, 2 * (n + k + 1) * transform(2 * n + k + 2))


def apply(operator, index):
    if operator.space is Space.HARMONIC:
        return apply_harmonic(operator, index)
    return apply_bergman(operator, index)


def compose(first, second, index):
    """Image of a basis vector under first·second"""
    image = apply(second, index)
    if image.annihilated:
        return ANNIHILATED
    outer = apply(first, image.target)
    if outer.annihilated:
        return ANNIHILATED
    return BasisImage(outer.target, outer.coefficient * image.coefficient)


def support_numbers(k1, k2):
    """(N1, N2, N3) bounding where commutators and products act nontrivially"""
    k = k1 + k2
    return max(0, -k1, -k2, -k), max(0, -k2, -k), max(0, k2, k)


def required_window(space, k1, k2, margin=None):
    """Smallest source window covering the support bound plus the margin"""
    margin = settings.WINDOW_MARGIN if margin is None else margin
    n1 = support_numbers(k1, k2)[0]
    if Space(space) is Space.BERGMAN:
        return 0, n1 + margin
    return -n1 - abs(k1 + k2) - margin, n1 + margin


class CoeffMap:

    """Coefficients of a weighted-shift operator on a window of source indices.

    `entries` maps a source index to the coefficient of its image; the image
    index is source + net_degree. `scales` keeps the size of the terms that
    were subtracted to form each coefficient, for relative zero tests.
    """

    def __init__(self, space, net_degree, window, entries, scales=None, kind="operator", degrees=None):
        self.space = Space(space)
        self.net_degree = int(net_degree)
        self.window = (int(window[0]), int(window[1]))
        self.entries = dict(entries)
        self.scales = dict(scales or {})
        self.kind = kind
        self.degrees = degrees

    def target(self, source):
        return source + self.net_degree

    def coefficient(self, source):
        return self.entries.get(source, 0.0)

    def scale(self, source):
        return max(abs(self.entries.get(source, 0.0)), self.scales.get(source, 0.0))

    @property
    def sources(self):
        return sorted(self.entries)

    def nonzero(self, tolerance=None):
        """Source -> coefficient for the coefficients that are not zero"""
        tolerance = settings.ZERO_TOLERANCE if tolerance is None else tolerance
        return {
            source: coeff
            for source, coeff in sorted(self.entries.items())
            if abs(coeff) > tolerance * max(1.0, self.scale(source))
        }

    def images(self, tolerance=None):
        """Target index -> coefficient for the nonzero part"""
        return {self.target(source): coeff for source, coeff in self.nonzero(tolerance).items()}

    def __iter__(self):
        return iter(sorted(self.entries.items()))

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "CoeffMap(%s, %s, k=%d, window=%s, %d nonzero)" % (
            self.kind, self.space.value, self.net_degree, self.window, len(self.nonzero())
        )

    def to_dict(self):
        return {
            "kind": self.kind,
            "space": self.space.value,
            "net_degree": self.net_degree,
            "window": list(self.window),
            "nonzero": [[source, self.target(source), coeff] for source, coeff in self.nonzero().items()],
        }


def _check_pair(first, second):
    if first.space is not second.space:
        raise ValueError("Operators live on different spaces: %s and %s" % (first.space, second.space))


def _resolve_window(space, k1, k2, window, margin):
    required = required_window(space, k1, k2, margin)
    if window is None:
        return required
    lo, hi = window
    if Space(space) is Space.BERGMAN:
        lo = max(lo, 0)
    if lo > required[0] or hi < required[1]:
        raise WindowTooSmall(
            "window %s does not cover the support bound %s" % ((lo, hi), required),
            requested=(lo, hi),
            required=required,
        )
    return lo, hi


def _difference_map(kind, first, second, window, margin, minuend, subtrahend):
    _check_pair(first, second)
    k1, k2 = first.degree, second.degree
    lo, hi = _resolve_window(first.space, k1, k2, window, margin)
    logger.debug("%s map k=(%d, %d) on %s over [%d, %d]", kind, k1, k2, first.space.value, lo, hi)
    entries = {}
    scales = {}
    for index in range(lo, hi + 1):
        left = minuend(index)
        right = subtrahend(index)
        entries[index] = left.coefficient - right.coefficient
        scales[index] = max(abs(left.coefficient), abs(right.coefficient))
    return CoeffMap(first.space, k1 + k2, (lo, hi), entries, scales, kind=kind, degrees=(k1, k2))


def commutator_map(first, second, window=None, margin=None):
    """[T1, T2] = T1·T2 - T2·T1 on every source index of the window"""
    return _difference_map(
        "commutator",
        first,
        second,
        window,
        margin,
        lambda index: compose(first, second, index),
        lambda index: compose(second, first, index),
    )


def gen_semicommutator_map(first, second, psi, window=None, margin=None):
    """T1·T2 - T_{e^{i(k1+k2)θ}ψ} on every source index of the window"""
    product = QHOperator(first.space, first.degree + second.degree, psi)
    return _difference_map(
        "gensemi",
        first,
        second,
        window,
        margin,
        lambda index: compose(first, second, index),
        lambda index: apply(product, index),
    )


def semicommutator_map(first, second, window=None, margin=None):
    """T1·T2 - T_{f1·f2}, the generalized case with ψ = φ1·φ2"""
    if first.symbol is None or second.symbol is None:
        raise ValueError("The semicommutator needs radial symbol witnesses for both operators")
    result = gen_semicommutator_map(first, second, first.symbol * second.symbol, window, margin)
    result.kind = "semicommutator"
    return result


def lamre_check(k, phi, l, tolerance=1e-11):
    """(|l|+1)·λ_{k,l} = (|l+k|+1)·λ_{k,-l-k}"""
    transform = as_transform(phi)
    left = (abs(l) + 1) * harmonic_lambda(k, transform, l)
    right = (abs(l + k) + 1) * harmonic_lambda(k, transform, -l - k)
    error = abs(left - right) / max(1.0, abs(left), abs(right))
    return CheckResult("lamre", error <= tolerance, {"k": k, "l": l, "left": left, "right": right})


def finite_rank_residuals(first, second, indices, psi=None):
    """Residuals of the identities behind finite rank, one per index n.

    For commutators: 2(n+k2+1)φ̂1(2n+k1+2k2+2)φ̂2(2n+k2+2)
    - 2(n+k1+1)φ̂1(2n+k1+2)φ̂2(2n+2k1+k2+2). With psi given, the product
    identity 2(n+k2+1)φ̂1(2n+k1+2k2+2)φ̂2(2n+k2+2) - ψ̂(2n+k1+k2+2) for
    T1T2 - T_ψ. Indices should be at least N1 so every argument is >= 2.
    """
    k1, k2 = first.degree, second.degree
    phi1, phi2 = first.radial, second.radial
    residuals = []
    for n in indices:
        forward = 2 * (n + k2 + 1) * phi1(2 * n + k1 + 2 * k2 + 2) * phi2(2 * n + k2 + 2)
        if psi is None:
            backward = 2 * (n + k1 + 1) * phi1(2 * n + k1 + 2) * phi2(2 * n + 2 * k1 + k2 + 2)
        else:
            backward = as_transform(psi)(2 * n + k1 + k2 + 2)
        residuals.append(forward - backward)
    return np.array(residuals)


def residual_summary(first, second, count, psi=None):
    """Largest finite-rank identity residual over `count` indices past the support bound"""
    k1, k2 = first.degree, second.degree
    start = max(0, -k1, -k2, -k1 - k2)
    residuals = np.abs(finite_rank_residuals(first, second, range(start, start + count), psi))
    return {"indices": [start, start + count - 1], "max_residual": float(residuals.max()) if count else 0.0}


def dense_matrix(coeff_map):
    """Truncated matrix of a CoeffMap in the orthonormal basis.

    Columns are the window's source indices, rows the union of sources and
    targets; ε_l = √(|l|+1)·e_l is orthonormal on both spaces.
    """
    sources = list(range(coeff_map.window[0], coeff_map.window[1] + 1))
    targets = {coeff_map.target(source) for source in sources if coeff_map.coefficient(source)}
    rows = sorted(set(sources) | targets)
    row_index = {index: position for position, index in enumerate(rows)}
    matrix = np.zeros((len(rows), len(sources)))
    for column, source in enumerate(sources):
        coeff = coeff_map.coefficient(source)
        if coeff:
            target = coeff_map.target(source)
            matrix[row_index[target], column] = coeff * np.sqrt((abs(source) + 1) / (abs(target) + 1))
    return matrix, rows, sources


def operator_pair(space, k1, radial1, k2, radial2):
    """Convenience constructor for the two operators of a commutator"""
    return QHOperator(space, k1, radial1), QHOperator(space, k2, radial2)


def monomial_operator(space, k, m):
    """T_{e^{ikθ}r^m}"""
    return QHOperator(space, k, MellinTransform(RadialSymbol.monomial(m)))
