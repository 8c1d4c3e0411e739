"""Classifier verdicts shared by every theorem family"""
# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.exceptions import SymbolDomainError
from qhtoeplitz.mellin import (
    GammaRatioTransform, MellinTransform, NotRational, RadialSymbol, as_transform, gamma_ratio_to_partial_fractions
)
from qhtoeplitz.operators import QHOperator, Space
from qhtoeplitz.util import strings
from qhtoeplitz.util.log import logger

COMMUTATOR = "commutator"
GENSEMI = "gensemi"
SEMICOMMUTATOR = "semicommutator"

# Stand-in for a radial part the conditions leave free
FREE_WITNESS = RadialSymbol([(1.0, 0, 0), (1.0, 1, 0)])

# Sample points for comparing transforms that have no closed form
PROPORTIONALITY_POINTS = tuple(range(2, 13))


def same(first, second):
    """Equality for real exponents, up to the integrality tolerance"""
    return abs(first - second) <= settings.INTEGRALITY_TOLERANCE


def check_exponent(m):
    if m < -1 - settings.INTEGRALITY_TOLERANCE:
        raise SymbolDomainError("exponent m=%s is below -1" % m)


def normalized_degrees(k1, k2):
    """(|k1|, k2·sgn k1): the degrees after taking adjoints when k1 < 0"""
    if k1 < 0:
        return -k1, -k2
    return k1, k2


def principal_condition(held, phi, free_conditions=(1, 3)):
    """Lowest held condition, or the lowest one leaving φ free when φ is given"""
    if phi is not None:
        for condition in held:
            if condition in free_conditions:
                return condition
    return held[0]


def boundary_notes(m):
    if same(m, -1):
        return ["m = -1 puts r^m on the integrability boundary"]
    return []


def radial_part(ratio):
    """Radial symbol of a Gamma ratio when it inverts, the ratio itself otherwise"""
    symbol = gamma_ratio_to_partial_fractions(ratio)
    if isinstance(symbol, NotRational):
        logger.debug("%r kept on the Mellin side: %s", ratio, symbol.reason)
        return ratio
    return symbol


def proportionality(first, second, tolerance=1e-9):
    """C with first = C·second, compared symbolically or on sample points"""
    if isinstance(first, RadialSymbol) and isinstance(second, RadialSymbol):
        return first.proportional_to(second, tolerance)
    first, second = as_transform(first), as_transform(second)
    ratio = None
    for z in PROPORTIONALITY_POINTS:
        top, bottom = first(z), second(z)
        if bottom == 0:
            if abs(top) > tolerance:
                return None
            continue
        if ratio is None:
            ratio = top / bottom
        elif abs(top - ratio * bottom) > tolerance * max(1.0, abs(top)):
            return None
    return ratio


class TheoremVerdict:

    """Which condition of a classification theorem holds, and what it predicts.

    `symbols` maps the roles phi1, phi2 (the radial parts of the two
    operators) and psi to a RadialSymbol or a GammaRatioTransform. A verdict
    with no condition means no choice of the free radial part gives finite
    rank; its predictions are then None.
    """

    def __init__(self, theorem_id, params, space, kind, degrees, conditions=(), symbols=None,
                 predicted_rank=None, predicted_range=None, predicted_canonical=None, free_roles=(), notes=()):
        self.theorem_id = theorem_id
        self.params = dict(params)
        self.space = Space(space)
        self.kind = kind
        self.degrees = tuple(degrees)
        self.conditions = tuple(sorted(conditions))
        self.symbols = dict(symbols or {})
        self.predicted_rank = predicted_rank
        self.predicted_range = tuple(predicted_range) if predicted_range is not None else None
        self.predicted_canonical = dict(predicted_canonical) if predicted_canonical is not None else None
        self.free_roles = tuple(free_roles)
        self.notes = list(notes)
        logger.debug("%s %s: conditions %s", theorem_id, self.params, list(self.conditions) or "none")

    @property
    def condition_id(self):
        """Principal condition, the lowest-numbered one that holds"""
        return self.conditions[0] if self.conditions else None

    @property
    def finite(self):
        return bool(self.conditions)

    @property
    def constructible(self):
        """Whether there are symbols to build the operators from"""
        return "phi1" in self.symbols and "phi2" in self.symbols

    def transform(self, role):
        return as_transform(self.symbols[role])

    def operators(self, space=None):
        space = Space(space or self.space)
        k1, k2 = self.degrees
        return QHOperator(space, k1, self.symbols["phi1"]), QHOperator(space, k2, self.symbols["phi2"])

    def admits(self, **candidates):
        """Whether the given radial parts fit the principal condition.

        Determined parts must agree with the constructed ones up to one
        common constant; free parts accept anything.
        """
        if not self.finite:
            return False
        return fitting_constant(self, candidates) is not None

    def __repr__(self):
        return "TheoremVerdict(%s, %s, condition=%s, rank=%s)" % (
            self.theorem_id, self.params, self.condition_id, self.predicted_rank
        )

    def to_dict(self):
        symbols = {}
        for role, radial in self.symbols.items():
            if isinstance(radial, RadialSymbol):
                symbols[role] = radial.to_dict()
            elif isinstance(radial, (GammaRatioTransform, MellinTransform)):
                symbols[role] = radial.to_dict()
        canonical = None
        if self.predicted_canonical is not None:
            canonical = [
                {"index": index, "coefficient": coeff, "text": strings.format_real(coeff)}
                for index, coeff in sorted(self.predicted_canonical.items())
            ]
        return {
            "theorem": self.theorem_id,
            "params": self.params,
            "space": self.space.value,
            "kind": self.kind,
            "degrees": list(self.degrees),
            "finite": self.finite,
            "condition": self.condition_id,
            "conditions": list(self.conditions),
            "symbols": symbols,
            "free": list(self.free_roles),
            "predicted_rank": self.predicted_rank,
            "predicted_range": list(self.predicted_range) if self.predicted_range is not None else None,
            "predicted_canonical": canonical,
            "notes": self.notes,
        }


def _scaled(radial, constant):
    if isinstance(radial, GammaRatioTransform):
        return radial.scaled(constant)
    return radial * constant


def fitting_constant(verdict, candidates):
    """Common constant C with candidate = C·constructed for every determined role.

    Returns None when a candidate does not fit. A free role pins C to 1:
    the determined roles were built from it.
    """
    constant = 1.0 if verdict.free_roles else None
    for role, candidate in candidates.items():
        if role in verdict.free_roles:
            continue
        expected = verdict.symbols.get(role)
        if expected is None:
            return None
        ratio = proportionality(candidate, expected)
        if not ratio:
            return None
        if constant is None:
            constant = ratio
        elif abs(ratio - constant) > 1e-9 * max(1.0, abs(constant)):
            return None
    return 1.0 if constant is None else constant


def narrow(verdict, **candidates):
    """Restate a verdict for given radial parts instead of the constructed ones.

    The given parts replace the constructed ones; a finite verdict stays
    finite only if they fit its principal condition, and the predicted
    canonical coefficients scale with the common constant.
    """
    candidates = {role: value for role, value in candidates.items() if value is not None}
    if not candidates:
        return verdict
    constant = fitting_constant(verdict, candidates) if verdict.finite else None
    symbols = dict(verdict.symbols)
    if constant is None:
        symbols.update(candidates)
        notes = verdict.notes + ["given radial parts do not fit any condition"]
        return TheoremVerdict(
            verdict.theorem_id, verdict.params, verdict.space, verdict.kind, verdict.degrees,
            symbols=symbols, notes=notes,
        )
    for role, radial in verdict.symbols.items():
        if role == "phi1":
            continue
        symbols[role] = candidates.get(role, _scaled(radial, constant))
    canonical = verdict.predicted_canonical
    if canonical is not None:
        canonical = {index: coeff * constant for index, coeff in canonical.items()}
    return TheoremVerdict(
        verdict.theorem_id,
        verdict.params,
        verdict.space,
        verdict.kind,
        verdict.degrees,
        verdict.conditions,
        symbols,
        verdict.predicted_rank,
        verdict.predicted_range,
        canonical,
        verdict.free_roles,
        verdict.notes,
    )
