"""Finite-rank detection and canonical rank-one forms.

A commutator or generalized semicommutator of quasihomogeneous operators is a
weighted shift, so its rank is the number of basis vectors it does not
annihilate. Once the finite-rank criterion holds the coefficients vanish
outside a window fixed by the degrees; detection checks that they also vanish
on `margin` extra indices on each side and counts the rest.
"""
# Standard Library
from collections import namedtuple

# Third Party Libraries
import numpy as np
from scipy import linalg

# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult
from qhtoeplitz.exceptions import MarginViolation, WindowTooSmall
from qhtoeplitz.operators import (
    CoeffMap, Space, commutator_map, dense_matrix, gen_semicommutator_map, support_numbers
)
from qhtoeplitz.util.log import logger

COMMUTATOR = "commutator"
GENSEMI = "gensemi"

CanonicalTerm = namedtuple("CanonicalTerm", ("index", "coefficient", "partner"))


def kind_of(coeff_map):
    """Commutator maps and the two product kinds share the semicommutator bounds"""
    return COMMUTATOR if coeff_map.kind == COMMUTATOR else GENSEMI


class SupportWindow:

    """Index thresholds and index sets fixed by the degrees k1, k2"""

    def __init__(self, k1, k2):
        self.k1 = k1
        self.k2 = k2
        self.k = k = k1 + k2
        self.N1, self.N2, self.N3 = support_numbers(k1, k2)
        self.Lambda1 = tuple(j for j in range(-self.N1 + 1, self.N1 + k) if 2 * j != k)
        self.LambdaHalf = tuple(j for j in self.Lambda1 if 2 * j > k)
        self.Lambda2 = tuple(range(-self.N3 + k + 1, self.N2 + k))

    def support_sources(self, kind, space):
        """(lo, hi) of the source indices that may carry a nonzero coefficient"""
        space = Space(space)
        if space is Space.HARMONIC:
            if kind == COMMUTATOR:
                return -self.N1 - self.k + 1, self.N1 - 1
            return -self.N3 + 1, self.N2 - 1
        if kind == COMMUTATOR:
            return 0, self.N1 - 1
        return 0, self.N2 - 1

    def for_kind(self, kind, space):
        """Index set containing the range"""
        space = Space(space)
        if space is Space.HARMONIC:
            return self.Lambda1 if kind == COMMUTATOR else self.Lambda2
        lo, hi = self.support_sources(kind, space)
        return tuple(n + self.k for n in range(lo, hi + 1) if n + self.k >= 0)

    def __repr__(self):
        return "SupportWindow(k1=%d, k2=%d, N=(%d, %d, %d))" % (self.k1, self.k2, self.N1, self.N2, self.N3)

    def to_dict(self):
        return {
            "N1": self.N1,
            "N2": self.N2,
            "N3": self.N3,
            "Lambda1": list(self.Lambda1),
            "LambdaHalf": list(self.LambdaHalf),
            "Lambda2": list(self.Lambda2),
        }


class RankReport:

    """Rank, range and canonical form of a finite-rank coefficient map"""

    def __init__(self, coeff_map, rank, range_indices, canonical, parity_ok, bound_ok, range_ok, margin):
        self.kind = coeff_map.kind
        self.space = coeff_map.space
        self.degrees = coeff_map.degrees
        self.window = coeff_map.window
        self.rank = rank
        self.range_indices = tuple(range_indices)
        self.canonical = list(canonical)
        self.parity_ok = parity_ok
        self.bound_ok = bound_ok
        self.range_ok = range_ok
        self.margin = margin
        self.svd_rank = None
        self.note = "finite rank at window + margin"

    @property
    def passed(self):
        return self.parity_ok and self.bound_ok and self.range_ok

    def __repr__(self):
        return "RankReport(%s, rank=%d, range=%s)" % (self.kind, self.rank, list(self.range_indices))

    def to_dict(self):
        return {
            "kind": self.kind,
            "space": self.space.value,
            "degrees": list(self.degrees) if self.degrees else None,
            "rank": self.rank,
            "range": list(self.range_indices),
            "canonical": [
                {"index": term.index, "coefficient": term.coefficient, "partner": term.partner}
                for term in self.canonical
            ],
            "parity_ok": self.parity_ok,
            "bound_ok": self.bound_ok,
            "range_ok": self.range_ok,
            "svd_rank": self.svd_rank,
            "window": list(self.window),
            "margin": self.margin,
            "note": self.note,
        }


def rank_bound(kind, space, k1, k2):
    """Largest rank a finite-rank map of this kind can have"""
    if Space(space) is Space.HARMONIC:
        if kind == COMMUTATOR:
            if (k1 + k2) % 2:
                return abs(k1) + abs(k2) - 1
            return max(0, abs(k1) + abs(k2) - 2)
        return max(0, abs(k1) - 1, abs(k2) - 1, abs(k1 + k2) - 1)
    return len(SupportWindow(k1, k2).for_kind(kind, space))


def detect_rank(coeff_map, window=None, tolerance=None):
    """Count the nonzero images of a map whose margin coefficients vanish.

    Raises MarginViolation when a coefficient outside the support does not
    vanish: the map is then not finite rank at this window.
    """
    tolerance = settings.ZERO_TOLERANCE if tolerance is None else tolerance
    k1, k2 = coeff_map.degrees
    window = window or SupportWindow(k1, k2)
    kind = kind_of(coeff_map)
    lo, hi = window.support_sources(kind, coeff_map.space)
    if coeff_map.window[0] > lo or coeff_map.window[1] < hi:
        raise WindowTooSmall(
            "map window %s does not cover the support %s" % (coeff_map.window, (lo, hi)),
            requested=coeff_map.window,
            required=(lo, hi),
        )
    margin = min(lo - coeff_map.window[0], coeff_map.window[1] - hi)
    if coeff_map.space is Space.BERGMAN:
        margin = coeff_map.window[1] - hi
    nonzero = coeff_map.nonzero(tolerance)
    outside = [source for source in nonzero if source < lo or source > hi]
    if outside:
        worst = max(outside, key=lambda source: abs(nonzero[source]))
        logger.debug(
            "%s k=(%d, %d): coefficient %.3g at margin index %d", coeff_map.kind, k1, k2, nonzero[worst], worst
        )
        raise MarginViolation(
            "not finite rank at this window: coefficient %.3g at index %d" % (nonzero[worst], worst),
            index=worst,
            coefficient=nonzero[worst],
        )
    targets = sorted(coeff_map.target(source) for source in nonzero)
    canonical = extract_canonical_form(coeff_map, window, tolerance)
    rank = len(targets)
    bound = rank_bound(kind, coeff_map.space, k1, k2)
    parity_ok = rank % 2 == 0 if (coeff_map.space is Space.HARMONIC and kind == COMMUTATOR) else True
    range_ok = set(targets) <= set(window.for_kind(kind, coeff_map.space))
    return RankReport(coeff_map, rank, targets, canonical, parity_ok, rank <= bound, range_ok, margin)


def extract_canonical_form(coeff_map, window=None, tolerance=None):
    """Rank-one coefficients C_j with M = Σ C_j·(e_j ⊗ e_{j-k}).

    ⟨e_l, e_l⟩ = 1/(|l|+1), so a raw image coefficient c at source l gives
    C = (|l|+1)·c. Harmonic commutator terms carry the partner index k - j.
    """
    paired = coeff_map.space is Space.HARMONIC and kind_of(coeff_map) == COMMUTATOR
    k = coeff_map.net_degree
    terms = []
    for source, coeff in coeff_map.nonzero(tolerance).items():
        index = coeff_map.target(source)
        terms.append(CanonicalTerm(index, (abs(source) + 1) * coeff, k - index if paired else None))
    return sorted(terms)


def pairing_check(canonical, tolerance=1e-10):
    """C_j = -C_{k-j} for every term of a harmonic commutator"""
    by_index = {term.index: term.coefficient for term in canonical}
    for term in canonical:
        if term.partner is None:
            continue
        partner = by_index.get(term.partner)
        if partner is None or term.partner == term.index:
            return CheckResult("pairing", False, {"index": term.index, "partner": term.partner})
        if abs(term.coefficient + partner) > tolerance * max(1.0, abs(term.coefficient)):
            return CheckResult(
                "pairing",
                False,
                {"index": term.index, "coefficient": term.coefficient, "partner_coefficient": partner},
            )
    return CheckResult("pairing", True, {"terms": len(canonical)})


def parity_and_bounds(report, k1, k2, kind, space=Space.HARMONIC):
    """Harmonic commutator ranks are even; every rank respects its bound"""
    rank = report.rank if isinstance(report, RankReport) else int(report)
    space = Space(space)
    bound = rank_bound(kind, space, k1, k2)
    parity_ok = rank % 2 == 0 if (space is Space.HARMONIC and kind == COMMUTATOR) else True
    return CheckResult(
        "parity-and-bounds",
        parity_ok and rank <= bound,
        {"rank": rank, "bound": bound, "parity_ok": parity_ok, "bound_ok": rank <= bound},
    )


def finite_rank_or_none(coeff_map, tolerance=None):
    try:
        return detect_rank(coeff_map, tolerance=tolerance).rank
    except MarginViolation:
        return None


def rank_relation_check(commutator_rank, gensemi_rank):
    """rank([T1, T2]) <= 2·rank(T1T2 - T_ψ) whenever the latter is finite"""
    if gensemi_rank is None:
        return CheckResult("rank-relation", True, {"gensemi_rank": None})
    passed = commutator_rank is not None and commutator_rank <= 2 * gensemi_rank
    return CheckResult("rank-relation", passed, {"commutator_rank": commutator_rank, "gensemi_rank": gensemi_rank})


def rank_equivalence_check(first, second, psi, window=None, margin=None, tolerance=None):
    """T1T2 - T_ψ and T2T1 - T_ψ have the same rank on the harmonic space"""
    if first.space is not Space.HARMONIC:
        return CheckResult.skipped("rank-equivalence", "rank equivalence is a harmonic-space statement")
    forward = finite_rank_or_none(gen_semicommutator_map(first, second, psi, window, margin), tolerance)
    backward = finite_rank_or_none(gen_semicommutator_map(second, first, psi, window, margin), tolerance)
    commutator = finite_rank_or_none(commutator_map(first, second, window, margin), tolerance)
    relation = rank_relation_check(commutator, forward)
    details = {"forward": forward, "backward": backward, "commutator": commutator}
    return CheckResult("rank-equivalence", forward == backward and relation.passed, details)


def svd_rank(coeff_map, threshold=None, tolerance=None):
    """Numerical rank of the truncated matrix, singular values above threshold·σ_max"""
    threshold = settings.SVD_RELATIVE_THRESHOLD if threshold is None else threshold
    tolerance = settings.ZERO_TOLERANCE if tolerance is None else tolerance
    matrix, _rows, _columns = dense_matrix(coeff_map)
    if not matrix.size:
        return 0
    values = linalg.svdvals(matrix)
    top = float(values.max())
    scale = max([1.0] + [coeff_map.scale(source) for source in coeff_map.sources])
    if top <= tolerance * scale:
        return 0
    return int(np.sum(values > threshold * top))


def reconstruct(canonical, coeff_map):
    """Rebuild the coefficients of a map from its canonical form"""
    k = coeff_map.net_degree
    entries = {source: 0.0 for source in range(coeff_map.window[0], coeff_map.window[1] + 1)}
    for term in canonical:
        source = term.index - k
        entries[source] = term.coefficient / (abs(source) + 1)
    return CoeffMap(
        coeff_map.space, k, coeff_map.window, entries, kind=coeff_map.kind, degrees=coeff_map.degrees
    )


def reconstruction_check(coeff_map, canonical, tolerance=1e-10):
    rebuilt = reconstruct(canonical, coeff_map)
    worst = 0.0
    for source, coeff in coeff_map:
        if abs(coeff) <= settings.ZERO_TOLERANCE * max(1.0, coeff_map.scale(source)):
            coeff = 0.0
        worst = max(worst, abs(rebuilt.coefficient(source) - coeff))
    return CheckResult("reconstruction", worst <= tolerance, {"max_error": worst})
