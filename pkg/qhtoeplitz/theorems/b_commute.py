"""Finite-rank commutators [T_{e^{ik1θ}r^m}, T_{e^{ik2θ}φ}] on the Bergman space.

Such a commutator has rank 0 or 1. Under conditions (6) and (7) it is
C·z^{max(k1,k2)-1} ⊗ z^{max(-k1,-k2)-1}.
"""
# qhtoeplitz Modules
from qhtoeplitz.mellin import GammaRatioTransform, RadialSymbol, as_transform, odd_multiple_index
from qhtoeplitz.operators import Space
from qhtoeplitz.theorems.verdict import (
    COMMUTATOR, FREE_WITNESS, TheoremVerdict, boundary_notes, check_exponent, narrow, normalized_degrees,
    principal_condition, radial_part, same
)

THEOREM_ID = "b-commute"

CONDITIONS = {
    1: "k1 = m = 0",
    2: "k2 = 0 and φ = C",
    3: "k1 = k2 = 0",
    4: "k1·k2 > 0, |k2| < m+|k1|+2 and φ from the commutator Gamma ratio",
    5: "k1·k2 > 0, |k2| >= m+|k1|+2, m = (2n+1)|k1| and φ from the commutator Gamma ratio",
    6: "k1·k2 < 0, |k2| >= 2, m + |k1| = 0 and φ = C·r^|k2|",
    7: "k1·k2 < 0, |k2| = 1 and φ from the commutator Gamma ratio",
}


def holding_conditions(k1, k2, m):
    held = []
    if k1 == 0 and same(m, 0):
        held.append(1)
    if k2 == 0:
        held.append(2)
    if k1 == 0 and k2 == 0:
        held.append(3)
    if k1 * k2 > 0:
        threshold = m + abs(k1) + 2
        if abs(k2) < threshold and not same(abs(k2), threshold):
            held.append(4)
        elif odd_multiple_index(m, abs(k1)) is not None:
            held.append(5)
    if k1 * k2 < 0:
        if abs(k2) >= 2 and same(m + abs(k1), 0):
            held.append(6)
        if abs(k2) == 1:
            held.append(7)
    return held


def rank_one_term(principal, k1, k2, m, phi):
    """(index, C) of the rank-one commutator under condition (6) or (7).

    Computed for k1 > 0 and carried over to k1 < 0 through
    [A, B] = -([A*, B*])*, which swaps the two sides of the tensor and
    flips the sign.
    """
    degree, _other = normalized_degrees(k1, k2)
    if principal == 6:
        coefficient = -1.0
    else:
        transform = as_transform(phi)
        coefficient = -4 * degree * (degree + 1) / (degree + 2 + m) * transform(2 * degree + 1)
    if k1 > 0:
        return degree - 1, coefficient
    return max(k1, k2) - 1, -coefficient


def classify(k1, k2, m, phi=None):
    """Verdict for [T_{e^{ik1θ}r^m}, T_{e^{ik2θ}φ}] on L²ₐ"""
    check_exponent(m)
    held = holding_conditions(k1, k2, m)
    symbols = {"phi1": RadialSymbol.monomial(m)}
    free_roles = ()
    rank = range_indices = canonical = None
    if held:
        principal = principal_condition(held, phi)
        if principal in (1, 3):
            symbols["phi2"] = phi if phi is not None else FREE_WITNESS
            free_roles = ("phi2",)
        elif principal == 2:
            symbols["phi2"] = RadialSymbol.constant(1.0)
        elif principal == 6:
            symbols["phi2"] = RadialSymbol.monomial(abs(k2))
        else:
            degree, other = normalized_degrees(k1, k2)
            symbols["phi2"] = radial_part(GammaRatioTransform.commutator_family(degree, other, m, prefactor=0.5))
        if principal <= 5:
            rank, range_indices, canonical = 0, (), {}
        else:
            index, coefficient = rank_one_term(principal, k1, k2, m, symbols["phi2"])
            rank, range_indices, canonical = 1, (index,), {index: coefficient}
    verdict = TheoremVerdict(
        THEOREM_ID,
        {"k1": k1, "k2": k2, "m": m},
        Space.BERGMAN,
        COMMUTATOR,
        (k1, k2),
        held,
        symbols,
        rank,
        range_indices,
        canonical,
        free_roles=free_roles,
        notes=boundary_notes(m),
    )
    return narrow(verdict, phi2=phi)
