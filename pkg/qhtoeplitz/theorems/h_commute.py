"""Finite-rank commutators [T_{e^{ik1θ}r^m}, T_{e^{ik2θ}φ}] on the harmonic Bergman space.

The commutator has finite rank exactly when one of nine conditions holds.
Conditions (1)-(5) make it vanish; under (6)-(9) its range is Λ₁ and its
rank is |k1|+|k2|-1 for odd k1+k2, |k1|+|k2|-2 for even k1+k2.
"""
# qhtoeplitz Modules
from qhtoeplitz.mellin import GammaRatioTransform, RadialSymbol, odd_multiple_index
from qhtoeplitz.operators import Space
from qhtoeplitz.rank import SupportWindow
from qhtoeplitz.theorems.verdict import (
    COMMUTATOR, FREE_WITNESS, TheoremVerdict, boundary_notes, check_exponent, narrow, normalized_degrees,
    principal_condition, radial_part, same
)

THEOREM_ID = "h-commute"

CONDITIONS = {
    1: "k1 = m = 0",
    2: "k2 = 0 and φ = C",
    3: "k1 = k2 = 0",
    4: "k1 = k2 ≠ 0 and φ = C·r^m",
    5: "k1·k2 = -1 and φ = C((m+1)/2·r^-1 - (m-1)/2·r)",
    6: "k1·k2 < -1, |k2| >= 2, m + |k1| = 0 and φ = C·r^|k2|",
    7: "k1·k2 < -1, |k2| = 1 and φ from the commutator Gamma ratio",
    8: "k1·k2 > 0, k1 ≠ k2, |k2| < m+|k1|+2 and φ from the commutator Gamma ratio",
    9: "k1·k2 > 0, |k2| >= m+|k1|+2, m = (2n+1)|k1| and φ from the commutator Gamma ratio",
}


def holding_conditions(k1, k2, m):
    held = []
    if k1 == 0 and same(m, 0):
        held.append(1)
    if k2 == 0:
        held.append(2)
    if k1 == 0 and k2 == 0:
        held.append(3)
    if k1 == k2 != 0:
        held.append(4)
    if k1 * k2 == -1:
        held.append(5)
    if k1 * k2 < -1:
        if abs(k2) >= 2 and same(m + abs(k1), 0):
            held.append(6)
        if abs(k2) == 1:
            held.append(7)
    if k1 * k2 > 0:
        threshold = m + abs(k1) + 2
        if k1 != k2 and abs(k2) < threshold and not same(abs(k2), threshold):
            held.append(8)
        if (abs(k2) > threshold or same(abs(k2), threshold)) and odd_multiple_index(m, abs(k1)) is not None:
            held.append(9)
    return held


def pairing_symbol(m):
    """(m+1)/2·r^-1 - (m-1)/2·r"""
    return RadialSymbol([((m + 1) / 2, -1, 0), (-(m - 1) / 2, 1, 0)])


def commutator_symbol(k1, k2, m):
    """Radial part from the commutator Gamma ratio, degrees normalized to k1 > 0"""
    k1, k2 = normalized_degrees(k1, k2)
    return radial_part(GammaRatioTransform.commutator_family(k1, k2, m, prefactor=0.5))


def _construct(principal, k1, k2, m, phi):
    if principal in (1, 3):
        return (phi if phi is not None else FREE_WITNESS), ("phi2",)
    if principal == 2:
        return RadialSymbol.constant(1.0), ()
    if principal == 4:
        return RadialSymbol.monomial(m), ()
    if principal == 5:
        return pairing_symbol(m), ()
    if principal == 6:
        return RadialSymbol.monomial(abs(k2)), ()
    return commutator_symbol(k1, k2, m), ()


def predicted_rank(k1, k2):
    """Rank under conditions (6)-(9)"""
    if (k1 + k2) % 2:
        return abs(k1) + abs(k2) - 1
    return abs(k1) + abs(k2) - 2


def classify(k1, k2, m, phi=None):
    """Verdict for [T_{e^{ik1θ}r^m}, T_{e^{ik2θ}φ}] on L²ₕ.

    Without `phi` the verdict carries the symbol the principal condition
    constructs; with it, the verdict is restated for that φ.
    """
    check_exponent(m)
    held = holding_conditions(k1, k2, m)
    symbols = {"phi1": RadialSymbol.monomial(m)}
    free_roles = ()
    rank = range_indices = None
    if held:
        principal = principal_condition(held, phi)
        symbols["phi2"], free_roles = _construct(principal, k1, k2, m, phi)
        if principal <= 5:
            rank, range_indices = 0, ()
        else:
            rank, range_indices = predicted_rank(k1, k2), SupportWindow(k1, k2).Lambda1
    verdict = TheoremVerdict(
        THEOREM_ID,
        {"k1": k1, "k2": k2, "m": m},
        Space.HARMONIC,
        COMMUTATOR,
        (k1, k2),
        held,
        symbols,
        rank,
        range_indices,
        free_roles=free_roles,
        notes=boundary_notes(m),
    )
    return narrow(verdict, phi2=phi)
