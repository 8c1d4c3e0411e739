"""Finite-rank generalized semicommutators T_{e^{ik1θ}r^m}T_{e^{ik2θ}φ} - T_{e^{i(k1+k2)θ}ψ} on L²ₕ.

Eight conditions; (1)-(4) make the operator vanish, under (5)-(8) its range
is Λ₂ and its rank is max{|k1|-1, |k2|-1, |k1+k2|-1}.
"""
# qhtoeplitz Modules
from qhtoeplitz.exceptions import UnsupportedTermError
from qhtoeplitz.mellin import GammaRatioTransform, RadialSymbol, odd_multiple_index
from qhtoeplitz.operators import Space
from qhtoeplitz.rank import SupportWindow
from qhtoeplitz.theorems.b_gensemi import bergman_psi
from qhtoeplitz.theorems.h_commute import commutator_symbol, pairing_symbol
from qhtoeplitz.theorems.verdict import (
    FREE_WITNESS, GENSEMI, TheoremVerdict, boundary_notes, check_exponent, narrow, normalized_degrees,
    principal_condition, radial_part, same
)
from qhtoeplitz.util.log import logger

THEOREM_ID = "h-gensemi"

CONDITIONS = {
    1: "k1 = m = 0 and ψ = φ",
    2: "k2 = 0, φ = C and ψ = C·r^m",
    3: "k1 = k2 = 0 and ψ = φ - m·r^m∫_r^1 φ(t)t^(-m-1) dt",
    4: "k1·k2 = -1, φ = C((m+1)/2·r^-1 - (m-1)/2·r) and ψ = C",
    5: "k1·k2 < -1, |k2| >= 2, m + |k1| = 0, φ = C·r^|k2| and ψ = C·r^(|k2|-1)",
    6: "k1·k2 < -1, |k2| = 1 and the Gamma ratio pair",
    7: "k1·k2 > 0, |k2| < m+2 and the Gamma ratio pair",
    8: "k1·k2 > 0, |k2| >= m+2, m = (2n+1)|k1| and the Gamma ratio pair",
}


def holding_conditions(k1, k2, m):
    held = []
    if k1 == 0 and same(m, 0):
        held.append(1)
    if k2 == 0:
        held.append(2)
    if k1 == 0 and k2 == 0:
        held.append(3)
    if k1 * k2 == -1:
        held.append(4)
    if k1 * k2 < -1:
        if abs(k2) >= 2 and same(m + abs(k1), 0):
            held.append(5)
        if abs(k2) == 1:
            held.append(6)
    if k1 * k2 > 0:
        threshold = m + 2
        if abs(k2) < threshold and not same(abs(k2), threshold):
            held.append(7)
        elif odd_multiple_index(m, abs(k1)) is not None:
            held.append(8)
    return held


def product_symbol(k1, k2, m):
    """ψ from the product Gamma ratio, degrees normalized to k1 > 0"""
    k1, k2 = normalized_degrees(k1, k2)
    return radial_part(GammaRatioTransform.product_family(k1, k2, m, prefactor=0.5))


def _construct(principal, k1, k2, m, phi):
    """(φ, ψ, free roles) for the principal condition"""
    if principal == 1:
        phi = phi if phi is not None else FREE_WITNESS
        return phi, phi, ("phi2",)
    if principal == 2:
        return RadialSymbol.constant(1.0), RadialSymbol.monomial(m), ()
    if principal == 3:
        phi = phi if phi is not None else FREE_WITNESS
        return phi, bergman_psi(0, m, 0, phi), ("phi2",)
    if principal == 4:
        return pairing_symbol(m), RadialSymbol.constant(1.0), ()
    if principal == 5:
        return RadialSymbol.monomial(abs(k2)), RadialSymbol.monomial(abs(k2) - 1), ()
    return commutator_symbol(k1, k2, m), product_symbol(k1, k2, m), ()


def predicted_rank(k1, k2):
    """Rank under conditions (5)-(8)"""
    return max(abs(k1) - 1, abs(k2) - 1, abs(k1 + k2) - 1)


def classify(k1, k2, m, phi=None, psi=None):
    """Verdict for T_{e^{ik1θ}r^m}T_{e^{ik2θ}φ} - T_{e^{i(k1+k2)θ}ψ} on L²ₕ"""
    check_exponent(m)
    held = holding_conditions(k1, k2, m)
    symbols = {"phi1": RadialSymbol.monomial(m)}
    free_roles = ()
    notes = boundary_notes(m)
    rank = range_indices = None
    if held:
        principal = principal_condition(held, phi)
        try:
            symbols["phi2"], symbols["psi"], free_roles = _construct(principal, k1, k2, m, phi)
        except UnsupportedTermError as ex:
            # Condition (3) integrates φ; logarithmic φ can leave the symbol algebra
            logger.warning("No closed form for ψ at k=(%d, %d), m=%s: %s", k1, k2, m, ex)
            notes.append("ψ has no closed form in the symbol algebra: %s" % ex.message)
            symbols["phi2"], free_roles = phi, ("phi2",)
        if principal <= 4:
            rank, range_indices = 0, ()
        else:
            rank, range_indices = predicted_rank(k1, k2), SupportWindow(k1, k2).Lambda2
    verdict = TheoremVerdict(
        THEOREM_ID,
        {"k1": k1, "k2": k2, "m": m},
        Space.HARMONIC,
        GENSEMI,
        (k1, k2),
        held,
        symbols,
        rank,
        range_indices,
        free_roles=free_roles,
        notes=notes,
    )
    return narrow(verdict, phi2=phi, psi=psi)
