"""Generalized semicommutators T_{e^{ik1θ}r^m}T_{e^{ik2θ}φ} - T_{e^{i(k1+k2)θ}ψ} on the Bergman space.

On L²ₐ the product identity pins ψ down completely:

    ψ(r) = φ(r)/r^{k1} - (m+k1)·r^{m+k2}·∫_r^1 φ(t)·t^{-(m+k1+k2+1)} dt

and the operator has finite rank iff this ψ is a T-function. For monomial
φ = r^{m2} the conditions and the rank are explicit.
"""
# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.exceptions import SymbolDomainError, UnsupportedTermError
from qhtoeplitz.mellin import RadialSymbol, as_transform
from qhtoeplitz.operators import Space
from qhtoeplitz.theorems.verdict import GENSEMI, TheoremVerdict, boundary_notes, check_exponent, same
from qhtoeplitz.util.log import logger

THEOREM_ID = "b-gensemi"
GENERAL_THEOREM_ID = "b-gensemi-general"

CONDITIONS = {
    1: "k1+m1 ≠ 0, k2-m2 ≠ 0, m1+k2 >= -1 and m2-k1 >= -1",
    2: "k1+m1 = 0 and m2-k1 >= -1",
    3: "k2-m2 = 0 and m1+k2 >= -1",
}

# Smallest power a T-function term may carry
T_FUNCTION_FLOOR = -1.0


def bergman_psi(k1, m, k2, phi):
    """ψ paired with T_{e^{ik1θ}r^m}T_{e^{ik2θ}φ}, term by term.

    With q = p - m - k1 - k2, a term c·r^p contributes
    c(p-k2)/q·r^{p-k1} - c(m+k1)/q·r^{m+k2}, or c·r^{p-k1}[1 + (m+k1)log r]
    when q = 0. Raises UnsupportedTermError when a log term meets q = 0 and
    SymbolDomainError when ψ leaves L¹.
    """
    weight = m + k1
    terms = []
    for term in phi.terms:
        coeff, power = term.coeff, term.power
        if same(weight, 0):
            terms.append((coeff, power - k1, term.logexp))
            continue
        gap = power - m - k1 - k2
        if same(gap, 0):
            if term.logexp:
                raise UnsupportedTermError("ψ for r^%s·log r needs a squared logarithm" % power)
            terms.append((coeff, power - k1, 0))
            terms.append((coeff * weight, power - k1, 1))
        elif not term.logexp:
            terms.append((coeff * (power - k2) / gap, power - k1, 0))
            terms.append((-coeff * weight / gap, m + k2, 0))
        else:
            terms.append((coeff * (power - k2) / gap, power - k1, 1))
            terms.append((coeff * weight / gap ** 2, m + k2, 0))
            terms.append((-coeff * weight / gap ** 2, power - k1, 0))
    return RadialSymbol(terms)


def is_t_function(symbol):
    """Power/log symbols: every term at r^p with p >= -1"""
    tolerance = settings.INTEGRALITY_TOLERANCE
    return all(term.power >= T_FUNCTION_FLOOR - tolerance for term in symbol.terms)


def monomial_psi_transform(k1, m1, k2, m2):
    """Closed-form ψ̂ for φ = r^{m2}, as a function of z"""
    denominator = m1 + k2 - m2 + k1
    if same(denominator, 0):
        return lambda z: (z - k1 + k2) / (z + m1 + k2) ** 2

    def transform(z):
        # a vanishing weight drops its term together with its pole
        value = 0.0
        if not same(k1 + m1, 0):
            value += (k1 + m1) / (z + m1 + k2)
        if not same(m2 - k2, 0):
            value -= (m2 - k2) / (z + m2 - k1)
        return value / denominator

    return transform


def predicted_canonical(k1, k2, psi_transform):
    """C_j of T1T2 - T_ψ from the sources the product annihilates.

    For n < -k2 the first factor kills zⁿ, so only -T_ψ acts there:
    C = -(n+1)·2(n+k+1)·ψ̂(2n+k+2) at index n+k. Other sources vanish.
    """
    k = k1 + k2
    canonical = {}
    for n in range(max(0, -k), -k2):
        coefficient = -(n + 1) * 2 * (n + k + 1) * psi_transform(2 * n + k + 2)
        if abs(coefficient) > 1e-13 * (n + 1) * (abs(n + k) + 1):
            canonical[n + k] = coefficient
    return canonical


def holding_conditions(k1, m1, k2, m2):
    held = []
    tolerance = settings.INTEGRALITY_TOLERANCE
    if (
        not same(k1 + m1, 0) and not same(k2 - m2, 0)
        and m1 + k2 >= -1 - tolerance and m2 - k1 >= -1 - tolerance
    ):
        held.append(1)
    if same(k1 + m1, 0) and m2 - k1 >= -1 - tolerance:
        held.append(2)
    if same(k2 - m2, 0) and m1 + k2 >= -1 - tolerance:
        held.append(3)
    return held


def monomial_rank(k1, k2, held):
    """(rank, range) of the finite-rank monomial case"""
    k = k1 + k2
    if k >= 0:
        if k2 <= -2 and 1 in held:
            return -k2 - 1, tuple(range(k, k1 - 1))
        if k2 == -1 and (2 in held or 3 in held):
            return 1, (k1 - 1,)
        return 0, ()
    if k1 >= 2 and 1 in held:
        return k1 - 1, tuple(range(0, k1 - 1))
    if k1 == 1 and 2 in held:
        return 1, (0,)
    return 0, ()


def classify(k1, m1, k2, m2):
    """Verdict for T_{e^{ik1θ}r^{m1}}T_{e^{ik2θ}r^{m2}} - T_{e^{i(k1+k2)θ}ψ} on L²ₐ"""
    check_exponent(m1)
    check_exponent(m2)
    held = holding_conditions(k1, m1, k2, m2)
    phi = RadialSymbol.monomial(m2)
    symbols = {"phi1": RadialSymbol.monomial(m1), "phi2": phi}
    notes = boundary_notes(m1) + boundary_notes(m2)
    try:
        symbols["psi"] = bergman_psi(k1, m1, k2, phi)
    except SymbolDomainError as ex:
        logger.debug("ψ for k=(%d, %d), m=(%s, %s) is not integrable: %s", k1, k2, m1, m2, ex)
        notes.append("ψ is not integrable: %s" % ex.message)
        held = []
    rank = range_indices = canonical = None
    if held:
        rank, range_indices = monomial_rank(k1, k2, held)
        canonical = predicted_canonical(k1, k2, monomial_psi_transform(k1, m1, k2, m2))
    return TheoremVerdict(
        THEOREM_ID,
        {"k1": k1, "m1": m1, "k2": k2, "m2": m2},
        Space.BERGMAN,
        GENSEMI,
        (k1, k2),
        held,
        symbols,
        rank,
        range_indices,
        canonical,
        notes=notes,
    )


def classify_general(k1, m, k2, phi):
    """Verdict for a power/log φ: finite rank iff the paired ψ is a T-function.

    Condition 1 is that iff; the notes record whether the sufficient test
    "φ/r^{k1} is a T-function and (m+k2 >= -1 or m+k1 = 0)" also holds.
    """
    check_exponent(m)
    symbols = {"phi1": RadialSymbol.monomial(m), "phi2": phi}
    notes = boundary_notes(m)
    held = []
    try:
        psi = bergman_psi(k1, m, k2, phi)
    except SymbolDomainError as ex:
        notes.append("ψ is not integrable: %s" % ex.message)
    else:
        symbols["psi"] = psi
        if is_t_function(psi):
            held.append(1)
    try:
        shifted = is_t_function(phi.shift(-k1))
    except SymbolDomainError:
        shifted = False
    sufficient = shifted and (m + k2 >= -1 - settings.INTEGRALITY_TOLERANCE or same(m + k1, 0))
    notes.append("sufficient test %s" % ("holds" if sufficient else "does not hold"))
    rank = range_indices = canonical = None
    if held:
        canonical = predicted_canonical(k1, k2, as_transform(symbols["psi"]))
        rank, range_indices = len(canonical), tuple(sorted(canonical))
    return TheoremVerdict(
        GENERAL_THEOREM_ID,
        {"k1": k1, "m": m, "k2": k2, "phi": phi.as_text()},
        Space.BERGMAN,
        GENSEMI,
        (k1, k2),
        held,
        symbols,
        rank,
        range_indices,
        canonical,
        notes=notes,
    )
