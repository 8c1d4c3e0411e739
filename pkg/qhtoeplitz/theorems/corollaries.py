"""Special cases of the classification theorems with their own iff-conditions.

Each function evaluates the displayed conditions directly, builds the
symbols and borrows rank predictions from the generic classifier it
specializes, so the two can be checked against each other.
"""
# qhtoeplitz Modules
from qhtoeplitz.exceptions import InvalidTheorem
from qhtoeplitz.mellin import RadialSymbol, mellin_convolve
from qhtoeplitz.operators import Space
from qhtoeplitz.theorems import b_commute, h_commute, h_gensemi
from qhtoeplitz.theorems.verdict import (
    COMMUTATOR, GENSEMI, SEMICOMMUTATOR, TheoremVerdict, check_exponent, proportionality, same
)

# r ∗_M r^-1
UNIT_CONVOLUTION = mellin_convolve(RadialSymbol.monomial(1), RadialSymbol.monomial(-1))


def _zero_rank(theorem_id, params, kind, degrees, held, symbols, space=Space.HARMONIC):
    rank, range_indices = (0, ()) if held else (None, None)
    canonical = {} if held and Space(space) is Space.BERGMAN else None
    return TheoremVerdict(theorem_id, params, space, kind, degrees, held, symbols, rank, range_indices, canonical)


def _borrowed(theorem_id, params, kind, degrees, held, symbols, generic, space=Space.HARMONIC):
    """Verdict whose predictions come from the generic classifier's verdict"""
    if not held or not generic.finite:
        return TheoremVerdict(theorem_id, params, space, kind, degrees, held, symbols)
    return TheoremVerdict(
        theorem_id,
        params,
        space,
        kind,
        degrees,
        held,
        symbols,
        generic.predicted_rank,
        generic.predicted_range,
        generic.predicted_canonical,
        notes=["predictions from %s condition %s" % (generic.theorem_id, generic.condition_id)],
    )


def _commutator_classifier(space):
    return b_commute if Space(space) is Space.BERGMAN else h_commute


def cradial(part, k, phi1, phi2):
    """Commutators with a radial symbol or two opposite-degree ones, all rank 0.

    (a) [T_{φ1}, T_{e^{ikθ}φ2}]: k = 0 or φ1 constant.
    (b) k ≠ 0, [T_{e^{ikθ}φ1}, T_{e^{ikθ}φ2}]: φ1 = C·φ2.
    (c) k ≠ 0, [T_{e^{ikθ}φ1}, T_{e^{-ikθ}φ2}]: |k| = 1 and φ1 ∗ φ2 = C(r ∗ r^-1).
    """
    params = {"part": part, "k": k, "phi1": phi1.as_text(), "phi2": phi2.as_text()}
    symbols = {"phi1": phi1, "phi2": phi2}
    if part == "a":
        held = [condition for condition, holds in ((1, k == 0), (2, phi1.is_constant)) if holds]
        return _zero_rank("cor-cradial", params, COMMUTATOR, (0, k), held, symbols)
    if k == 0:
        raise ValueError("Parts (b) and (c) need k ≠ 0")
    if part == "b":
        held = [1] if proportionality(phi1, phi2) else []
        return _zero_rank("cor-cradial", params, COMMUTATOR, (k, k), held, symbols)
    if part == "c":
        held = []
        if abs(k) == 1 and proportionality(mellin_convolve(phi1, phi2), UNIT_CONVOLUTION):
            held.append(1)
        return _zero_rank("cor-cradial", params, COMMUTATOR, (k, -k), held, symbols)
    raise InvalidTheorem("Unknown part '%s' of the radial commutator corollary" % part)


def pradial(part, k, phi1, phi2, psi):
    """Generalized semicommutators with radial factors, all rank 0.

    (a) φ1 nonconstant, φ2 ≠ 0, T_{φ1}T_{e^{ikθ}φ2} - T_{e^{ikθ}ψ}: k = 0 and 1 ∗ ψ = φ1 ∗ φ2.
    (b) k ≠ 0, T_{e^{ikθ}φ1}T_{e^{-ikθ}φ2} - T_ψ: |k| = 1, φ1 ∗ φ2 = C(r ∗ r^-1) and ψ = C.
    """
    params = {"part": part, "k": k, "phi1": phi1.as_text(), "phi2": phi2.as_text(), "psi": psi.as_text()}
    symbols = {"phi1": phi1, "phi2": phi2, "psi": psi}
    if part == "a":
        if phi1.is_constant or phi2.is_zero:
            raise ValueError("Part (a) needs a nonconstant φ1 and a nonzero φ2")
        convolution = mellin_convolve(phi1, phi2)
        held = [1] if k == 0 and mellin_convolve(RadialSymbol.constant(1.0), psi).almost_equal(convolution) else []
        return _zero_rank("cor-pradial", params, GENSEMI, (0, k), held, symbols)
    if k == 0:
        raise ValueError("Part (b) needs k ≠ 0")
    if part == "b":
        held = []
        constant = proportionality(mellin_convolve(phi1, phi2), UNIT_CONVOLUTION)
        if abs(k) == 1 and constant and psi.almost_equal(RadialSymbol.constant(constant)):
            held.append(1)
        return _zero_rank("cor-pradial", params, GENSEMI, (k, -k), held, symbols)
    raise InvalidTheorem("Unknown part '%s' of the radial product corollary" % part)


def _check_degree(k1):
    if not (k1 > 0 or k1 == -1):
        raise ValueError("k1 must be positive or -1, got %s" % k1)


def commonial(part, k1, k2, phi, space=Space.HARMONIC):
    """Commutators with T_{e^{±ik1θ}r^{k1}}, k1 > 0 or k1 = -1.

    (a) [T_{e^{ik1θ}r^{k1}}, T_{e^{ik2θ}φ}]: k2 > -2 and φ = C·r^{k2}.
    (b) [T_{e^{-ik1θ}r^{k1}}, T_{e^{ik2θ}φ}]: k2 < 2 and φ = C·r^{-k2}.
    """
    _check_degree(k1)
    if part not in ("a", "b"):
        raise InvalidTheorem("Unknown part '%s' of the monomial commutator corollary" % part)
    degree = k1 if part == "a" else -k1
    expected = RadialSymbol.monomial(k2 if part == "a" else -k2)
    bound_ok = k2 > -2 if part == "a" else k2 < 2
    held = [1] if bound_ok and proportionality(phi, expected) else []
    symbols = {"phi1": RadialSymbol.monomial(k1), "phi2": phi}
    generic = _commutator_classifier(space).classify(degree, k2, k1, phi=phi)
    params = {"part": part, "k1": k1, "k2": k2, "phi": phi.as_text()}
    return _borrowed("cor-commonial", params, COMMUTATOR, (degree, k2), held, symbols, generic, space)


def comr(k1, m1, k2, m2, space=Space.HARMONIC):
    """[T_{e^{ik1θ}r^{m1}}, T_{e^{ik2θ}r^{m2}}], k1·k2 ≠ 0.

    Finite rank iff (1) k1 = k2 and m1 = m2, (2) k1 = m1 and k2 = m2 or
    (3) k1 = -m1 and k2 = -m2.
    """
    if k1 * k2 == 0:
        raise ValueError("The monomial commutator corollary needs k1·k2 ≠ 0")
    check_exponent(m1)
    check_exponent(m2)
    held = [
        condition
        for condition, holds in (
            (1, k1 == k2 and same(m1, m2)),
            (2, same(k1, m1) and same(k2, m2)),
            (3, same(k1, -m1) and same(k2, -m2)),
        )
        if holds
    ]
    phi = RadialSymbol.monomial(m2)
    symbols = {"phi1": RadialSymbol.monomial(m1), "phi2": phi}
    generic = _commutator_classifier(space).classify(k1, k2, m1, phi=phi)
    params = {"k1": k1, "m1": m1, "k2": k2, "m2": m2}
    return _borrowed("cor-comr", params, COMMUTATOR, (k1, k2), held, symbols, generic, space)


def semianaly(part, k1, k2, phi, psi):
    """T_{e^{±ik1θ}r^{k1}}T_{e^{ik2θ}φ} - T_ψ on L²ₕ, k1 > 0 or k1 = -1.

    (a) k2 > max{-2, -k1-2}, φ = C·r^{k2} and ψ = C·r^{k1+k2}.
    (b) k2 < min{2, k1+2}, φ = C·r^{-k2} and ψ = C·r^{k1-k2}.
    """
    _check_degree(k1)
    if part == "a":
        degree, bound_ok = k1, k2 > max(-2, -k1 - 2)
        expected_phi, expected_psi = RadialSymbol.monomial(k2), RadialSymbol.monomial(k1 + k2)
    elif part == "b":
        degree, bound_ok = -k1, k2 < min(2, k1 + 2)
        expected_phi, expected_psi = RadialSymbol.monomial(-k2), RadialSymbol.monomial(k1 - k2)
    else:
        raise InvalidTheorem("Unknown part '%s' of the monomial product corollary" % part)
    held = []
    constant = proportionality(phi, expected_phi)
    if bound_ok and constant and psi.almost_equal(expected_psi * constant):
        held.append(1)
    symbols = {"phi1": RadialSymbol.monomial(k1), "phi2": phi, "psi": psi}
    generic = h_gensemi.classify(degree, k2, k1, phi=phi, psi=psi)
    params = {"part": part, "k1": k1, "k2": k2, "phi": phi.as_text(), "psi": psi.as_text()}
    return _borrowed("cor-semianaly", params, GENSEMI, (degree, k2), held, symbols, generic)


def semimono_psi(condition, k1, m1, k2):
    if condition == 1:
        degree = abs(k1)
        return RadialSymbol([
            ((m1 + degree) / (2 * degree), m1 + degree, 0),
            (-(m1 - degree) / (2 * degree), m1 - degree, 0),
        ])
    if condition == 2:
        return RadialSymbol.monomial(k1 + k2)
    return RadialSymbol.monomial(-k1 - k2)


def semimono(k1, m1, k2, m2):
    """T_{e^{ik1θ}r^{m1}}T_{e^{ik2θ}r^{m2}} - T_ψ on L²ₕ, k1·k2 ≠ 0.

    (1) k1 = k2, m1 = m2, |k1| < m1+2, ψ = (m1+|k1|)/(2|k1|)·r^{m1+|k1|} - (m1-|k1|)/(2|k1|)·r^{m1-|k1|}.
    (2) k1 = m1, k2 = m2, k1+k2 ≠ -2, ψ = r^{k1+k2}.
    (3) k1 = -m1, k2 = -m2, k1+k2 ≠ 2, ψ = r^{-k1-k2}.
    """
    if k1 * k2 == 0:
        raise ValueError("The monomial product corollary needs k1·k2 ≠ 0")
    check_exponent(m1)
    check_exponent(m2)
    held = [
        condition
        for condition, holds in (
            (1, k1 == k2 and same(m1, m2) and abs(k1) < m1 + 2 and not same(abs(k1), m1 + 2)),
            (2, same(k1, m1) and same(k2, m2) and k1 + k2 != -2),
            (3, same(k1, -m1) and same(k2, -m2) and k1 + k2 != 2),
        )
        if holds
    ]
    phi = RadialSymbol.monomial(m2)
    symbols = {"phi1": RadialSymbol.monomial(m1), "phi2": phi}
    generic = h_gensemi.classify(k1, k2, m1, phi=phi)
    if held:
        symbols["psi"] = semimono_psi(held[0], k1, m1, k2)
        generic = h_gensemi.classify(k1, k2, m1, phi=phi, psi=symbols["psi"])
    params = {"k1": k1, "m1": m1, "k2": k2, "m2": m2}
    return _borrowed("cor-semimono", params, GENSEMI, (k1, k2), held, symbols, generic)


def semicom(k1, k2, m, phi):
    """The ordinary semicommutator (T_{e^{ik1θ}r^m}, T_{e^{ik2θ}φ}] on L²ₕ, k1·k2 ≠ 0.

    (1) m = k1, k2 > max{-2, -k1-2} and φ = r^{k2}.
    (2) m = -k1, k2 < min{2, -k1+2} and φ = r^{-k2}.
    """
    if k1 * k2 == 0:
        raise ValueError("The semicommutator corollary needs k1·k2 ≠ 0")
    check_exponent(m)
    held = []
    if same(m, k1) and k2 > max(-2, -k1 - 2) and proportionality(phi, RadialSymbol.monomial(k2)):
        held.append(1)
    if same(m, -k1) and k2 < min(2, -k1 + 2) and proportionality(phi, RadialSymbol.monomial(-k2)):
        held.append(2)
    phi1 = RadialSymbol.monomial(m)
    symbols = {"phi1": phi1, "phi2": phi}
    generic = h_gensemi.classify(k1, k2, m, phi=phi, psi=phi1 * phi)
    params = {"k1": k1, "k2": k2, "m": m, "phi": phi.as_text()}
    return _borrowed("cor-semicom", params, SEMICOMMUTATOR, (k1, k2), held, symbols, generic)


CLASSIFIERS = {
    "cradial": cradial,
    "pradial": pradial,
    "commonial": commonial,
    "comr": comr,
    "semianaly": semianaly,
    "semimono": semimono,
    "semicom": semicom,
}


def classify(which, *args, **kwargs):
    """Dispatch to one corollary by name"""
    try:
        classifier = CLASSIFIERS[which]
    except KeyError as ex:
        raise InvalidTheorem("Unknown corollary '%s'" % which) from ex
    return classifier(*args, **kwargs)
