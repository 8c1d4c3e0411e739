"""Transfer of finite rank between the harmonic Bergman and the Bergman space.

A commutator of quasihomogeneous operators has finite rank on L²ₕ iff it has
finite rank on L²ₐ, and a finite-rank generalized semicommutator on L²ₕ stays
finite rank on L²ₐ in both orders. Ranks need not agree: the pair of degrees
(1, -1) with φ = (m+1)/2·r^-1 - (m-1)/2·r commutes on L²ₕ but leaves a
rank-one commutator on L²ₐ.
"""
# qhtoeplitz Modules
from qhtoeplitz.checks import CheckResult
from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.operators import Space, commutator_map, gen_semicommutator_map, operator_pair
from qhtoeplitz.rank import detect_rank, finite_rank_or_none
from qhtoeplitz.theorems import b_commute, h_commute
from qhtoeplitz.theorems.h_commute import pairing_symbol
from qhtoeplitz.theorems.verdict import COMMUTATOR, TheoremVerdict
from qhtoeplitz.util.log import logger

THEOREM_ID = "cross-space"


def cross_space_checks(k1, k2, phi1, phi2, psi=None, margin=None, tolerance=None):
    """Run one symbol pair through both spaces.

    Returns the commutator check (finite on L²ₕ iff finite on L²ₐ) and, with
    psi, the product check (finite on L²ₕ implies finite on L²ₐ in both
    orders).
    """
    harmonic = operator_pair(Space.HARMONIC, k1, phi1, k2, phi2)
    bergman = operator_pair(Space.BERGMAN, k1, phi1, k2, phi2)
    harmonic_rank = finite_rank_or_none(commutator_map(*harmonic, margin=margin), tolerance)
    bergman_rank = finite_rank_or_none(commutator_map(*bergman, margin=margin), tolerance)
    checks = [
        CheckResult(
            "cross-space-commutator",
            (harmonic_rank is None) == (bergman_rank is None),
            {"k1": k1, "k2": k2, "harmonic_rank": harmonic_rank, "bergman_rank": bergman_rank},
        )
    ]
    if psi is None:
        checks.append(CheckResult.skipped("cross-space-gensemi", "no ψ given"))
        return checks
    harmonic_product = finite_rank_or_none(gen_semicommutator_map(*harmonic, psi, margin=margin), tolerance)
    forward = finite_rank_or_none(gen_semicommutator_map(bergman[0], bergman[1], psi, margin=margin), tolerance)
    backward = finite_rank_or_none(gen_semicommutator_map(bergman[1], bergman[0], psi, margin=margin), tolerance)
    passed = harmonic_product is None or (forward is not None and backward is not None)
    checks.append(
        CheckResult(
            "cross-space-gensemi",
            passed,
            {"harmonic_rank": harmonic_product, "bergman_forward": forward, "bergman_backward": backward},
        )
    )
    return checks


def rank_gap_instance(m=0.0, margin=None, tolerance=None):
    """The commuting pair whose commutator becomes rank one on L²ₐ.

    On L²ₕ both [T1, T2] and T1T2 - I vanish; on L²ₐ, T2T1 = I while T1T2
    annihilates the constants, so both equal -(1 ⊗ 1).
    """
    phi1, phi2 = RadialSymbol.monomial(m), pairing_symbol(m)
    psi = RadialSymbol.constant(1.0)
    harmonic = operator_pair(Space.HARMONIC, 1, phi1, -1, phi2)
    bergman = operator_pair(Space.BERGMAN, 1, phi1, -1, phi2)
    details = {"m": m}
    details["harmonic_commutator"] = detect_rank(commutator_map(*harmonic, margin=margin), tolerance=tolerance).rank
    details["harmonic_gensemi"] = detect_rank(
        gen_semicommutator_map(*harmonic, psi, margin=margin), tolerance=tolerance
    ).rank
    passed = details["harmonic_commutator"] == 0 and details["harmonic_gensemi"] == 0
    for name, coeff_map in (
        ("bergman_commutator", commutator_map(*bergman, margin=margin)),
        ("bergman_gensemi", gen_semicommutator_map(*bergman, psi, margin=margin)),
    ):
        report = detect_rank(coeff_map, tolerance=tolerance)
        canonical = [(term.index, term.coefficient) for term in report.canonical]
        details[name] = {"rank": report.rank, "canonical": canonical}
        exact = len(canonical) == 1 and canonical[0][0] == 0 and abs(canonical[0][1] + 1.0) <= 1e-9
        passed = passed and report.rank == 1 and exact
    logger.debug("rank gap instance at m=%s: %s", m, details)
    return CheckResult("cross-space-rank-gap", passed, details)


def classify(k1, k2, m, phi=None):
    """Bergman commutator verdict read off the harmonic classification.

    The harmonic conditions decide finiteness; the Bergman classifier,
    restated for the harmonic symbol, supplies rank and canonical form.
    """
    harmonic = h_commute.classify(k1, k2, m, phi)
    if not harmonic.constructible:
        return TheoremVerdict(
            THEOREM_ID, harmonic.params, Space.BERGMAN, COMMUTATOR, (k1, k2),
            symbols=harmonic.symbols, notes=["no finite-rank symbol on L²ₕ"],
        )
    bergman = b_commute.classify(k1, k2, m, phi=harmonic.symbols["phi2"])
    notes = ["L²ₕ condition %s" % harmonic.condition_id if harmonic.finite else "not finite rank on L²ₕ"]
    if harmonic.finite != bergman.finite:
        notes.append("L²ₐ classification disagrees: condition %s" % bergman.condition_id)
    return TheoremVerdict(
        THEOREM_ID,
        harmonic.params,
        Space.BERGMAN,
        COMMUTATOR,
        (k1, k2),
        harmonic.conditions,
        harmonic.symbols,
        bergman.predicted_rank,
        bergman.predicted_range,
        bergman.predicted_canonical,
        harmonic.free_roles,
        notes,
    )
