"""Theorem family loaders"""
# qhtoeplitz Modules
from qhtoeplitz.exceptions import InvalidTheorem

__all__ = [
    # Harmonic Bergman space
    "h_commute",
    "h_gensemi",
    "corollaries",
    # Bergman space
    "b_commute",
    "b_gensemi",
    # Both
    "cross_space",
]


def normalize_name(theorem_name):
    """Accept the dashed names used on the command line"""
    return theorem_name.replace("-", "_")


def get_theorem_module(theorem_name):
    theorem_name = normalize_name(theorem_name)
    if theorem_name not in __all__:
        raise InvalidTheorem("Invalid theorem family '%s'" % theorem_name)
    return __import__("qhtoeplitz.theorems.%s" % theorem_name, globals(), locals(), [theorem_name], 0)


def import_theorem(theorem_name):
    """Return the classify function of a theorem family"""
    theorem_module = get_theorem_module(theorem_name)
    classify = getattr(theorem_module, "classify", None)
    if classify is None:
        raise InvalidTheorem("Theorem family '%s' has no classifier" % theorem_name)
    return classify
