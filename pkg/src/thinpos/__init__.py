"""thinpos: combinatorial thin-position machinery for knots.

Braid words and highly twisted plats, Morse event sequences with both width
formulas, planar-diagram invariants (Kauffman bracket, Jones, alternation and
reducedness certificates), the tangle-sum bridge-number predictor, and the
width-78 family verifier, all over exact integer arithmetic.
"""

from .braid import BraidWord, compose, permutation, twist_region
from .diagram import (
    Certificate,
    Inconclusive,
    JonesWitness,
    PDDiagram,
    ReducedAlternating,
    bracket_bruteforce,
    certify_nontrivial,
    dumps_pd,
    is_alternating,
    is_reduced,
    jones,
    kauffman_bracket,
    parse_pd,
    writhe,
)
from .errors import DomainError, HypothesisError, MultiComponentError
from .laurent import LaurentPoly
from .morse import (
    MAX,
    MIN,
    MorseEmbedding,
    ThinThickTuple,
    punctures_from_chi,
    thick_lower_bound,
    weak_reduction_move,
    width_from_tuple,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Certificate",
    "DomainError",
    "HypothesisError",
    "Inconclusive",
    "JonesWitness",
    "LaurentPoly",
    "MAX",
    "MIN",
    "MorseEmbedding",
    "MultiComponentError",
    "PDDiagram",
    "ReducedAlternating",
    "ThinThickTuple",
    "bracket_bruteforce",
    "certify_nontrivial",
    "compose",
    "dumps_pd",
    "is_alternating",
    "is_reduced",
    "jones",
    "kauffman_bracket",
    "parse_pd",
    "permutation",
    "punctures_from_chi",
    "thick_lower_bound",
    "twist_region",
    "weak_reduction_move",
    "width_from_tuple",
    "writhe",
]
