"""Exact link-homotopy calculus: free-group words, Magnus expansion into the
reduced ring, Milnor-group equality, mu-invariants, and the A-B
relative-slice obstruction check."""

from .links import LinkPresentation, builtin, is_homotopically_trivial, mu
from .magnus import ExpansionContext, expand, is_trivial_mf, mf_equal
from .polynomial import IntPolynomial
from .series import Series
from .words import Word, commutator, conjugate, milnor_relator, parse_word

__all__ = [
    "ExpansionContext",
    "IntPolynomial",
    "LinkPresentation",
    "Series",
    "Word",
    "builtin",
    "commutator",
    "conjugate",
    "expand",
    "is_homotopically_trivial",
    "is_trivial_mf",
    "mf_equal",
    "milnor_relator",
    "mu",
    "parse_word",
]
