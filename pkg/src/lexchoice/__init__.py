"""Exact coherent choice functions on finite gamble spaces.

Maximality, lexicographic and convex choice rules over option sets of
rational gambles, with a constructive link from convex choice to
lexicographic probability systems.
"""

from .choice import (
    ChoiceResult,
    ChoiceRule,
    choice_relation,
    choose_convex,
    choose_lexicographic,
    choose_maximality,
    convex,
    infimum,
    lexicographic,
    maximality,
    rejection,
)
from .cones import GambleCone, ch_member, convexity_counterexample, lower_prevision, posi_member
from .descent import construct_extension, extend_functional
from .errors import *  # noqa: F401,F403
from .gambles import Comparison, Gamble, OptionSet, PossibilitySpace, pointwise_compare, scale, translate
from .lexsys import BinaryFamily, LexOrder, LexSystem, classify_binary, lex_compare

__version__ = "0.1.0"
