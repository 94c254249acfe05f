"""Exact graded characters of simple modules of restricted rational
Cherednik algebras of wreath products C_ell wr S_n at generic parameters,
via specialized wreath Macdonald polynomials and t,t-Kostka coefficients.
"""

from . import cherednik, cli, combinatorics, render, scalars, symfunc, verify, wreath
from .cherednik import GradedCharacter, c_delta, c_l, d_delta, graded_character_simple, kronecker
from .matrices import GradedMatrix
from .scalars import Cyclotomic, LaurentPoly, RatFunc
from .symfunc import SymFunc
from .wreath import MultiSymFunc, WreathCharTable, kostka_tt, kostka_tt_matrix

__all__ = [
    "Cyclotomic",
    "GradedCharacter",
    "GradedMatrix",
    "LaurentPoly",
    "MultiSymFunc",
    "RatFunc",
    "SymFunc",
    "WreathCharTable",
    "c_delta",
    "c_l",
    "cherednik",
    "cli",
    "combinatorics",
    "d_delta",
    "graded_character_simple",
    "kostka_tt",
    "kostka_tt_matrix",
    "kronecker",
    "render",
    "scalars",
    "symfunc",
    "verify",
    "wreath",
]

__version__ = "0.1.0"
