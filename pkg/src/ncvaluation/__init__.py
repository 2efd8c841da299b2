"""Monic Groebner bases in free associative algebras and the extension of
p-adic valuations to finitely presented algebras."""

from .coefficients import (
    INFINITY,
    NEG_INFINITY,
    QQ,
    ZZ,
    LocalRing,
    PrimeField,
    ValuedRationalConfig,
    ring_from_tag,
)
from .expr import ParseError, format_poly, parse_poly
from .free_algebra import Alphabet, FreeAlgebra, MonomialOrder, Poly, divides
from .groebner import (
    MonicSet,
    check_base_change,
    complete,
    divide,
    is_groebner,
    is_member,
    normal_form,
    normal_word_counts,
    normal_words,
    overlaps,
)
from .presentation import Presentation, load_presentation, parse_presentation
from .quotient import QuotientAlgebra, QuotientElement
from .valuation import HypothesisError, ValuedAlgebra, zero_divisor_scan

__version__ = "0.1.0"
