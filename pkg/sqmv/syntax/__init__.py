"""
Terms, parsing and printing for the MV-STAR and W-STAR signatures.
"""
from sqmv.syntax.terms import (
    ONE, ZERO, Connective, Impl, Neg, NegPart, One, OPlus, PosPart, Signature,
    Term, UMinus, Var, Zero, check_signature, count_connective, describe,
    is_regular, replace_at, signature_of, subterm_at, variables,
)
from sqmv.syntax.parser import parse, parse_biconditional
from sqmv.syntax.printer import print_term
from sqmv.syntax.abbreviations import Mode, expand_abbreviations, join
from sqmv.syntax.schema import Schema, match_schema, substitute

__all__ = [
    "ONE", "ZERO", "Connective", "Impl", "Neg", "NegPart", "One", "OPlus", "PosPart",
    "Signature", "Term", "UMinus", "Var", "Zero", "check_signature", "count_connective",
    "describe", "is_regular", "replace_at", "signature_of", "subterm_at", "variables",
    "parse", "parse_biconditional", "print_term", "Mode", "expand_abbreviations", "join",
    "Schema", "match_schema", "substitute",
]
