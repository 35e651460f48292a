"""
Canonical ASCII rendering of terms with minimal parentheses.
``parse(print_term(t), sig) == t`` for every legal term.
"""
from sqmv.syntax.terms import Binary, Impl, One, OPlus, Term, Unary, Var, Zero, NegPart, PosPart

# Binding strength; higher binds tighter
IMPL_PREC = 1
JOIN_PREC = 2
OPLUS_PREC = 3
PREFIX_PREC = 4
POSTFIX_PREC = 5
ATOM_PREC = 6


def precedence(t: Term) -> int:
    if isinstance(t, Impl):
        return IMPL_PREC
    if isinstance(t, OPlus):
        return OPLUS_PREC
    if isinstance(t, (PosPart, NegPart)):
        return POSTFIX_PREC
    if isinstance(t, Unary):
        return PREFIX_PREC
    return ATOM_PREC


def _wrap(t: Term, minimum: int) -> str:
    text = print_term(t)
    return f"({text})" if precedence(t) < minimum else text


def print_term(t: Term) -> str:
    """
    Render a term in the surface syntax.

    Args:
        t: Term to render

    Returns:
        str: Text that parses back to the same tree
    """
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, (PosPart, NegPart)):
        return _wrap(t.arg, POSTFIX_PREC) + t.connective.symbol
    if isinstance(t, Unary):
        return t.connective.symbol + _wrap(t.arg, PREFIX_PREC)
    if isinstance(t, OPlus):
        # left associative
        return f"{_wrap(t.left, OPLUS_PREC)} (+) {_wrap(t.right, OPLUS_PREC + 1)}"
    if isinstance(t, Binary):
        # right associative
        return f"{_wrap(t.left, IMPL_PREC + 1)} -> {_wrap(t.right, IMPL_PREC)}"
    raise TypeError(f"not a term: {t!r}")
