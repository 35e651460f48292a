"""
Derived connectives.
The join is surface sugar expanded when parsing. In strong algebras the
parts ^+ and ^- are themselves definable, and STRONG mode rewrites them
into the base connectives.
"""
from enum import Enum

from sqmv.syntax.terms import (
    ONE, Impl, Neg, NegPart, OPlus, PosPart, Signature, Term, UMinus, Var,
)
from sqmv.utils.errors import ModeError


class Mode(str, Enum):
    STRONG = "strong"
    PRIMITIVE = "primitive"


def join(x: Term, y: Term, sig: Signature) -> Term:
    """x ∨ y with ^+ and ^- kept as primitive nodes"""
    if sig is Signature.MV:
        # (x^+ ⊕ (−x^+ ⊕ y^+)^+) ⊕ (x^- ⊕ (−x^- ⊕ y^-)^+)
        positive = OPlus(PosPart(x), PosPart(OPlus(UMinus(PosPart(x)), PosPart(y))))
        negative = OPlus(NegPart(x), PosPart(OPlus(UMinus(NegPart(x)), NegPart(y))))
        return OPlus(positive, negative)
    # ((x^+ → y^+)^+ → (¬x)^-) → ((y^- → x^-)^- → x^-)
    left = Impl(PosPart(Impl(PosPart(x), PosPart(y))), NegPart(Neg(x)))
    right = Impl(NegPart(Impl(NegPart(y), NegPart(x))), NegPart(x))
    return Impl(left, right)


def strong_positive(x: Term, sig: Signature) -> Term:
    if sig is Signature.MV:
        return OPlus(ONE, OPlus(UMinus(ONE), x))
    return Impl(Impl(x, ONE), ONE)


def strong_negative(x: Term, sig: Signature) -> Term:
    if sig is Signature.MV:
        return OPlus(UMinus(ONE), OPlus(ONE, x))
    return Impl(Impl(x, Neg(ONE)), Neg(ONE))


def expand_abbreviations(t: Term, sig: Signature, mode: Mode = Mode.STRONG,
                         target_is_strong: bool = True) -> Term:
    """
    Rewrite derived connectives.

    Args:
        t: Term over sig
        sig: Signature of t
        mode: STRONG rewrites ^+ and ^- into base connectives, PRIMITIVE
            keeps them as nodes
        target_is_strong: Whether the structure t is interpreted in is strong

    Returns:
        Term: Rewritten term

    Raises:
        ModeError: If STRONG is requested for a structure that is not strong
    """
    mode = Mode(mode)
    if mode is Mode.PRIMITIVE:
        return t
    if not target_is_strong:
        raise ModeError("^+ and ^- are only definable in strong structures")
    return _expand(t, sig)


def _expand(t: Term, sig: Signature) -> Term:
    if isinstance(t, Var) or not t.children:
        return t
    children = tuple(_expand(child, sig) for child in t.children)
    if isinstance(t, PosPart):
        return strong_positive(children[0], sig)
    if isinstance(t, NegPart):
        return strong_negative(children[0], sig)
    return t.rebuild(children)
