"""
Seeded random term generation for sampling audits and property tests.
"""
import random
from typing import Sequence

from sqmv.syntax.terms import (
    ONE, ZERO, Impl, Neg, NegPart, OPlus, PosPart, Signature, Term, UMinus, Var,
)


def random_term(rng: random.Random, sig: Signature, depth: int,
                names: Sequence[str] = ("x", "y", "z"), parts: bool = True) -> Term:
    """
    Draw a random term of at most the given depth.

    Args:
        rng: Source of randomness
        sig: Signature of the generated term
        depth: Maximum nesting depth
        names: Variable names to draw leaves from
        parts: Whether ^+ and ^- may appear

    Returns:
        Term: A legal term over sig
    """
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.7:
            return Var(rng.choice(list(names)))
        if sig is Signature.MV and roll < 0.85:
            return ZERO
        return ONE
    unary = [PosPart, NegPart] if parts else []
    if sig is Signature.MV:
        choices = [OPlus, OPlus, UMinus] + unary
    else:
        choices = [Impl, Impl, Neg] + unary
    node = rng.choice(choices)
    if node in (OPlus, Impl):
        return node(random_term(rng, sig, depth - 1, names, parts),
                    random_term(rng, sig, depth - 1, names, parts))
    return node(random_term(rng, sig, depth - 1, names, parts))
