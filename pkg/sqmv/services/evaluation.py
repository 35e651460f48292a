"""
Term evaluation in models.
"""
from typing import Callable, Mapping

from sqmv.models.base import Model
from sqmv.models.elements import Element, format_element
from sqmv.syntax.terms import Term, Var, check_signature, variables
from sqmv.utils.errors import DomainError, UnboundVariable

Evaluator = Callable[[Mapping[str, Element]], Element]


def compile_term(t: Term, model: Model) -> Evaluator:
    """
    Turn a term into a closure over a valuation. Arguments are not
    validated; use ``evaluate`` for checked evaluation.
    """
    if isinstance(t, Var):
        name = t.name
        return lambda valuation: valuation[name]
    op = t.connective
    compute = model.compute
    if op.arity == 0:
        value = model.constant(op)
        return lambda valuation: value
    if op.arity == 1:
        inner = compile_term(t.children[0], model)
        return lambda valuation: compute(op, (inner(valuation),))
    left = compile_term(t.children[0], model)
    right = compile_term(t.children[1], model)
    return lambda valuation: compute(op, (left(valuation), right(valuation)))


def evaluate(t: Term, model: Model, valuation: Mapping[str, Element]) -> Element:
    """
    Value of t in model under valuation.

    Raises:
        SignatureError: If t is not a term of the model's signature
        UnboundVariable: If a variable of t has no value
        DomainError: If a value is outside the carrier
    """
    check_signature(t, model.signature)
    for name in variables(t):
        if name not in valuation:
            raise UnboundVariable(f"variable '{name}' has no value")
        if not model.contains(valuation[name]):
            raise DomainError(f"{name} = {format_element(valuation[name])} is not an element of {model.name}")
    return compile_term(t, model)(valuation)
