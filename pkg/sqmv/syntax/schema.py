"""
Formula schemas: terms whose variables act as metavariables.
Matching is one-sided and deterministic; substitution is simultaneous.
"""
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional

from sqmv.syntax.terms import Signature, Term, Var, check_signature, variables
from sqmv.utils.errors import MissingBinding

Binding = Dict[str, Term]


@dataclass(frozen=True)
class Schema:
    """A pattern term over metavariables"""
    pattern: Term
    signature: Signature = Signature.W
    metavariables: tuple = field(init=False, default=())

    def __post_init__(self):
        object.__setattr__(self, "metavariables", variables(self.pattern))

    @property
    def arity(self) -> int:
        return len(self.metavariables)


def match_into(pattern: Term, ground: Term, binding: Binding) -> Optional[Binding]:
    """
    Extend binding so that pattern instantiates to ground.

    Args:
        pattern: Term whose variables are metavariables
        ground: Term to match
        binding: Bindings fixed so far, left untouched

    Returns:
        Optional[Binding]: The extended binding, or None if no match exists
    """
    result = dict(binding)
    stack = [(pattern, ground)]
    while stack:
        pat, term = stack.pop()
        if isinstance(pat, Var):
            bound = result.get(pat.name)
            if bound is None:
                result[pat.name] = term
            elif bound != term:
                return None
            continue
        if type(pat) is not type(term):
            return None
        stack.extend(zip(pat.children, term.children))
    return result


def match_schema(schema: Schema, ground: Term) -> Optional[Binding]:
    return match_into(schema.pattern, ground, {})


def substitute_term(t: Term, binding: Mapping[str, Term], strict: bool = True) -> Term:
    if isinstance(t, Var):
        if t.name in binding:
            return binding[t.name]
        if strict:
            raise MissingBinding(f"metavariable '{t.name}' is not bound")
        return t
    if not t.children:
        return t
    return t.rebuild(tuple(substitute_term(child, binding, strict) for child in t.children))


def substitute(schema: Schema, binding: Mapping[str, Term]) -> Term:
    """
    Instantiate a schema.

    Raises:
        MissingBinding: If a metavariable of the schema is unbound
        SignatureError: If the instance is not legal in the schema's signature
    """
    return check_signature(substitute_term(schema.pattern, binding), schema.signature)
