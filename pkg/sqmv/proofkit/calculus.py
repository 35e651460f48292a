"""
Axiom and rule schemas of sqL* and L*.
Schemas are written in surface syntax and stored with ^+, ^- and the join
expanded, so matching always happens on core W-STAR terms.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from sqmv.proofkit.script import Item, System
from sqmv.syntax.abbreviations import Mode, expand_abbreviations
from sqmv.syntax.parser import parse
from sqmv.syntax.schema import substitute_term
from sqmv.syntax.terms import Signature, Term, check_signature
from sqmv.utils.errors import UnknownAxiom

# Set up logging
logger = logging.getLogger(__name__)

SQL_AXIOMS: Dict[str, str] = {
    "Q1": "(p -> q) <-> (~q -> ~p)",
    "Q2": "1 <-> ((1 -> p) -> 1)",
    "Q3": "p <-> ((q -> q) -> p)",
    "Q4": "(p -> q) <-> ((q^+ -> p^-) -> (p^+ -> q^-))",
    "Q5": "~(p -> q) <-> (q -> p)",
    "Q6": "(p -> (~p -> q))^+ <-> (p^+ -> (~p^+ -> q^+))",
    "Q7": "(p -> (q \\/ r)) <-> ((p -> r) \\/ (p -> q))",
    "Q8": "(p \\/ (q \\/ r)) <-> ((p \\/ q) \\/ r)",
    "Q9": "((p -> 1) -> ((q -> 1) -> r)) -> ((q -> 1) -> ((p -> 1) -> r))",
    "Q10": "p -> 1",
}

# L* axioms coincide with sqL* axioms up to numbering
LSTAR_AXIOMS: Dict[str, str] = {
    "P1": "Q1", "P2": "Q3", "P3": "Q5", "P4": "Q10", "P5": "Q2",
    "P6": "Q9", "P7": "Q4", "P8": "Q6", "P9": "Q7", "P10": "Q8",
}

SQL_RULES: Dict[str, Tuple[Tuple[str, ...], str]] = {
    "qMP": (("(r -> r) -> p", "(r -> r) -> (p -> q)"), "(r -> r) -> q"),
    "Reg": (("p",), "(r -> r) -> p"),
    "AReg1": (("(r -> r) -> (p -> q)",), "p -> q"),
    "AReg2": (("(r -> r) -> ~(p -> q)",), "~(p -> q)"),
    "AReg3": (("(r -> r) -> ~1",), "~1"),
    "AReg4": (("(r -> r) -> 1",), "1"),
    "Inv1": (("p",), "~~p"),
    "Inv2": (("~~p",), "p"),
    "Flat": (("p", "~1"), "~p"),
    "R2'": (("p -> q", "r -> t"), "(q -> r) -> (p -> t)"),
    "R3'": (("(r -> r) -> p",), "p^-"),
}

LSTAR_RULES: Dict[str, Tuple[Tuple[str, ...], str]] = {
    "R1": (("p", "p -> q"), "q"),
    "R2": (("p -> q", "r -> t"), "(q -> r) -> (p -> t)"),
    "R3": (("p",), "p^-"),
}


def core(t: Term) -> Term:
    """Expand ^+ and ^- into core W-STAR connectives"""
    return expand_abbreviations(check_signature(t, Signature.W), Signature.W, Mode.STRONG)


def core_item(item: Item) -> Item:
    return item.map(core)


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    item: Item

    @property
    def directed(self) -> Tuple[Tuple[str, Term], ...]:
        """The schema's formulas labelled LR / RL, or NA for a single formula"""
        if not self.item.is_biconditional:
            return (("NA", self.item.left),)
        lr, rl = self.item.formulas
        return (("LR", lr), ("RL", rl))


@dataclass(frozen=True)
class RuleSchema:
    name: str
    premises: Tuple[Term, ...]
    conclusion: Term

    @property
    def arity(self) -> int:
        return len(self.premises)


def normalize_name(name: str) -> str:
    return name.strip().replace("′", "'")


@lru_cache(maxsize=None)
def axioms(system: System) -> Dict[str, AxiomSchema]:
    system = System(system)
    if system is System.SQL:
        texts = SQL_AXIOMS
    else:
        texts = {name: SQL_AXIOMS[source] for name, source in LSTAR_AXIOMS.items()}
    return {name: AxiomSchema(name, core_item(Item.parse(text))) for name, text in texts.items()}


@lru_cache(maxsize=None)
def rules(system: System) -> Dict[str, RuleSchema]:
    system = System(system)
    texts = SQL_RULES if system is System.SQL else LSTAR_RULES
    return {
        name: RuleSchema(
            name,
            tuple(core(parse(text, Signature.W)) for text in premises),
            core(parse(conclusion, Signature.W)),
        )
        for name, (premises, conclusion) in texts.items()
    }


def get_axiom(system: System, name: str) -> AxiomSchema:
    try:
        return axioms(system)[normalize_name(name)]
    except KeyError:
        raise UnknownAxiom(f"'{name}' is not an axiom of {System(system).value}")


def get_rule(system: System, name: str) -> RuleSchema:
    try:
        return rules(system)[normalize_name(name)]
    except KeyError:
        raise UnknownAxiom(f"'{name}' is not a rule of {System(system).value}")


def instantiate_axiom(system: System, name: str, binding: Mapping[str, Term]) -> Tuple[Term, ...]:
    """
    Instantiate an axiom schema.

    Args:
        system: sqL* or L*
        name: Axiom name, Q1..Q10 or P1..P10
        binding: Terms for the schema's metavariables

    Returns:
        Tuple[Term, ...]: The instance's formulas in core form; a
        biconditional axiom yields its two implications

    Raises:
        UnknownAxiom: If the name is not an axiom of the system
        MissingBinding: If a metavariable is unbound
    """
    schema = get_axiom(system, name)
    expanded = {key: core(value) for key, value in binding.items()}
    return tuple(substitute_term(formula, expanded) for formula in schema.item.formulas)
