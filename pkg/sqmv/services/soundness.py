"""
Sampling checks tying the calculi to the semantics: axiom audits of
models, designation of axiom instances and designation preservation of
deduction rules.
"""
import logging
import random
from typing import Dict, Iterable, Mapping, Optional, Union

from sqmv.models.axioms import axiom_terms, axioms_for
from sqmv.models.base import Model
from sqmv.models.catalog import resolve_model
from sqmv.proofkit.calculus import axioms, core, get_axiom, get_rule, instantiate_axiom, rules
from sqmv.proofkit.script import System
from sqmv.schemas.model import ClassFlags
from sqmv.schemas.report import AxiomAudit, CheckReport, Verdict
from sqmv.services.checking import check_entailment, check_equation
from sqmv.services.strategy import Strategy
from sqmv.syntax.generate import random_term
from sqmv.syntax.schema import substitute_term
from sqmv.syntax.terms import Signature, Term, Var, variables

# Set up logging
logger = logging.getLogger(__name__)

AUDIT_GROUPS = ("quasi", "strong")
INSTANCE_VARIABLES = ("x", "y")


def audit_axioms(model: Union[str, Model], strategy: Optional[Strategy] = None,
                 groups: Iterable[str] = AUDIT_GROUPS) -> AxiomAudit:
    """
    Check the axiom catalog of the model's signature.

    Args:
        model: Model or catalog name
        strategy: Valuation strategy, the model default when None
        groups: Axiom groups to check (classic, quasi, strong, flat)

    Returns:
        AxiomAudit: One report per axiom
    """
    model = resolve_model(model) if isinstance(model, str) else model
    groups = tuple(groups)
    reports = {}
    for axiom in axioms_for(model.signature):
        if axiom.group not in groups:
            continue
        lhs, rhs = axiom_terms(axiom, model.signature)
        reports[axiom.name] = check_equation(lhs, rhs, model, strategy)
    audit = AxiomAudit(model=model.name, strategy=strategy.describe() if strategy else "auto",
                       reports=reports)
    if audit.failed:
        logger.info(f"Audit of {model.name}: failed {', '.join(audit.failed)}")
    return audit


def _all_designated(formulas, model, strategy) -> CheckReport:
    samples = 0
    report = None
    for formula in formulas:
        report = check_entailment((), formula, model, strategy)
        samples += report.samples_tried
        if report.is_countermodel:
            return report
    return report.model_copy(update={"samples_tried": samples})


def check_axiom_designation(system: System, name: str, model: Union[str, Model],
                            strategy: Optional[Strategy] = None,
                            binding: Optional[Mapping[str, Term]] = None) -> CheckReport:
    """
    Check that every formula of an axiom instance is designated.

    Args:
        system: sqL* or L*
        name: Axiom name
        model: Model or catalog name
        strategy: Valuation strategy
        binding: Metavariable instances; unbound metavariables stay variables

    Returns:
        CheckReport: The first countermodel, or the combined verdict
    """
    schema_vars = {}
    for formula in get_axiom(system, name).item.formulas:
        schema_vars.update({var: Var(var) for var in variables(formula)})
    schema_vars.update(binding or {})
    return _all_designated(instantiate_axiom(system, name, schema_vars), model, strategy)


def check_rule_preservation(system: System, rule: str, model: Union[str, Model],
                            strategy: Optional[Strategy] = None,
                            binding: Optional[Mapping[str, Term]] = None) -> CheckReport:
    """
    Check that a rule instance takes designated premises to a designated
    conclusion at every sampled valuation.

    Returns:
        CheckReport: Entailment report; premise_hits counts the valuations
            that designate every premise, zero meaning the check is vacuous
    """
    schema = get_rule(system, rule)
    expanded = {key: core(value) for key, value in (binding or {}).items()}
    premises = tuple(substitute_term(premise, expanded, strict=False) for premise in schema.premises)
    conclusion = substitute_term(schema.conclusion, expanded, strict=False)
    report = check_entailment(premises, conclusion, model, strategy)
    if report.verdict is not Verdict.COUNTERMODEL and not report.premise_hits:
        logger.info(f"Rule {schema.name} is vacuous on {report.model}")
    return report


def audit_calculus(system: System, model: Union[str, Model], strategy: Optional[Strategy] = None,
                   instances: int = 3, seed: int = 0, depth: int = 2) -> Dict[str, CheckReport]:
    """
    Check random instances of every axiom for designation and of every
    rule for designation preservation.

    Args:
        system: sqL* or L*
        model: Model or catalog name
        strategy: Valuation strategy
        instances: Random instances drawn per axiom and per rule
        seed: Seed for the instance terms
        depth: Maximum depth of the instance terms

    Returns:
        Dict[str, CheckReport]: Per axiom and rule name, the first
            countermodel or the last passing report
    """
    model = resolve_model(model) if isinstance(model, str) else model
    rng = random.Random(seed)

    def draw(metavariables) -> Dict[str, Term]:
        return {name: random_term(rng, Signature.W, depth, INSTANCE_VARIABLES) for name in metavariables}

    reports: Dict[str, CheckReport] = {}
    for name, schema in axioms(system).items():
        metavariables = sorted({var for formula in schema.item.formulas for var in variables(formula)})
        for _ in range(instances):
            reports[name] = check_axiom_designation(system, name, model, strategy, draw(metavariables))
            if reports[name].is_countermodel:
                break
    for name, schema in rules(system).items():
        metavariables = sorted({var for t in (*schema.premises, schema.conclusion) for var in variables(t)})
        for _ in range(instances):
            reports[name] = check_rule_preservation(system, name, model, strategy, draw(metavariables))
            if reports[name].is_countermodel:
                break
    failed = [name for name, report in reports.items() if report.is_countermodel]
    if failed:
        logger.info(f"{System(system).value} on {model.name}: failed {', '.join(failed)}")
    return reports


def sampled_flags(model: Union[str, Model], strategy: Optional[Strategy] = None) -> ClassFlags:
    """
    Class flags of an infinite model read off a sampling audit of every
    axiom group; the flags are marked non-exhaustive.
    """
    model = resolve_model(model) if isinstance(model, str) else model
    audit = audit_axioms(model, strategy, groups=("classic", "quasi", "strong", "flat"))
    groups = {axiom.name: axiom.group for axiom in axioms_for(model.signature)}
    passed = {"classic": True, "quasi": True, "strong": True, "flat": True}
    failures = {}
    for name in audit.failed:
        passed[groups[name]] = False
        failures[name] = audit.reports[name].witness or {}
    return ClassFlags(
        signature=model.signature.value,
        is_quasi=passed["quasi"],
        is_strong=passed["quasi"] and passed["strong"],
        is_flat=passed["quasi"] and passed["strong"] and passed["flat"],
        is_classic=passed["classic"],
        exhaustive=False,
        failures=failures,
    )
