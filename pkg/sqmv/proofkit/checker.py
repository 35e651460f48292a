"""
Proof checking for sqL* and L* scripts.

Each formula of a line is justified on its own: a biconditional line
needs both of its implications to follow from the justification, and a
cited biconditional offers either of its implications as a premise.
Substitutions are inferred by one-sided matching, conclusion first.
"""
import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from sqmv.proofkit.calculus import core, core_item, get_axiom, get_rule
from sqmv.proofkit.lemmas import EMPTY_REGISTRY, DerivedRule, Registry, ReplacementRule
from sqmv.proofkit.script import Item, JustificationKind, ProofLine, ProofScript
from sqmv.schemas.proof import LineReport, ProofVerdict
from sqmv.syntax.schema import Binding, match_into
from sqmv.syntax.terms import Term
from sqmv.utils.errors import SqmvError, UnknownAxiom

# Set up logging
logger = logging.getLogger(__name__)

Premise = Tuple[int, Term]


@dataclass(frozen=True)
class Derivation:
    """How one formula of a line was obtained"""
    formula: Term
    premises: Tuple[Premise, ...] = ()
    direction: Optional[str] = None


@dataclass
class CheckOutcome:
    verdict: ProofVerdict
    traces: Dict[int, Tuple[Derivation, ...]] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.verdict.accepted


class LineRejected(Exception):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason
        self.message = message


def _fill(patterns: Sequence[Term], cited: Sequence[Tuple[int, Item]], binding: Binding,
          position: int = 0) -> Optional[List[Premise]]:
    if position == len(patterns):
        return []
    index, item = cited[position]
    for formula in item.formulas:
        extended = match_into(patterns[position], formula, binding)
        if extended is None:
            continue
        rest = _fill(patterns, cited, extended, position + 1)
        if rest is not None:
            return [(index, formula)] + rest
    return None


def derive(formula: Term, premises: Sequence[Term], conclusions: Sequence[Term],
           cited: Sequence[Tuple[int, Item]]) -> Optional[Derivation]:
    """
    Find an instance of a rule whose conclusion is formula.

    Args:
        formula: Core-form formula to justify
        premises: Premise patterns of the rule
        conclusions: Alternative conclusion patterns
        cited: Cited lines as (line number, core item), in any order

    Returns:
        Optional[Derivation]: The matched premises, or None
    """
    for conclusion in conclusions:
        binding = match_into(conclusion, formula, {})
        if binding is None:
            continue
        for order in permutations(range(len(cited))):
            found = _fill(premises, [cited[k] for k in order], binding)
            if found is not None:
                return Derivation(formula, tuple(found))
    return None


def rewrites(source: Term, target: Term, old: Term, new: Term) -> bool:
    """True if target is source with one or more occurrences of old replaced by new"""
    if source == old and target == new:
        return True
    if type(source) is not type(target) or not source.children or source == target:
        return False
    return all(
        child == other or rewrites(child, other, old, new)
        for child, other in zip(source.children, target.children)
    )


def _check_replacement(item: Item, cited: Sequence[Tuple[int, Item]]) -> Tuple[Derivation, ...]:
    if not item.is_biconditional:
        raise LineRejected("ReplacementMismatch", "replacement yields a biconditional")
    if any(not other.is_biconditional for _, other in cited):
        raise LineRejected("ReplacementMismatch", "replacement cites biconditionals only")
    left, right = item.left, item.right
    premises = tuple((index, formula) for index, other in cited for formula in other.formulas)
    accepted = False
    if len(cited) == 1:
        old, new = cited[0][1].left, cited[0][1].right
        accepted = rewrites(left, right, old, new) or rewrites(right, left, old, new)
    else:
        for (_, base), (_, equivalence) in ((cited[0], cited[1]), (cited[1], cited[0])):
            old, new = equivalence.left, equivalence.right
            left_ok = left == base.left or rewrites(base.left, left, old, new)
            right_ok = right == base.right or rewrites(base.right, right, old, new)
            if left_ok and right_ok and (left, right) != (base.left, base.right):
                accepted = True
                break
    if not accepted:
        raise LineRejected("ReplacementMismatch", "line is not a replacement instance of the cited lines")
    return tuple(Derivation(formula, premises) for formula in item.formulas)


class _Checker:
    def __init__(self, script: ProofScript, registry: Registry):
        self.script = script
        self.registry = registry
        self.hypotheses = [core_item(hypothesis) for hypothesis in script.hypotheses]
        self.items: List[Item] = []

    def cited(self, line: ProofLine) -> List[Tuple[int, Item]]:
        cited = []
        for index in line.justification.premises:
            if index >= line.number:
                raise LineRejected("ForwardReference",
                                   f"line {line.number} cites line {index}, which is not earlier")
            if index < 1:
                raise LineRejected("BadPremiseIndex", f"line {index} does not exist")
            cited.append((index, self.items[index - 1]))
        return cited

    def arity(self, line: ProofLine, expected: int, name: str) -> None:
        if len(line.justification.premises) != expected:
            raise LineRejected(
                "ArityMismatch",
                f"{name} takes {expected} premise(s), line cites {len(line.justification.premises)}",
            )

    def check_line(self, line: ProofLine, item: Item) -> Tuple[Tuple[Derivation, ...], str]:
        justification = line.justification
        kind = justification.kind
        cited = self.cited(line)

        if kind is JustificationKind.AX:
            try:
                axiom = get_axiom(self.script.system, justification.name)
            except UnknownAxiom as e:
                raise LineRejected("UnknownAxiom", e.detail)
            self.arity(line, 0, axiom.name)
            derivations, directions = [], []
            for formula in item.formulas:
                for direction, pattern in axiom.directed:
                    if match_into(pattern, formula, {}) is not None:
                        derivations.append(Derivation(formula, (), direction))
                        directions.append(direction)
                        break
                else:
                    raise LineRejected("NoMatchingAxiomInstance",
                                       f"line is not an instance of {axiom.name}")
            return tuple(derivations), f"{axiom.name} {'/'.join(directions)}"

        if kind is JustificationKind.HYP:
            try:
                position = int(justification.name)
            except ValueError:
                raise LineRejected("BadHypothesisIndex", f"'{justification.name}' is not a hypothesis index")
            if not 1 <= position <= len(self.hypotheses):
                raise LineRejected("BadHypothesisIndex", f"there is no hypothesis {position}")
            available = self.hypotheses[position - 1].formulas
            if any(formula not in available for formula in item.formulas):
                raise LineRejected("HypothesisMismatch", f"line does not restate hypothesis {position}")
            return tuple(Derivation(formula) for formula in item.formulas), f"hypothesis {position}"

        if kind is JustificationKind.RULE:
            try:
                rule = get_rule(self.script.system, justification.name)
            except UnknownAxiom as e:
                raise LineRejected("UnknownRule", e.detail)
            self.arity(line, rule.arity, rule.name)
            derivations = []
            for formula in item.formulas:
                found = derive(formula, rule.premises, (rule.conclusion,), cited)
                if found is None:
                    raise LineRejected("RuleMismatch", f"line does not follow by {rule.name}")
                derivations.append(found)
            return tuple(derivations), rule.name

        lemma = self.registry.get(justification.name)
        if lemma is None or lemma.system is not self.script.system:
            raise LineRejected("UnknownLemma", f"lemma {justification.name} is not registered")
        if isinstance(lemma, ReplacementRule):
            if len(cited) not in (1, 2):
                raise LineRejected("ArityMismatch", "replacement cites one or two lines")
            return _check_replacement(item, cited), f"lemma {lemma.lemma_id}"
        self.arity(line, lemma.arity, f"lemma {lemma.lemma_id}")
        derivations = []
        for formula in item.formulas:
            found = derive(formula, lemma.hypotheses, lemma.conclusion.formulas, cited)
            if found is None:
                raise LineRejected("LemmaMismatch", f"line does not follow by lemma {lemma.lemma_id}")
            derivations.append(found)
        return tuple(derivations), f"lemma {lemma.lemma_id}"

    def run(self) -> CheckOutcome:
        reports: List[LineReport] = []
        traces: Dict[int, Tuple[Derivation, ...]] = {}
        failure: Optional[Tuple[int, LineRejected]] = None
        for line in self.script.lines:
            if failure is not None:
                reports.append(LineReport(number=line.number, status="unchecked"))
                continue
            try:
                item = core_item(line.item)
                traces[line.number], detail = self.check_line(line, item)
                self.items.append(item)
                reports.append(LineReport(number=line.number, status="ok", detail=detail))
            except LineRejected as e:
                failure = (line.number, e)
                reports.append(LineReport(number=line.number, status="rejected", detail=e.message))
            except SqmvError as e:
                failure = (line.number, LineRejected(type(e).__name__, e.detail))
                reports.append(LineReport(number=line.number, status="rejected", detail=e.detail))

        if failure is None and not self.script.lines:
            failure = (0, LineRejected("EmptyProof", "script has no lines"))
        system = self.script.system.value
        if failure is None:
            verdict = ProofVerdict(verdict="ACCEPT", system=system, lines=reports)
        else:
            number, rejection = failure
            logger.warning(f"{self.script.name}: line {number} rejected: {rejection.reason}")
            verdict = ProofVerdict(verdict="REJECT", system=system, failing_line=number,
                                   reason=rejection.reason, message=rejection.message, lines=reports)
        return CheckOutcome(verdict, traces)


def run_checker(script: ProofScript, registry: Optional[Registry] = None) -> CheckOutcome:
    """Check a script and keep the per-formula derivations"""
    return _Checker(script, registry or EMPTY_REGISTRY).run()


def check_proof(script: ProofScript, registry: Optional[Registry] = None) -> ProofVerdict:
    """
    Check every line of a script against its justification.

    Args:
        script: The proof script
        registry: Derived rules available to LEM lines

    Returns:
        ProofVerdict: ACCEPT, or REJECT with the first failing line and reason
    """
    return run_checker(script, registry).verdict


def lemma_from_script(script: ProofScript) -> DerivedRule:
    """The derived rule a script establishes: its hypotheses entail its last line"""
    hypotheses = tuple(formula for item in script.hypotheses for formula in core_item(item).formulas)
    return DerivedRule(script.lemma or script.name, script.system, hypotheses,
                       core_item(script.conclusion), certificate=script)

