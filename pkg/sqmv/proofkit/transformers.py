"""
Constructive proof transformations.

``replacement_proof`` turns a proof of p1 <-> r1 into a proof of p <-> r,
where r replaces the occurrence of p1 at a position of p.
``lift_lstar_proof`` turns an L* derivation of q into an sqL* derivation
of (p -> p) -> q from the same hypotheses.
``deregularize_proof`` removes the (p -> p) prefix when q is regular.
"""
import logging
from typing import Optional

from sqmv.proofkit.calculus import core, core_item
from sqmv.proofkit.checker import run_checker
from sqmv.proofkit.lemmas import Registry
from sqmv.proofkit.script import Item, JustificationKind, ProofScript, ScriptBuilder, System
from sqmv.syntax.terms import (
    Impl, Neg, One, Path, Term, Var, is_regular, neg_power,
    strip_negations, subterm_at,
)
from sqmv.utils.errors import NotRegular, PathMismatch, SourceProofInvalid

# Set up logging
logger = logging.getLogger(__name__)

AX, HYP, RULE, LEM = (JustificationKind.AX, JustificationKind.HYP,
                      JustificationKind.RULE, JustificationKind.LEM)


def replacement_proof(p: Term, path: Path, equiv: ProofScript) -> ProofScript:
    """
    Build a proof of p <-> r from a proof of p1 <-> r1.

    Args:
        p: Formula containing p1 at path
        path: Position of p1 in the core form of p
        equiv: sqL* script whose last line is p1 <-> r1

    Returns:
        ProofScript: equiv extended to conclude p <-> r, using lemmas 1, 2 and 5

    Raises:
        PathMismatch: If the subterm at path is not p1
        SourceProofInvalid: If equiv does not end in a biconditional
    """
    conclusion = core_item(equiv.conclusion)
    if not conclusion.is_biconditional:
        raise SourceProofInvalid(f"{equiv.name} does not conclude a biconditional")
    p = core(p)
    old, new = conclusion.left, conclusion.right
    if subterm_at(p, path) != old:
        raise PathMismatch(f"subterm of {p} at {path} is not {old}")
    if not path:
        return equiv

    builder = ScriptBuilder(System.SQL, equiv.hypotheses, name=f"replacement({equiv.name})")
    current = builder.extend(equiv)
    u, v = old, new
    for depth in reversed(range(len(path))):
        parent = subterm_at(p, path[:depth])
        step = path[depth]
        if isinstance(parent, Neg):
            u, v = Neg(u), Neg(v)
            current = builder.add(Item(u, v), LEM, "1", current)
        elif isinstance(parent, Impl):
            other = parent.right if step == 0 else parent.left
            reflexive = builder.add(Item(other, other), LEM, "5")
            if step == 0:
                u, v = Impl(u, other), Impl(v, other)
                current = builder.add(Item(u, v), LEM, "2", current, reflexive)
            else:
                u, v = Impl(other, u), Impl(other, v)
                current = builder.add(Item(u, v), LEM, "2", reflexive, current)
        else:
            raise PathMismatch(f"cannot replace under {type(parent).__name__}")
    return builder.build()


def lift_lstar_proof(script: ProofScript, prefix: str = "p") -> ProofScript:
    """
    Lift an L* derivation into sqL* under the (prefix -> prefix) guard.

    Args:
        script: L* script deriving q from its hypotheses
        prefix: Variable name r of the guard (r -> r)

    Returns:
        ProofScript: sqL* script from the same hypotheses whose last line
        is (r -> r) -> q

    Raises:
        SourceProofInvalid: If the script is not an accepted L* proof
    """
    if script.system is not System.LSTAR:
        raise SourceProofInvalid(f"{script.name} is not an L* script")
    outcome = run_checker(script)
    if not outcome.accepted:
        raise SourceProofInvalid(
            f"{script.name} is rejected at line {outcome.verdict.failing_line}: {outcome.verdict.reason}"
        )

    guard = Impl(Var(prefix), Var(prefix))
    builder = ScriptBuilder(System.SQL, script.hypotheses, name=f"lift({script.name})")
    lifted = {}

    def guarded(formula: Term, kind, name, *premises) -> None:
        lifted[formula] = builder.formula(Impl(guard, formula), kind, name, *premises)

    for line in script.lines:
        justification = line.justification
        # the first implication of a biconditional is lifted last
        derivations = tuple(reversed(outcome.traces[line.number]))
        if justification.kind in (AX, HYP):
            if justification.kind is AX:
                source = builder.add(line.item, AX, _SQL_NAME[justification.name])
            else:
                source = builder.add(line.item, HYP, justification.name)
            for derivation in derivations:
                guarded(derivation.formula, RULE, "Reg", source)
            continue
        for derivation in derivations:
            formula = derivation.formula
            premises = [premise for _, premise in derivation.premises]
            if justification.name == "R1":
                minor, major = premises
                guarded(formula, RULE, "qMP", lifted[minor], lifted[major])
            elif justification.name == "R2":
                first, second = premises
                first_line = builder.formula(first, RULE, "AReg1", lifted[first])
                second_line = builder.formula(second, RULE, "AReg1", lifted[second])
                plain = builder.formula(formula, RULE, "R2'", first_line, second_line)
                guarded(formula, RULE, "Reg", plain)
            else:
                plain = builder.formula(formula, RULE, "R3'", lifted[premises[0]])
                guarded(formula, RULE, "Reg", plain)
    result = builder.build()
    logger.info(f"lifted {script.name}: {len(script.lines)} -> {len(result.lines)} lines")
    return result


_SQL_NAME = {
    "P1": "Q1", "P2": "Q3", "P3": "Q5", "P4": "Q10", "P5": "Q2",
    "P6": "Q9", "P7": "Q4", "P8": "Q6", "P9": "Q7", "P10": "Q8",
}


def _guard_of(formula: Term) -> Optional[Term]:
    if isinstance(formula, Impl) and isinstance(formula.left, Impl) \
            and formula.left.left == formula.left.right:
        return formula.left
    return None


def double_negation_chain(body: Term, k: int, hypotheses=()) -> ProofScript:
    """Proof of ~^k body <-> ~^j body, j = k mod 2, from lemmas 8 and 3"""
    builder = ScriptBuilder(System.SQL, hypotheses, name="double-negation")
    current = builder.add(Item(neg_power(body, k), neg_power(body, k - 2)), LEM, "8")
    for remaining in range(k - 4, -1, -2):
        step = builder.add(Item(neg_power(body, remaining + 2), neg_power(body, remaining)), LEM, "8")
        current = builder.add(Item(neg_power(body, k), neg_power(body, remaining)), LEM, "3", current, step)
    return builder.build()


def deregularize_proof(script: ProofScript, registry: Registry) -> ProofScript:
    """
    Remove the (r -> r) guard from a proof of (r -> r) -> q with q regular.

    Args:
        script: sqL* script concluding (r -> r) -> q
        registry: Registry holding lemmas 1, 2, 3, 5, 6 and 8

    Returns:
        ProofScript: The script extended to conclude q

    Raises:
        SourceProofInvalid: If the script is rejected or lacks the guard
        NotRegular: If q is a variable under negations
    """
    outcome = run_checker(script, registry)
    if not outcome.accepted:
        raise SourceProofInvalid(
            f"{script.name} is rejected at line {outcome.verdict.failing_line}: {outcome.verdict.reason}"
        )
    conclusion = core_item(script.conclusion)
    guard = None if conclusion.is_biconditional else _guard_of(conclusion.left)
    if guard is None:
        raise SourceProofInvalid(f"{script.name} does not conclude (r -> r) -> q")
    q = conclusion.left.right
    if not is_regular(q):
        raise NotRegular(f"{q} is a variable under negations")
    k, body = strip_negations(q)
    parity = k % 2

    builder = ScriptBuilder(System.SQL, script.hypotheses, name=f"deregularize({script.name})")
    current = builder.extend(script)
    if k >= 2:
        chain = double_negation_chain(body, k, script.hypotheses)
        guarded_chain = replacement_proof(Impl(guard, q), (1,), chain)
        equivalence = builder.extend(guarded_chain)
        target = Impl(guard, neg_power(body, parity))
        twice = builder.formula(Impl(guard, Impl(guard, q)), RULE, "Reg", current)
        bridge = builder.formula(Impl(guard, Impl(Impl(guard, q), target)), RULE, "Reg", equivalence)
        guarded = builder.formula(Impl(guard, target), RULE, "qMP", twice, bridge)
        current = builder.formula(target, RULE, "AReg1", guarded)

    if isinstance(body, One):
        current = builder.formula(neg_power(body, parity), RULE, "AReg3" if parity else "AReg4", current)
    else:
        current = builder.formula(neg_power(body, parity), RULE, "AReg2" if parity else "AReg1", current)
    for power in range(parity + 2, k + 1, 2):
        current = builder.formula(neg_power(body, power), RULE, "Inv1", current)
    return builder.build()
