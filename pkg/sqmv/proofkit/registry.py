"""
Lemma registration.
A derived rule enters the registry only after its certifying script is
accepted against the registry built so far, so registration order follows
the dependencies between lemmas.
"""
import logging

from sqmv.proofkit.checker import check_proof, lemma_from_script
from sqmv.proofkit.lemmas import Registry, ReplacementRule
from sqmv.proofkit.script import Item, JustificationKind, ProofScript, ScriptBuilder, System
from sqmv.proofkit.transformers import replacement_proof
from sqmv.syntax.parser import parse
from sqmv.syntax.terms import Signature
from sqmv.utils.errors import CertificationFailed, SqmvError

# Set up logging
logger = logging.getLogger(__name__)

REPLACEMENT_META = "replacement"

# (formula, position) pairs covering negation and both sides of an implication
_REPLACEMENT_SAMPLES = (
    ("~(a -> t)", (0, 0)),
    ("t -> ~a", (1, 0)),
)


def _require_accepted(registry: Registry, script: ProofScript, lemma_id: str) -> None:
    verdict = check_proof(script, registry)
    if not verdict.accepted:
        raise CertificationFailed(
            f"lemma {lemma_id}: {script.name} rejected at line {verdict.failing_line}"
            f" ({verdict.reason}: {verdict.message})"
        )


def register_lemma(registry: Registry, script: ProofScript) -> Registry:
    """
    Certify a script and register the rule it establishes.

    Args:
        registry: Registry the script may cite
        script: Script with a ``lemma`` header

    Returns:
        Registry: The extended registry

    Raises:
        CertificationFailed: If the script is rejected, the id is taken or
            a required lemma is missing
    """
    lemma_id = script.lemma
    if not lemma_id:
        raise CertificationFailed(f"{script.name} carries no lemma id")
    if lemma_id in registry:
        raise CertificationFailed(f"lemma {lemma_id} is already registered")
    if script.meta == REPLACEMENT_META:
        return register_replacement(registry, script)
    _require_accepted(registry, script, lemma_id)
    rule = lemma_from_script(script)
    logger.info(f"registered lemma {lemma_id} ({len(rule.hypotheses)} hypotheses)")
    return registry.with_entry(rule)


def register_replacement(registry: Registry, demonstration: ProofScript) -> Registry:
    """
    Register the replacement meta-rule.
    Its constructive proof uses lemmas 1, 2 and 5; certification checks the
    demonstration script and the proofs replacement_proof builds for a
    negation step and both implication steps.
    """
    rule = ReplacementRule(demonstration.lemma or "6", System.SQL, certificate=demonstration)
    missing = [required for required in rule.requires if required not in registry]
    if missing:
        raise CertificationFailed(f"lemma {rule.lemma_id} requires lemmas {', '.join(missing)}")
    _require_accepted(registry, demonstration, rule.lemma_id)

    builder = ScriptBuilder(System.SQL, (Item.parse("a <-> b"),), name="replacement-sample")
    builder.add(Item.parse("a <-> b"), JustificationKind.HYP, "1")
    equivalence = builder.build()
    for text, path in _REPLACEMENT_SAMPLES:
        try:
            sample = replacement_proof(parse(text, Signature.W), path, equivalence)
        except SqmvError as e:
            raise CertificationFailed(f"lemma {rule.lemma_id}: {e.detail}")
        _require_accepted(registry, sample, rule.lemma_id)
    logger.info(f"registered replacement lemma {rule.lemma_id}")
    return registry.with_entry(rule)
