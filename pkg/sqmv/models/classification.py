"""
Exhaustive classification of finite models against the axiom catalogs.
"""
import logging
from typing import Dict, Optional

from sqmv.config import get_settings
from sqmv.models.axioms import axiom_terms, axioms_for
from sqmv.models.base import Model
from sqmv.models.elements import format_element
from sqmv.models.finite import FiniteModel, first_mismatch, tabulate
from sqmv.schemas.model import ClassFlags, RegularPart
from sqmv.syntax.terms import Connective, Signature
from sqmv.utils.errors import ClassError

# Set up logging
logger = logging.getLogger(__name__)


def as_finite(model: Model) -> FiniteModel:
    if isinstance(model, FiniteModel):
        return model
    if not model.is_finite:
        raise ClassError(f"{model.name} is infinite; exhaustive classification needs a finite model")
    return tabulate(model)


def classify(model: Model) -> ClassFlags:
    """
    Decide class membership by checking every axiom on every valuation.

    Args:
        model: A finite model

    Returns:
        ClassFlags: Flags plus the first failing valuation of each failed axiom

    Raises:
        ClassError: If the model is infinite
    """
    finite = as_finite(model)
    cached = getattr(finite, "_flags", None)
    if cached is not None:
        return cached

    chunk = get_settings().table_chunk
    failures: Dict[str, Dict[str, str]] = {}
    passed = {"classic": True, "quasi": True, "strong": True, "flat": True}
    for axiom in axioms_for(finite.signature):
        lhs, rhs = axiom_terms(axiom, finite.signature)
        _, witness = first_mismatch(finite, lhs, rhs, chunk)
        if witness is not None:
            passed[axiom.group] = False
            failures[axiom.name] = {name: format_element(value) for name, value in witness.items()}

    flags = ClassFlags(
        signature=finite.signature.value,
        is_quasi=passed["quasi"],
        is_strong=passed["quasi"] and passed["strong"],
        is_flat=passed["quasi"] and passed["strong"] and passed["flat"],
        is_classic=passed["classic"],
        exhaustive=True,
        failures=failures,
    )
    finite._flags = flags
    logger.info(f"Classified {finite.name}: quasi={flags.is_quasi} strong={flags.is_strong} "
                f"flat={flags.is_flat} classic={flags.is_classic}")
    return flags


def flags_of(model: Model) -> Optional[ClassFlags]:
    """Computed flags for finite models, declared flags otherwise"""
    if model.is_finite:
        return classify(model)
    return model.declared


def regular_elements(model: Model) -> RegularPart:
    """
    R(A) = {x : x ⊕ 0 = x}, or {x : (1 → 1) → x = x} in W-STAR, with a
    check that it is closed and forms an MV*- or Wajsberg* algebra.
    """
    finite = as_finite(model)
    if finite.signature is Signature.MV:
        zero = finite.constant(Connective.ZERO)
        regular = [x for x in finite.elements if finite.compute(Connective.OPLUS, (x, zero)) == x]
    else:
        one = finite.constant(Connective.ONE)
        unit = finite.compute(Connective.IMPL, (one, one))
        regular = [x for x in finite.elements if finite.compute(Connective.IMPL, (unit, x)) == x]
    sub = tabulate(finite, f"R({finite.name})", regular)
    is_classic = classify(sub).is_classic
    if not is_classic:
        logger.warning(f"R({finite.name}) is not a classic algebra")
    return RegularPart(model=finite.name, elements=[format_element(x) for x in regular],
                       is_classic=is_classic)
