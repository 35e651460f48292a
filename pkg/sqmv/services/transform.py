"""
The term equivalence between strong quasi-MV* and strong quasi-Wajsberg*
algebras.

    f: x → y = −x ⊕ y,  ¬x = −x
    g: x ⊕ y = ¬x → y,  −x = ¬x,  0 = 1 → 1

Both translations keep ^+, ^- and 1 and are identities on variables.
"""
import logging
from typing import Optional, Tuple

from sqmv.models.base import Model
from sqmv.models.catalog import wajsberg_view
from sqmv.models.classification import flags_of
from sqmv.models.constructions import MVView
from sqmv.models.finite import tabulate
from sqmv.syntax.parser import parse
from sqmv.syntax.terms import (
    ONE, Impl, Neg, NegPart, One, OPlus, PosPart, Signature, Term, UMinus, Var, Zero, signature_of,
)
from sqmv.utils.errors import ClassError, SignatureError, SqmvError

# Set up logging
logger = logging.getLogger(__name__)


def mv_to_w_term(t: Term) -> Term:
    """⊕ becomes ¬x → y, − becomes ¬, 0 becomes 1 → 1"""
    if isinstance(t, (Var, One)):
        return t
    if isinstance(t, Zero):
        return Impl(ONE, ONE)
    if isinstance(t, OPlus):
        return Impl(Neg(mv_to_w_term(t.left)), mv_to_w_term(t.right))
    if isinstance(t, UMinus):
        return Neg(mv_to_w_term(t.arg))
    if isinstance(t, (PosPart, NegPart)):
        return type(t)(mv_to_w_term(t.arg))
    raise SignatureError(f"'{t.connective.symbol}' is not an MV-STAR connective")


def w_to_mv_term(t: Term) -> Term:
    """→ becomes −x ⊕ y, ¬ becomes −"""
    if isinstance(t, (Var, One)):
        return t
    if isinstance(t, Impl):
        return OPlus(UMinus(w_to_mv_term(t.left)), w_to_mv_term(t.right))
    if isinstance(t, Neg):
        return UMinus(w_to_mv_term(t.arg))
    if isinstance(t, (PosPart, NegPart)):
        return type(t)(w_to_mv_term(t.arg))
    raise SignatureError(f"'{t.connective.symbol}' is not a W-STAR connective")


def translate(t: Term, target: Signature) -> Term:
    return mv_to_w_term(t) if Signature.parse(target) is Signature.W else w_to_mv_term(t)


def _require_strong(model: Model, sig: Signature) -> None:
    if model.signature is not sig:
        raise SignatureError(f"{model.name} is not a {sig.value} model")
    flags = flags_of(model)
    if flags is None or not flags.is_strong:
        raise ClassError(f"{model.name} is not known to be a strong quasi algebra")


def mv_to_w_model(model: Model) -> Model:
    """
    f(Q) for a strong quasi-MV* algebra Q.

    Raises:
        ClassError: If the model's class flags are absent or not strong
    """
    _require_strong(model, Signature.MV)
    return wajsberg_view(model)


def w_to_mv_model(model: Model) -> Model:
    """g(S) for a strong quasi-Wajsberg* algebra S"""
    _require_strong(model, Signature.W)
    view = MVView(model)
    return tabulate(view) if view.is_finite else view


def infer_and_translate(text: str, sig: Optional[str] = None,
                        target: Optional[str] = None) -> Tuple[Term, Signature]:
    """
    Parse term text and translate it to the other signature.

    Args:
        text: Term in surface syntax
        sig: Signature of text; tried as MV-STAR, then W-STAR when omitted
        target: Target signature; the other one when omitted

    Returns:
        Tuple[Term, Signature]: The translated term and its signature

    Raises:
        TermSyntaxError: If text parses in neither signature
        SignatureError: If text mixes the two signatures
    """
    if sig:
        source = Signature.parse(sig)
        term = parse(text, source)
    else:
        try:
            term = parse(text, Signature.MV)
        except SqmvError:
            term = parse(text, Signature.W)
        source = signature_of(term) or Signature.MV
    destination = Signature.parse(target) if target else source.other
    logger.debug(f"translating {source.value} term to {destination.value}")
    return translate(term, destination), destination
