"""
Check router.
Equation checks, entailment checks and countermodel search.
"""
import logging
from fastapi import APIRouter

from sqmv.models.catalog import resolve_model
from sqmv.schemas.report import CheckOptions, CheckReport, CountermodelRequest, EntailmentRequest, EquationRequest
from sqmv.services.checking import check_entailment, check_equation, search_countermodel
from sqmv.services.strategy import Strategy
from sqmv.syntax.parser import parse
from sqmv.syntax.terms import Signature

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(
    prefix="/api/v1/checks",
    tags=["Checks"],
)


def _strategy(options: CheckOptions):
    return Strategy.parse(options.strategy, options.seed, options.max_den)


@router.post("/equation", response_model=CheckReport, response_model_by_alias=True)
def equation(request: EquationRequest):
    """
    Check lhs = rhs in a catalog model.
    """
    model = resolve_model(request.model)
    sig = Signature.parse(request.sig) if request.sig else model.signature
    return check_equation(parse(request.lhs, sig), parse(request.rhs, sig), model, _strategy(request))


@router.post("/entailment", response_model=CheckReport, response_model_by_alias=True)
def entailment(request: EntailmentRequest):
    """
    Check that the premises entail the conclusion on designated values.
    """
    premises = [parse(text, Signature.W) for text in request.premises]
    return check_entailment(premises, parse(request.conclusion, Signature.W),
                            resolve_model(request.model), _strategy(request))


@router.post("/countermodel", response_model=CheckReport, response_model_by_alias=True)
def countermodel(request: CountermodelRequest):
    """
    Search the family in order for a countermodel to lhs = rhs.
    """
    sig = Signature.parse(request.sig)
    return search_countermodel(parse(request.lhs, sig), parse(request.rhs, sig),
                               request.family, _strategy(request))
