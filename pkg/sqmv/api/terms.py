"""
Term router.
Parsing, printing and translation between the two signatures.
"""
import logging
from fastapi import APIRouter

from sqmv.schemas.term import ParseRequest, ParseResponse, TranslateRequest, TranslateResponse
from sqmv.services.transform import infer_and_translate
from sqmv.syntax.parser import parse
from sqmv.syntax.printer import print_term
from sqmv.syntax.terms import Term, Var, describe

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(
    prefix="/api/v1/terms",
    tags=["Terms"],
    responses={422: {"description": "Malformed term"}},
)


def _tree(t: Term) -> dict:
    if isinstance(t, Var):
        return {"var": t.name}
    node = {"op": t.connective.value}
    if t.children:
        node["args"] = [_tree(child) for child in t.children]
    return node


@router.post("/parse", response_model=ParseResponse)
async def parse_term(request: ParseRequest):
    """
    Parse a term and return its canonical printing and tree.
    """
    term = parse(request.text, request.sig)
    return ParseResponse(term=describe(term), printed=print_term(term), tree=_tree(term))


@router.post("/translate", response_model=TranslateResponse)
async def translate_term(request: TranslateRequest):
    """
    Translate a term with f (MV-STAR to W-STAR) or g (W-STAR to MV-STAR).
    """
    translated, target = infer_and_translate(request.text, request.sig, request.to)
    return TranslateResponse(term=print_term(translated), signature=target.value)
