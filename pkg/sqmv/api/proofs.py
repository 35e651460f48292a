"""
Proof router.
"""
import logging
from fastapi import APIRouter

from sqmv.corpus.loader import registry_for
from sqmv.proofkit.checker import check_proof
from sqmv.proofkit.script import parse_script
from sqmv.schemas.proof import ProofCheckRequest, ProofVerdict

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(
    prefix="/api/v1/proofs",
    tags=["Proofs"],
    responses={422: {"description": "Malformed script"}},
)


@router.post("/check", response_model=ProofVerdict)
def check(request: ProofCheckRequest):
    """
    Check a proof script against the lemma registry.
    A rejected script is a verdict, not an error.
    """
    script = parse_script(request.script, name="request")
    return check_proof(script, registry_for(script))
