"""
Model router.
Classification of catalog models.
"""
import logging
from fastapi import APIRouter, Query

from sqmv.models.catalog import list_models, resolve_model
from sqmv.models.classification import classify
from sqmv.schemas.model import ClassificationResponse
from sqmv.services.soundness import sampled_flags
from sqmv.services.strategy import Strategy

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(
    prefix="/api/v1/models",
    tags=["Models"],
    responses={404: {"description": "Unknown model"}},
)


@router.get("")
async def get_models():
    """
    List catalog model names.
    """
    return {"status": "success", "models": list_models()}


@router.get("/{name}/classification", response_model=ClassificationResponse)
def get_classification(name: str, samples: int = Query(1000, gt=0), seed: int = 0):
    """
    Classify a model: exhaustively when finite, by seeded sampling otherwise.
    """
    model = resolve_model(name)
    if model.is_finite:
        flags = classify(model)
    else:
        flags = sampled_flags(model, Strategy.random(samples, seed))
    return ClassificationResponse(model=model.name, size=model.size, flags=flags)
