"""
FastAPI application exposing the workbench over HTTP.
The routes mirror the command-line verbs.
"""
import logging
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from sqmv.api.checks import router as checks_router
from sqmv.api.models import router as models_router
from sqmv.api.proofs import router as proofs_router
from sqmv.api.terms import router as terms_router
from sqmv.config import configure_logging
from sqmv.schemas.base import ErrorResponse
from sqmv.utils.errors import SqmvError, TermTooDeep

# Set up logging
configure_logging()
logger = logging.getLogger(__name__)

# Create the FastAPI app instance
app = FastAPI(
    title="sqmv API",
    description="Strong quasi-MV* and quasi-Wajsberg* algebras and the sqL* calculus",
    version="0.1.0",
)

# Configure CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost", "http://127.0.0.1"],
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(SqmvError)
async def sqmv_error_handler(request: Request, exc: SqmvError):
    """
    Convert library errors into JSON error bodies.
    """
    logger.info(f"{request.url.path}: {exc}")
    body = ErrorResponse(message=exc.detail, error=type(exc).__name__)
    return JSONResponse(status_code=exc.http_status, content=body.model_dump())


@app.exception_handler(RecursionError)
async def recursion_error_handler(request: Request, exc: RecursionError):
    return await sqmv_error_handler(request, TermTooDeep("term nesting exceeds the recursion limit"))


# Health check endpoint
@app.get("/health", tags=["Health"])
async def health_check():
    """
    Health check endpoint to verify the API is running.
    """
    return {"status": "healthy", "message": "API is running"}


# Root endpoint
@app.get("/", tags=["Root"])
async def root():
    """
    Root endpoint that returns basic API information.
    """
    return {
        "message": "sqmv workbench API",
        "docs": "/docs",
        "redoc": "/redoc",
    }


# Include routers
app.include_router(terms_router)
app.include_router(models_router)
app.include_router(checks_router)
app.include_router(proofs_router)
