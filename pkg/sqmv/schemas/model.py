"""
Model classification and structure schemas
"""
from typing import Dict, List, Optional
from pydantic import BaseModel, Field


class ClassFlags(BaseModel):
    """Membership of a model in the classes of the workbench"""
    signature: str
    is_quasi: bool
    is_strong: bool
    is_flat: bool = Field(..., description="strong and 0 = 1")
    is_classic: bool = Field(..., description="MV*-algebra or Wajsberg* algebra")
    exhaustive: bool = True
    failures: Dict[str, Dict[str, str]] = Field(default_factory=dict)

    @property
    def is_strong_quasi(self) -> bool:
        return self.is_quasi and self.is_strong


class RegularPart(BaseModel):
    """R(A) together with its classification as a subalgebra"""
    model: str
    elements: List[str]
    is_classic: bool


class CongruenceSchema(BaseModel):
    """A partition of a finite carrier"""
    model: str
    name: str
    blocks: List[List[str]]


class EmbeddingReport(BaseModel):
    """The map x ↦ (x/μ, x/τ) and what it preserves"""
    model: str
    target: str
    mapping: Dict[str, str]
    is_homomorphism: bool
    is_injective: bool
    is_surjective: bool
    failure: Optional[str] = None

    @property
    def is_isomorphism(self) -> bool:
        return self.is_homomorphism and self.is_injective and self.is_surjective


class ClassificationResponse(BaseModel):
    """Response for classification requests"""
    status: str = "success"
    model: str
    size: Optional[int] = None
    flags: ClassFlags
    congruences: List[CongruenceSchema] = Field(default_factory=list)
    embedding: Optional[EmbeddingReport] = None
