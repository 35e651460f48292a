"""
Proof checking schemas
"""
from typing import List, Optional
from pydantic import BaseModel, Field


class LineReport(BaseModel):
    """Diagnostic for one proof line"""
    number: int
    status: str = Field(..., description="ok, rejected or unchecked")
    detail: str = ""


class ProofVerdict(BaseModel):
    """Outcome of checking a proof script"""
    verdict: str = Field(..., description="ACCEPT or REJECT")
    system: str
    failing_line: Optional[int] = None
    reason: Optional[str] = None
    message: Optional[str] = None
    lines: List[LineReport] = Field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.verdict == "ACCEPT"


class ProofCheckRequest(BaseModel):
    script: str = Field(..., description="Proof script text")
