"""
Schemas for equation and entailment check reports
"""
from enum import Enum
from typing import Dict, List, Optional
from pydantic import AliasChoices, BaseModel, Field


class Verdict(str, Enum):
    VALID_EXHAUSTIVE = "VALID_EXHAUSTIVE"
    NO_COUNTEREXAMPLE_FOUND = "NO_COUNTEREXAMPLE_FOUND"
    COUNTERMODEL = "COUNTERMODEL"


class CheckReport(BaseModel):
    """Outcome of an equation, entailment or countermodel search"""
    verdict: Verdict
    samples_tried: int = Field(..., ge=0, serialization_alias="samples",
                               validation_alias=AliasChoices("samples_tried", "samples"))
    seed: Optional[int] = None
    witness: Optional[Dict[str, str]] = None
    strategy: str
    model: str
    lhs_value: Optional[str] = None
    rhs_value: Optional[str] = None
    premise_hits: Optional[int] = Field(
        None, description="Valuations designating every premise (entailment checks)"
    )

    @property
    def is_countermodel(self) -> bool:
        return self.verdict is Verdict.COUNTERMODEL

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)


class AxiomAudit(BaseModel):
    """Per-axiom results of a model audit"""
    model: str
    strategy: str
    reports: Dict[str, CheckReport]

    @property
    def failed(self) -> List[str]:
        return [name for name, report in self.reports.items() if report.is_countermodel]


class CheckOptions(BaseModel):
    strategy: str = Field("auto", description="exhaustive | grid[:d] | random[:n] | auto")
    seed: Optional[int] = None
    max_den: Optional[int] = Field(None, gt=0)


class EquationRequest(CheckOptions):
    lhs: str
    rhs: str
    model: str = "square"
    sig: Optional[str] = None


class EntailmentRequest(CheckOptions):
    premises: List[str] = Field(default_factory=list)
    conclusion: str
    model: str = "square@w"


class CountermodelRequest(CheckOptions):
    lhs: str
    rhs: str
    family: List[str] = Field(default_factory=lambda: ["chain:1", "chain:2", "flat-standard", "square"])
    sig: str = "mv"
