"""
Term request and response schemas
"""
from typing import Optional
from pydantic import BaseModel, Field

from sqmv.schemas.base import ResponseBase


class ParseRequest(BaseModel):
    text: str = Field(..., description="Term in surface syntax")
    sig: str = Field("mv", description="mv or w")


class ParseResponse(ResponseBase):
    term: str = Field(..., description="Prefix S-expression of the tree")
    printed: str
    tree: dict


class TranslateRequest(BaseModel):
    text: str
    sig: Optional[str] = Field(None, description="Signature of text, inferred when omitted")
    to: Optional[str] = Field(None, description="Target signature, the other one when omitted")


class TranslateResponse(ResponseBase):
    term: str
    signature: str
