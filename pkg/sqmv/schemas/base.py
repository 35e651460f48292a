"""
Base schemas shared by reports and API responses
"""
from pydantic import BaseModel


class ResponseBase(BaseModel):
    """Base model for API responses"""
    status: str = "success"
    message: str = ""


class ErrorResponse(ResponseBase):
    """Body returned for library errors"""
    status: str = "error"
    error: str
