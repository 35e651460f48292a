"""
Exception hierarchy for the workbench.
Every error carries a human readable detail and a status code. The status
is the process exit status used by the CLI; the API layer maps it to an
HTTP status through ``http_status``.
"""
from typing import Optional


class SqmvError(Exception):
    """Base error for all library failures"""
    status: int = 2
    http_status: int = 400

    def __init__(self, detail: str, status: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if status is not None:
            self.status = status

    def __str__(self) -> str:
        return f"{type(self).__name__}: {self.detail}"


class TermSyntaxError(SqmvError):
    """Raised when term text cannot be parsed"""
    http_status = 422

    def __init__(self, position: int, expected: str, text: str = ""):
        super().__init__(f"at position {position}: expected {expected}")
        self.position = position
        self.expected = expected
        self.text = text


class SignatureError(SqmvError):
    """A connective or constant is not legal in the requested signature"""
    http_status = 422


class ModeError(SqmvError):
    """Abbreviation expansion requested in a mode the target does not support"""


class MissingBinding(SqmvError):
    """A schema metavariable has no binding in a substitution"""


class SpecError(SqmvError):
    """Invalid construction parameters for a model"""


class ClosureError(SqmvError):
    """An operation leaves the declared carrier"""
    http_status = 500


class DomainError(SqmvError):
    """A value is not an element of the model's carrier"""


class NotCompatible(SqmvError):
    """A partition is not compatible with the operations of a model"""


class ClassError(SqmvError):
    """A model does not belong to the class an operation requires"""


class CatalogError(SqmvError):
    """A catalog model name cannot be resolved"""
    http_status = 404


class UnboundVariable(SqmvError):
    """A term variable has no value in the valuation"""


class StrategyError(SqmvError):
    """A sampling strategy is not applicable or not well formed"""


class DesignationMismatch(SqmvError):
    """A closed-form designated set disagrees with the computed one"""
    http_status = 500


class UnknownAxiom(SqmvError):
    """An axiom name is not part of the calculus"""


class CertificationFailed(SqmvError):
    """A derived rule could not be certified"""


class PathMismatch(SqmvError):
    """The subterm at a replacement position is not the expected one"""


class SourceProofInvalid(SqmvError):
    """A proof handed to a transformer does not check"""


class NotRegular(SqmvError):
    """A formula is not a regular term"""


class ScriptFormatError(SqmvError):
    """A proof script file is not well formed"""
    http_status = 422


class InternalInconsistency(SqmvError):
    """A result failed its own re-check"""
    http_status = 500


class TermTooDeep(SqmvError):
    """A term is nested beyond what the recursive algorithms can walk"""
    http_status = 422
