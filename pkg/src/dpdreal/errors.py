"""Exception hierarchy.  Every error carries a short ``tag`` used by the CLI."""

from __future__ import annotations


class DpdError(Exception):
    tag = "Error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.tag)
        self.details = details

    def to_dict(self) -> dict:
        out = {"error": self.tag, "message": str(self)}
        for key, value in self.details.items():
            out[key] = str(value)
        return out


class PoleAtPoint(DpdError):
    tag = "PoleAtPoint"


class ZeroFunction(DpdError):
    tag = "ZeroFunction"


class NonGaussianRoots(DpdError):
    tag = "NonGaussianRoots"


class EmptyRemovedSet(DpdError):
    tag = "EmptyRemovedSet"


class NotConjugationStable(DpdError):
    tag = "NotConjugationStable"


class PointNotOnCurve(DpdError):
    tag = "PointNotOnCurve"


class NotReal(DpdError):
    tag = "NotReal"


class ValidityViolation(DpdError):
    tag = "ValidityViolation"


class InfinityUnsupported(DpdError):
    tag = "InfinityUnsupported"


class RealPointRemoval(DpdError):
    tag = "RealPointRemoval"


class ExtensionObstruction(DpdError):
    tag = "ExtensionObstruction"


class NotInPiece(DpdError):
    tag = "NotInPiece"


class RelationFails(DpdError):
    tag = "RelationFails"


class NotRegular(DpdError):
    tag = "NotRegular"


class RealPoint(DpdError):
    tag = "RealPoint"


class NotAModel(DpdError):
    tag = "NotAModel"


class CurveMismatch(DpdError):
    tag = "CurveMismatch"


class ZeroScalar(DpdError):
    tag = "ZeroScalar"


class TorsorConstraintViolation(DpdError):
    tag = "TorsorConstraintViolation"


class DocumentError(DpdError):
    """Input-language error with a 1-based line/column."""

    tag = "SyntaxError"

    def __init__(self, message: str, line: int = 1, column: int = 1, **details):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})", **details)

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["line"] = self.line
        out["column"] = self.column
        return out


class SyntaxErrorAt(DocumentError):
    tag = "SyntaxError"


class SemanticError(DocumentError):
    tag = "SemanticError"


class UnknownCommand(DpdError):
    tag = "UnknownCommand"
