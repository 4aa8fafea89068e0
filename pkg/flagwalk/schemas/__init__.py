"""Schemas package."""

from .base import BaseSchema, ErrorResponse, MessageResponse
from .mapfile import MapfileSchema
from .reports import (
    AxiomViolationSchema,
    ClassificationListSchema,
    ClassificationSchema,
    CycletOrbitSchema,
    CycletReportSchema,
    LabelSchema,
    MapInfoSchema,
    SymmetryClassSchema,
    ValidationReportSchema,
    WalkOrbitReportSchema,
    WalkOrbitRowSchema,
)

__all__ = [
    # Base
    "BaseSchema",
    "MessageResponse",
    "ErrorResponse",
    # Mapfile
    "MapfileSchema",
    # Reports
    "AxiomViolationSchema",
    "ValidationReportSchema",
    "MapInfoSchema",
    "SymmetryClassSchema",
    "WalkOrbitRowSchema",
    "WalkOrbitReportSchema",
    "LabelSchema",
    "ClassificationSchema",
    "ClassificationListSchema",
    "CycletOrbitSchema",
    "CycletReportSchema",
]
