"""Base schemas for common patterns."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class BaseSchema(BaseModel):
    """Base schema with common configurations."""

    model_config = ConfigDict(
        from_attributes=True,  # build from domain dataclasses
        populate_by_name=True,
        use_enum_values=True,
    )


class MessageResponse(BaseSchema):
    """Response with a plain message."""

    message: str = Field(..., description="Message")
    success: bool = Field(True, description="Operation status")


class ErrorResponse(BaseSchema):
    """Failure payload written in JSON mode."""

    message: str = Field(..., description="Error message")
    success: bool = Field(False, description="Operation status")
    details: dict[str, Any] = Field(default_factory=dict, description="Error details")
