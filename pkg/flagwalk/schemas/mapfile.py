"""Mapfile v1: a flag system as JSON."""

from pydantic import ConfigDict, Field, model_validator

from .base import BaseSchema


class MapfileSchema(BaseSchema):
    """
    Keys ``flags``, ``r0``, ``r1``, ``r2`` and optional ``name``; nothing else.

    Field order fixes the key order of the compact writer output.
    """

    model_config = ConfigDict(extra="forbid", strict=True)

    flags: int = Field(..., ge=4, description="Number of flags")
    r0: list[int] = Field(..., description="Images of r0, 0-indexed")
    r1: list[int] = Field(..., description="Images of r1, 0-indexed")
    r2: list[int] = Field(..., description="Images of r2, 0-indexed")
    name: str | None = Field(None, description="Optional label")

    @model_validator(mode="after")
    def check_bijections(self) -> "MapfileSchema":
        """Each connection must permute ``0..flags-1``."""
        expected = list(range(self.flags))
        for key in ("r0", "r1", "r2"):
            images = getattr(self, key)
            if len(images) != self.flags:
                raise ValueError(f"{key} has {len(images)} entries, expected {self.flags}")
            if sorted(images) != expected:
                raise ValueError(f"{key} is not a bijection of 0..{self.flags - 1}")
        return self
