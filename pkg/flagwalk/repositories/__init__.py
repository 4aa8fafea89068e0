"""Repositories package."""

from .fixtures import FixtureRepository

__all__ = ["FixtureRepository"]
