"""Utility helpers."""

from .union_find import UnionFind

__all__ = ["UnionFind"]
