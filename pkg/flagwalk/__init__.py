"""Consistent walks in combinatorial maps: holes, Petrie paths and their edge sets."""

__version__ = "0.1.0"
