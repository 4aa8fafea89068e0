"""Services package."""

from .autgroup import AutGroupService
from .classify import ClassifyService
from .cyclets import CycletService
from .flagmap import MapService
from .walks import WalkService

__all__ = [
    "MapService",
    "AutGroupService",
    "WalkService",
    "ClassifyService",
    "CycletService",
]
