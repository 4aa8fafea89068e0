"""Domain models package."""

from .automorphism import (
    AutGroup,
    Automorphism,
    GroupSelector,
    SubgroupSpec,
    SymmetryClass,
    SymmetryTag,
)
from .classification import (
    LABEL_PRECEDENCE,
    Bead,
    BeadParity,
    Bracelet,
    Cycle,
    EdgeSetClassification,
    EdgeSetLabel,
    EdgeVisitTrace,
    LabelTag,
    ProofCase,
    Twining,
)
from .cyclet import CycletOrbit, CycletReport, DartCyclet
from .flag_system import (
    Axiom,
    AxiomViolation,
    FaceStructure,
    FlagSystem,
    GenusReport,
    Skeleton,
    ValidationReport,
)
from .gluing import PolygonGluing
from .permutation import OrbitPartition, Permutation
from .walk import (
    FlagWalk,
    Trajectory,
    WalkKind,
    WalkKindTag,
    WalkOrbitReport,
    WalkOrbitRow,
)

__all__ = [
    # Permutations
    "Permutation",
    "OrbitPartition",
    # Maps
    "Axiom",
    "AxiomViolation",
    "ValidationReport",
    "FlagSystem",
    "FaceStructure",
    "Skeleton",
    "GenusReport",
    "PolygonGluing",
    # Symmetry
    "Automorphism",
    "AutGroup",
    "GroupSelector",
    "SubgroupSpec",
    "SymmetryTag",
    "SymmetryClass",
    # Walks
    "WalkKindTag",
    "WalkKind",
    "FlagWalk",
    "WalkOrbitRow",
    "WalkOrbitReport",
    "Trajectory",
    # Classification
    "ProofCase",
    "LabelTag",
    "BeadParity",
    "EdgeVisitTrace",
    "Cycle",
    "Bead",
    "Bracelet",
    "Twining",
    "EdgeSetLabel",
    "LABEL_PRECEDENCE",
    "EdgeSetClassification",
    # Cyclets
    "DartCyclet",
    "CycletOrbit",
    "CycletReport",
]
