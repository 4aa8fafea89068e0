"""Edge-set classification of consistent walks."""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar

from .walk import WalkKind


class ProofCase(str, Enum):
    """Where the walk stands after visiting each distinct edge once, relative to its base."""

    IDENTITY = "identity"
    OPPOSITE = "r0r2"
    ACROSS = "r2"
    FORBIDDEN = "r0"
    UNRESOLVED = "unresolved"


class LabelTag(str, Enum):
    CYCLE = "cycle"
    BEAD = "bead"
    BRACELET = "bracelet"
    TWINING = "twining"


class BeadParity(str, Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class EdgeVisitTrace:
    """Edge and vertex sequences of a walk, plus its proof case."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    kind: WalkKind
    valence: int
    proof_case: ProofCase

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def distinct_edges(self) -> int:
        return len(set(self.edges))

    @property
    def distinct_vertices(self) -> int:
        return len(set(self.vertices))

    @property
    def multiplicity(self) -> dict[int, int]:
        return dict(Counter(self.edges))

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class Cycle:
    tag: ClassVar[LabelTag] = LabelTag.CYCLE
    length: int


@dataclass(frozen=True)
class Bead:
    """Evenly spaced parallel edges; consecutive ones subtend ``d`` faces at both ends."""

    tag: ClassVar[LabelTag] = LabelTag.BEAD
    d: int
    parity: BeadParity
    edge_count: int


@dataclass(frozen=True)
class Bracelet:
    """Union of ``bead_count`` d-beads lying on the vertices of a cycle."""

    tag: ClassVar[LabelTag] = LabelTag.BRACELET
    d: int
    bead_count: int


@dataclass(frozen=True)
class Twining:
    """
    Doubled closed walk of length 2k.

    ``sign`` records which of ``q - 2j + d`` or ``q - 2j - d`` reproduces
    ``d_prime``, or None when neither does.
    """

    tag: ClassVar[LabelTag] = LabelTag.TWINING
    d: int
    d_prime: int
    half_length: int
    sign: str | None


EdgeSetLabel = Cycle | Bead | Bracelet | Twining

LABEL_PRECEDENCE = (LabelTag.CYCLE, LabelTag.BEAD, LabelTag.BRACELET, LabelTag.TWINING)


@dataclass(frozen=True)
class EdgeSetClassification:
    """All labels that apply, the primary one, and the line and one-vertex markers."""

    labels: tuple[EdgeSetLabel, ...]
    primary: EdgeSetLabel | None
    is_line: bool
    one_vertex_map: bool
    trace: EdgeVisitTrace

    def label(self, tag: LabelTag) -> EdgeSetLabel | None:
        return next((label for label in self.labels if label.tag is tag), None)

    @property
    def tags(self) -> list[LabelTag]:
        return [label.tag for label in self.labels]
