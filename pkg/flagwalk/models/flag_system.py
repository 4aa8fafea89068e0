"""Flag systems and the structures derived from them."""

from dataclasses import dataclass, field
from enum import Enum

from .permutation import OrbitPartition, Permutation


class Axiom(str, Enum):
    """Map axioms checked by validation."""

    EQUAL_DOMAINS = "equal_domains"
    INVOLUTION = "involution"
    FIXED_POINT_FREE = "fixed_point_free"
    R0R2_COMMUTE = "r0r2_commute"
    DISTINCT_NEIGHBOURS = "distinct_neighbours"
    TRANSITIVE = "transitive"


@dataclass(frozen=True)
class AxiomViolation:
    """One violated axiom with a witness flag."""

    axiom: Axiom
    flag: int | None
    connection: str | None
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking every axiom; lists all violations, not just the first."""

    n_flags: int
    violations: tuple[AxiomViolation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class FlagSystem:
    """
    A map given by three connection involutions on flags ``0..n-1``.

    ``r0`` changes the vertex of a flag, ``r1`` its edge and ``r2`` its face.
    The optional name is a label only and does not take part in equality.
    """

    r0: Permutation
    r1: Permutation
    r2: Permutation
    name: str | None = field(default=None, compare=False)

    @property
    def n_flags(self) -> int:
        return self.r0.size

    @property
    def connections(self) -> tuple[Permutation, Permutation, Permutation]:
        return (self.r0, self.r1, self.r2)

    def connection(self, i: int) -> Permutation:
        return self.connections[i]


@dataclass(frozen=True)
class FaceStructure:
    """Vertices, edges, faces and darts as orbit partitions of the flags."""

    vertices: OrbitPartition
    edges: OrbitPartition
    faces: OrbitPartition
    darts: OrbitPartition

    @property
    def n_vertices(self) -> int:
        return self.vertices.count

    @property
    def n_edges(self) -> int:
        return self.edges.count

    @property
    def n_faces(self) -> int:
        return self.faces.count

    @property
    def n_darts(self) -> int:
        return self.darts.count


@dataclass(frozen=True)
class Skeleton:
    """
    The underlying pseudograph, indexed by dart id.

    Attributes:
        initial: Initial vertex of each dart
        reverse: Reverse dart of each dart
        edge: Parent edge of each dart
    """

    initial: tuple[int, ...]
    reverse: tuple[int, ...]
    edge: tuple[int, ...]

    @property
    def n_darts(self) -> int:
        return len(self.initial)

    def terminal(self, dart: int) -> int:
        return self.initial[self.reverse[dart]]

    def endpoints(self, edge: int) -> tuple[int, int]:
        """Sorted end vertices of an edge."""
        dart = self.edge.index(edge)
        u, v = self.initial[dart], self.terminal(dart)
        return (u, v) if u <= v else (v, u)

    def is_loop(self, dart: int) -> bool:
        return self.initial[dart] == self.terminal(dart)


@dataclass(frozen=True)
class GenusReport:
    """Euler characteristic with orientable genus or crosscap number."""

    euler_characteristic: int
    orientable: bool
    genus: int | None = None
    crosscaps: int | None = None
