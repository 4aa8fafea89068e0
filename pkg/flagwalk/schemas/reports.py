"""Report schemas for the command-line JSON output."""

from pydantic import Field

from flagwalk.models.automorphism import GroupSelector, SymmetryTag
from flagwalk.models.classification import BeadParity, LabelTag, ProofCase
from flagwalk.models.flag_system import Axiom
from flagwalk.models.walk import WalkKindTag

from .base import BaseSchema


class AxiomViolationSchema(BaseSchema):
    axiom: Axiom = Field(..., description="Violated axiom")
    flag: int | None = Field(None, description="Witness flag")
    connection: str | None = Field(None, description="Connection or pair involved")
    detail: str = Field(..., description="Human-readable detail")


class ValidationReportSchema(BaseSchema):
    """Outcome of the axiom check."""

    valid: bool = Field(..., description="True when every axiom holds")
    n_flags: int = Field(..., description="Number of flags")
    violations: list[AxiomViolationSchema] = Field(default_factory=list)


class SymmetryClassSchema(BaseSchema):
    symmetry_class: str = Field(..., description="Class label, e.g. reflexible or 2_01")
    tag: SymmetryTag = Field(..., description="Class tag")
    flag_orbits: int = Field(..., description="Flag orbits under Aut(M)")
    dart_transitive: bool = Field(..., description="Aut(M) is transitive on darts")
    group_order: int = Field(..., description="Order of Aut(M)")


class MapInfoSchema(BaseSchema):
    """Surface and incidence summary of a map."""

    name: str | None = Field(None, description="Map label")
    flags: int = Field(..., description="Number of flags")
    vertices: int = Field(..., description="V")
    edges: int = Field(..., description="E")
    faces: int = Field(..., description="F")
    euler_characteristic: int = Field(..., description="V - E + F")
    orientable: bool = Field(..., description="Orientability")
    genus: int | None = Field(None, description="Orientable genus")
    crosscaps: int | None = Field(None, description="Non-orientable genus")
    valences: list[int] = Field(..., description="Valence per vertex id")
    face_sizes: list[int] = Field(..., description="Edges per face id")
    equivelar: bool = Field(..., description="All valences agree")
    simple: bool = Field(..., description="Skeleton has no loops or parallel edges")
    group_order: int = Field(..., description="Order of Aut(M)")
    vertex_transitive: bool = Field(..., description="Aut(M) is transitive on vertices")
    edge_transitive: bool = Field(..., description="Aut(M) is transitive on edges")
    face_transitive: bool = Field(..., description="Aut(M) is transitive on faces")


class WalkOrbitRowSchema(BaseSchema):
    """One orbit of consistent walks, flattened."""

    flag_orbit: int = Field(..., description="Flag orbit of the base flag")
    kind: WalkKindTag = Field(..., validation_alias="kind_tag", description="hole or petrie")
    j: int = Field(..., description="Walk parameter")
    length: int = Field(..., description="Walk length")
    symmetric: bool = Field(..., description="Some group element reverses the walk")
    flag_symmetric: bool = Field(..., description="Reversal holds flag for flag")
    is_line: bool = Field(..., description="Edge set is a line")
    orbit_size: int = Field(..., description="Walks in the orbit")
    gamma_order: int = Field(..., description="Order of the generating permutation")
    representative: list[int] = Field(
        ..., validation_alias="representative_flags", description="Flags of one walk"
    )


class WalkOrbitReportSchema(BaseSchema):
    valence: int = Field(..., description="Common valence q")
    group_order: int = Field(..., description="Order of the acting subgroup")
    selector: GroupSelector = Field(..., description="Acting subgroup")
    expected_rows: int = Field(..., description="2(q - 1)")
    rows: list[WalkOrbitRowSchema] = Field(default_factory=list)


class LabelSchema(BaseSchema):
    """An edge-set label; only the parameters of its own type are set."""

    tag: LabelTag = Field(..., description="Label type")
    length: int | None = Field(None, description="Cycle length")
    d: int | None = Field(None, description="Spacing or subtend value")
    parity: BeadParity | None = Field(None, description="Bead parity")
    edge_count: int | None = Field(None, description="Edges in a bead")
    bead_count: int | None = Field(None, description="Beads in a bracelet")
    d_prime: int | None = Field(None, description="Second subtend value of a twining")
    half_length: int | None = Field(None, description="k for a twining of length 2k")
    sign: str | None = Field(None, description="Sign relating d and d_prime")


class ClassificationSchema(BaseSchema):
    flag_orbit: int = Field(..., description="Flag orbit of the walk orbit")
    kind: WalkKindTag = Field(..., description="hole or petrie")
    j: int = Field(..., description="Walk parameter")
    primary: LabelTag | None = Field(None, description="Primary label")
    labels: list[LabelSchema] = Field(default_factory=list)
    is_line: bool = Field(..., description="Edge set is a line")
    one_vertex_map: bool = Field(..., description="Map has a single vertex")
    proof_case: ProofCase = Field(..., description="Position after one pass over the edges")
    edges: list[int] = Field(..., description="Edge sequence")
    vertices: list[int] = Field(..., description="Vertex sequence")


class CycletOrbitSchema(BaseSchema):
    key: list[int] = Field(..., description="Least canonical cyclet in the orbit")
    length: int = Field(..., description="Cyclet length")
    size: int = Field(..., description="Cyclets in the orbit")


class CycletReportSchema(BaseSchema):
    valence: int = Field(..., description="Common valence q")
    group_order: int = Field(..., description="Order of the induced dart group")
    expected: int = Field(..., description="q - 1")
    matches: bool = Field(..., description="Orbit count equals q - 1")
    orbits: list[CycletOrbitSchema] = Field(default_factory=list)


class ClassificationListSchema(BaseSchema):
    items: list[ClassificationSchema] = Field(default_factory=list)
