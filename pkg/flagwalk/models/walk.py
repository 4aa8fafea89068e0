"""Flag-walks: holes, Petrie paths and orbit reports."""

from dataclasses import dataclass
from enum import Enum

from .automorphism import Automorphism, GroupSelector


class WalkKindTag(str, Enum):
    """Generator of a walk: alpha_j for holes, beta_j for Petrie paths."""

    HOLE = "hole"
    PETRIE = "petrie"

    @property
    def swapped(self) -> "WalkKindTag":
        return WalkKindTag.PETRIE if self is WalkKindTag.HOLE else WalkKindTag.HOLE


@dataclass(frozen=True, order=True)
class WalkKind:
    """Kind and parameter of a walk, 1 <= j <= q-1."""

    tag: WalkKindTag
    j: int

    def __str__(self) -> str:
        return f"{self.j}-{self.tag.value}"


@dataclass(frozen=True)
class FlagWalk:
    """
    A closed flag-walk ``flags[i+1] = gamma(flags[i])``.

    Attributes:
        base: First flag of the walk
        kind: Hole or Petrie path and its parameter j
        flags: The cycle of gamma through ``base`` in application order
        valence: Common valence q of the map
        shunt: Automorphism advancing the walk by one step, once established
    """

    base: int
    kind: WalkKind
    flags: tuple[int, ...]
    valence: int
    shunt: Automorphism | None = None

    @property
    def length(self) -> int:
        return len(self.flags)

    @property
    def j(self) -> int:
        return self.kind.j

    def __len__(self) -> int:
        return len(self.flags)


@dataclass(frozen=True)
class WalkOrbitRow:
    """One orbit of consistent flag-walks, keyed by (flag_orbit, kind)."""

    flag_orbit: int
    kind: WalkKind
    length: int
    symmetric: bool
    flag_symmetric: bool
    is_line: bool
    representative: FlagWalk
    orbit_size: int
    gamma_order: int

    @property
    def j(self) -> int:
        return self.kind.j

    @property
    def kind_tag(self) -> WalkKindTag:
        return self.kind.tag

    @property
    def representative_flags(self) -> list[int]:
        return list(self.representative.flags)

    @property
    def length_mismatch(self) -> bool:
        """True when the cycle through the base is shorter than the order of gamma."""
        return self.length != self.gamma_order


@dataclass(frozen=True)
class WalkOrbitReport:
    """All orbits of consistent flag-walks under one subgroup."""

    valence: int
    group_order: int
    selector: GroupSelector
    rows: tuple[WalkOrbitRow, ...]

    @property
    def expected_rows(self) -> int:
        return 2 * (self.valence - 1)

    def __len__(self) -> int:
        return len(self.rows)

    def rows_for(self, tag: WalkKindTag, j: int | None = None) -> list[WalkOrbitRow]:
        return [r for r in self.rows if r.kind.tag is tag and (j is None or r.kind.j == j)]


@dataclass(frozen=True)
class Trajectory:
    """A closed flag-walk traced by an automorphism, with the triple it matched."""

    flags: tuple[int, ...]
    shunt: Automorphism
    kind: WalkKind | None
