"""Automorphisms, automorphism groups and symmetry classes."""

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

from .permutation import Permutation


@dataclass(frozen=True)
class Automorphism:
    """A flag permutation commuting with r0, r1 and r2."""

    perm: Permutation

    def __call__(self, flag: int) -> int:
        return self.perm(flag)

    def is_identity(self) -> bool:
        return self.perm.is_identity()


@dataclass(frozen=True)
class AutGroup:
    """
    A group of automorphisms materialized as an element list.

    Elements are ordered by the image of ``base_flag``; the identity comes first
    for the full group.
    """

    elements: tuple[Automorphism, ...]
    base_flag: int = 0
    _index: dict[Permutation, int] = field(
        default_factory=dict, init=False, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        self._index.update({g.perm: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Automorphism]:
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Automorphism):
            return item.perm in self._index
        if isinstance(item, Permutation):
            return item in self._index
        return False

    def perms(self) -> list[Permutation]:
        return [g.perm for g in self.elements]


class GroupSelector(str, Enum):
    """Which subgroup of Aut(M) an operation acts with."""

    FULL = "full"
    ROTATION = "rotation"
    FACE_BIPARTITE = "facebip"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SubgroupSpec:
    """Subgroup selector; ``elements`` is used only by the custom selector."""

    selector: GroupSelector = GroupSelector.FULL
    elements: tuple[Automorphism, ...] = ()

    @classmethod
    def full(cls) -> "SubgroupSpec":
        return cls(GroupSelector.FULL)

    @classmethod
    def rotation(cls) -> "SubgroupSpec":
        return cls(GroupSelector.ROTATION)

    @classmethod
    def face_bipartite(cls) -> "SubgroupSpec":
        return cls(GroupSelector.FACE_BIPARTITE)

    @classmethod
    def custom(cls, elements: list[Automorphism]) -> "SubgroupSpec":
        return cls(GroupSelector.CUSTOM, tuple(elements))


class SymmetryTag(str, Enum):
    """Dart-transitive symmetry classes."""

    REFLEXIBLE = "reflexible"
    CHIRAL = "2"
    CLASS_2_0 = "2_0"
    CLASS_2_01 = "2_01"
    CLASS_2_1 = "2_1"
    NOT_DART_TRANSITIVE = "not_dart_transitive"

    @property
    def petrie_counterpart(self) -> "SymmetryTag":
        """Class of the Petrie dual: 2 and 2_0 swap, as do 2_1 and 2_01."""
        return _PETRIE_SWAP.get(self, self)


_PETRIE_SWAP = {
    SymmetryTag.CHIRAL: SymmetryTag.CLASS_2_0,
    SymmetryTag.CLASS_2_0: SymmetryTag.CHIRAL,
    SymmetryTag.CLASS_2_1: SymmetryTag.CLASS_2_01,
    SymmetryTag.CLASS_2_01: SymmetryTag.CLASS_2_1,
}


@dataclass(frozen=True)
class SymmetryClass:
    """Symmetry class together with the number of flag orbits under Aut(M)."""

    tag: SymmetryTag
    flag_orbits: int

    @property
    def is_dart_transitive(self) -> bool:
        return self.tag is not SymmetryTag.NOT_DART_TRANSITIVE

    def __str__(self) -> str:
        if self.tag is SymmetryTag.NOT_DART_TRANSITIVE:
            return f"not_dart_transitive({self.flag_orbits})"
        return self.tag.value
