"""Dart cyclets of the skeleton."""

from dataclasses import dataclass

from .permutation import Permutation


@dataclass(frozen=True)
class DartCyclet:
    """Cyclic dart sequence without immediate reversals, shunted by ``shunt``."""

    darts: tuple[int, ...]
    shunt: Permutation | None = None

    @property
    def length(self) -> int:
        return len(self.darts)

    def canonical(self) -> tuple[int, ...]:
        """Rotation starting at the least dart."""
        start = self.darts.index(min(self.darts))
        return self.darts[start:] + self.darts[:start]


@dataclass(frozen=True)
class CycletOrbit:
    key: tuple[int, ...]
    representative: DartCyclet
    size: int

    @property
    def length(self) -> int:
        return self.representative.length


@dataclass(frozen=True)
class CycletReport:
    """Orbits of consistent cyclets, compared against q - 1."""

    valence: int
    group_order: int
    orbits: tuple[CycletOrbit, ...]

    @property
    def expected(self) -> int:
        return self.valence - 1

    @property
    def matches(self) -> bool:
        return len(self.orbits) == self.expected
