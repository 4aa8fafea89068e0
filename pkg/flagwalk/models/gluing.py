"""Side identifications of a single polygon."""

from dataclasses import dataclass


@dataclass(frozen=True)
class PolygonGluing:
    """
    A 2n-gon whose sides are identified in pairs.

    Attributes:
        pairing: ``pairing[p]`` is the side glued to side ``p``
        orientable: Per side, True when the pair is glued orientably
    """

    pairing: tuple[int, ...]
    orientable: tuple[bool, ...]

    def __post_init__(self) -> None:
        n_sides = len(self.pairing)
        if n_sides == 0 or n_sides % 2:
            raise ValueError("A gluing needs a positive even number of sides")
        if len(self.orientable) != n_sides:
            raise ValueError("One orientation flag per side is required")
        for p, q in enumerate(self.pairing):
            if not 0 <= q < n_sides or q == p or self.pairing[q] != p:
                raise ValueError(f"Side {p} is not paired by a fixed-point-free involution")
            if self.orientable[p] != self.orientable[q]:
                raise ValueError(f"Sides {p} and {q} disagree on orientation")

    @property
    def n_sides(self) -> int:
        return len(self.pairing)

    @property
    def n_edges(self) -> int:
        return len(self.pairing) // 2

    @classmethod
    def uniform(cls, pairing: list[int], orientable: bool) -> "PolygonGluing":
        return cls(tuple(pairing), tuple([orientable] * len(pairing)))
