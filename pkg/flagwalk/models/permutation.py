"""Permutations of flag indices and orbit partitions."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

IntArray = NDArray[np.int64]


class Permutation:
    """
    A bijection of ``{0, ..., n-1}`` stored as its image array.

    Instances are immutable and hashable; the image array is read-only.

    Example:
        ```python
        p = Permutation([1, 0, 2])
        p(0)  # 1
        ```
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int] | IntArray) -> None:
        """
        Build a permutation from its images.

        Args:
            images: ``images[x]`` is the image of ``x``

        Raises:
            ValueError: If the images are not a bijection of ``0..n-1``
        """
        if not isinstance(images, np.ndarray):
            images = list(images)
        array = np.array(images, dtype=np.int64)
        if array.ndim != 1:
            raise ValueError("Permutation images must be one-dimensional")
        n = array.shape[0]
        if n and (array.min() < 0 or array.max() >= n or np.unique(array).shape[0] != n):
            raise ValueError("Images are not a bijection of 0..n-1")
        array.setflags(write=False)
        self._images: IntArray = array
        self._hash = hash(array.tobytes())

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n, dtype=np.int64))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """
        Build a permutation from disjoint cycles; unlisted points are fixed.

        Args:
            n: Domain size
            cycles: Cycles such as ``[(0, 1), (2, 3)]``

        Returns:
            The permutation
        """
        images = np.arange(n, dtype=np.int64)
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def images(self) -> IntArray:
        return self._images

    @property
    def size(self) -> int:
        return int(self._images.shape[0])

    def __call__(self, x: int) -> int:
        return int(self._images[x])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._hash == other._hash and np.array_equal(self._images, other._images)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self._images.tolist()})"

    def tolist(self) -> list[int]:
        return [int(x) for x in self._images]

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.size)))

    def is_involution(self) -> bool:
        return bool(np.array_equal(self._images[self._images], np.arange(self.size)))

    def fixed_points(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self._images == np.arange(self.size))]


@dataclass(frozen=True)
class OrbitPartition:
    """
    Partition of ``0..n-1`` into orbits numbered by least member.

    Attributes:
        orbit_id: ``orbit_id[x]`` is the index of the orbit containing ``x``
        orbits: Sorted members of each orbit
    """

    orbit_id: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @classmethod
    def from_components(cls, n: int, components: Iterable[Iterable[int]]) -> "OrbitPartition":
        """Build a partition, renumbering components by their least member."""
        ordered = sorted((tuple(sorted(c)) for c in components), key=lambda c: c[0])
        orbit_id = [-1] * n
        for index, members in enumerate(ordered):
            for x in members:
                orbit_id[x] = index
        if -1 in orbit_id:
            raise ValueError("Components do not cover the domain")
        return cls(orbit_id=tuple(orbit_id), orbits=tuple(ordered))

    def __len__(self) -> int:
        return len(self.orbits)

    @property
    def count(self) -> int:
        return len(self.orbits)

    def orbit_of(self, x: int) -> tuple[int, ...]:
        return self.orbits[self.orbit_id[x]]

    def same_orbit(self, x: int, y: int) -> bool:
        return self.orbit_id[x] == self.orbit_id[y]
