"""Permutation arithmetic and orbit machinery.

Composition is left-acts-first: ``compose(p, q)`` applies ``p`` and then ``q``,
so a word ``r0 r1`` reads in the order the connections are applied.
"""

import math
from collections.abc import Sequence

import numpy as np

from flagwalk.models.permutation import OrbitPartition, Permutation
from flagwalk.utils.union_find import UnionFind


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Apply ``p`` first, then ``q``.

    Raises:
        ValueError: If the domains differ in size
    """
    if p.size != q.size:
        raise ValueError(f"Cannot compose permutations on {p.size} and {q.size} points")
    return Permutation(q.images[p.images])


def compose_all(perms: Sequence[Permutation]) -> Permutation:
    """Compose a word left to right."""
    if not perms:
        raise ValueError("Empty word")
    result = perms[0]
    for p in perms[1:]:
        result = compose(result, p)
    return result


def inverse(p: Permutation) -> Permutation:
    """The permutation undoing ``p``."""
    images = np.empty_like(p.images)
    images[p.images] = np.arange(p.size, dtype=np.int64)
    return Permutation(images)


def power(p: Permutation, k: int) -> Permutation:
    """``p`` applied ``k`` times; negative ``k`` uses the inverse."""
    base = p if k >= 0 else inverse(p)
    result = Permutation.identity(p.size)
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


def cycle_of(p: Permutation, x: int) -> list[int]:
    """The orbit of ``x`` under ``<p>`` in application order, starting at ``x``."""
    cycle = [x]
    y = p(x)
    while y != x:
        cycle.append(y)
        y = p(y)
    return cycle


def cycle_lengths(p: Permutation) -> list[int]:
    """Cycle lengths of ``p`` including fixed points, in order of least element."""
    seen = np.zeros(p.size, dtype=bool)
    lengths = []
    for x in range(p.size):
        if not seen[x]:
            cycle = cycle_of(p, x)
            seen[cycle] = True
            lengths.append(len(cycle))
    return lengths


def order(p: Permutation) -> int:
    """Least ``k >= 1`` with ``p^k`` the identity."""
    return math.lcm(*cycle_lengths(p)) if p.size else 1


def orbits_under(generators: Sequence[Permutation], n: int) -> OrbitPartition:
    """
    Orbits of the group generated by ``generators`` on ``0..n-1``.

    Args:
        generators: Permutations on ``n`` points
        n: Domain size

    Returns:
        Orbit partition numbered by least member

    Raises:
        ValueError: On an empty domain with no generators, or mixed domain sizes
    """
    if n == 0 and not generators:
        raise ValueError("Cannot form orbits of nothing")
    if any(g.size != n for g in generators):
        raise ValueError("All generators must act on the same domain")

    forest = UnionFind(n)
    for g in generators:
        for x, y in enumerate(g.images.tolist()):
            forest.union(x, y)
    return OrbitPartition.from_components(n, forest.components())


def order_mod(a: int, n: int) -> int:
    """
    Additive order of ``a`` in Z_n, written |a|_n; equals n / gcd(n, a).

    Raises:
        ValueError: If ``n < 1``
    """
    if n < 1:
        raise ValueError("Modulus must be positive")
    return n // math.gcd(n, a % n)
