"""Tests for permutations, orbit partitions and the union-find forest."""

import pytest

from flagwalk.models.permutation import OrbitPartition, Permutation
from flagwalk.services.permgroup import (
    compose,
    compose_all,
    cycle_lengths,
    cycle_of,
    inverse,
    order,
    order_mod,
    orbits_under,
    power,
)
from flagwalk.utils import UnionFind


def test_compose_applies_left_first() -> None:
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    pq = compose(p, q)
    assert [pq(x) for x in range(3)] == [q(p(x)) for x in range(3)]
    assert pq.tolist() == [2, 1, 0]


def test_compose_rejects_mismatched_sizes() -> None:
    with pytest.raises(ValueError):
        compose(Permutation([0, 1]), Permutation([0, 1, 2]))


def test_compose_all_reads_word_left_to_right() -> None:
    a = Permutation([1, 0, 2])
    b = Permutation([0, 2, 1])
    assert compose_all([a, b, a]) == compose(compose(a, b), a)
    with pytest.raises(ValueError):
        compose_all([])


def test_inverse_and_power() -> None:
    p = Permutation.from_cycles(5, [(0, 1, 2), (3, 4)])
    assert compose(p, inverse(p)).is_identity()
    assert power(p, 6).is_identity()
    assert power(p, -1) == inverse(p)
    assert power(p, 0).is_identity()


def test_cycle_structure_and_order() -> None:
    p = Permutation.from_cycles(6, [(0, 1, 2), (3, 4)])
    assert cycle_of(p, 0) == [0, 1, 2]
    assert cycle_of(p, 5) == [5]
    assert sorted(cycle_lengths(p)) == [1, 2, 3]
    assert order(p) == 6
    assert order(Permutation.identity(4)) == 1


def test_permutation_rejects_non_bijection() -> None:
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 3, 1])


def test_permutation_is_hashable_and_immutable() -> None:
    p = Permutation([2, 0, 1])
    assert {p: "x"}[Permutation([2, 0, 1])] == "x"
    with pytest.raises(ValueError):
        p.images[0] = 1


def test_involution_and_fixed_points() -> None:
    p = Permutation([1, 0, 2, 3])
    assert p.is_involution()
    assert p.fixed_points() == [2, 3]
    assert not Permutation([1, 2, 0]).is_involution()


def test_orbits_under_generators() -> None:
    a = Permutation.from_cycles(6, [(0, 1)])
    b = Permutation.from_cycles(6, [(1, 2), (4, 5)])
    orbits = orbits_under([a, b], 6)
    assert orbits.orbits == ((0, 1, 2), (3,), (4, 5))
    assert orbits.orbit_id == (0, 0, 0, 1, 2, 2)
    assert orbits.same_orbit(0, 2)
    assert not orbits.same_orbit(2, 3)


def test_orbits_under_validates_input() -> None:
    with pytest.raises(ValueError):
        orbits_under([], 0)
    with pytest.raises(ValueError):
        orbits_under([Permutation([0, 1]), Permutation([0, 1, 2])], 2)
    assert orbits_under([], 3).count == 3


def test_orbit_partition_renumbers_by_least_member() -> None:
    partition = OrbitPartition.from_components(4, [[3, 2], [1], [0]])
    assert partition.orbits == ((0,), (1,), (2, 3))
    with pytest.raises(ValueError):
        OrbitPartition.from_components(3, [[0, 1]])


@pytest.mark.parametrize(
    "a, n, expected",
    [(3, 12, 4), (0, 5, 1), (7, 7, 1), (-1, 12, 12), (15, 24, 8)],
)
def test_order_mod(a: int, n: int, expected: int) -> None:
    assert order_mod(a, n) == expected


def test_order_mod_needs_positive_modulus() -> None:
    with pytest.raises(ValueError):
        order_mod(1, 0)


def test_union_find_components() -> None:
    forest = UnionFind(6)
    forest.union(4, 1)
    forest.union(1, 5)
    forest.union(2, 3)
    assert forest.find(5) == forest.find(4)
    assert forest.components() == [[0], [1, 4, 5], [2, 3]]
