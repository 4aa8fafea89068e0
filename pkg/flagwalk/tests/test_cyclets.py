"""Tests for consistent cyclets on the skeleton."""

import pytest

from flagwalk.core.exceptions import NotDartTransitiveException
from flagwalk.models.automorphism import Automorphism, SubgroupSpec
from flagwalk.models.flag_system import FlagSystem
from flagwalk.models.permutation import Permutation
from flagwalk.models.walk import WalkKind, WalkKindTag
from flagwalk.services import CycletService, WalkService
from flagwalk.services.permgroup import compose


def test_dart_action_is_a_homomorphism(tetra_cyclets: CycletService) -> None:
    group = tetra_cyclets.auts.group
    for g in group.elements[:6]:
        for h in group.elements[:6]:
            gh = Automorphism(compose(g.perm, h.perm))
            assert tetra_cyclets.induced_dart_action(gh) == compose(
                tetra_cyclets.induced_dart_action(g), tetra_cyclets.induced_dart_action(h)
            )


def test_induced_group_is_faithful_on_tetrahedron(tetra_cyclets: CycletService) -> None:
    perms = tetra_cyclets.induced_group()
    assert len(perms) == 24
    assert perms[0].is_identity()


def test_sequential_darts(tetra_cyclets: CycletService) -> None:
    sk = tetra_cyclets.maps.skeleton
    d = 0
    assert not tetra_cyclets.is_sequential(d, sk.reverse[d])
    following = [e for e in range(sk.n_darts) if tetra_cyclets.is_sequential(d, e)]
    assert len(following) == 2
    assert all(sk.initial[e] == sk.terminal(d) for e in following)


def test_tetrahedron_cyclets(tetra_cyclets: CycletService) -> None:
    report = tetra_cyclets.consistent_cyclets()
    assert report.valence == 3
    assert report.group_order == 24
    assert len(report.orbits) == report.expected == 2
    assert report.matches
    assert sorted(o.length for o in report.orbits) == [3, 4]
    keys = [o.key for o in report.orbits]
    assert keys == sorted(keys)


def test_projective_loop_cyclets(pp_loop: FlagSystem) -> None:
    report = CycletService(pp_loop).consistent_cyclets()
    assert report.valence == 2
    assert len(report.orbits) == 1
    assert report.matches


@pytest.mark.parametrize("name, q", [("cunningham", 8), ("dh12_3", 24), ("chiral_torus", 4)])
def test_orbit_count_is_q_minus_one(name: str, q: int, request: pytest.FixtureRequest) -> None:
    report = CycletService(request.getfixturevalue(name)).consistent_cyclets()
    assert report.valence == q
    assert len(report.orbits) == q - 1
    assert report.matches


def test_trivial_subgroup_is_not_dart_transitive(tetrahedron: FlagSystem) -> None:
    identity = Automorphism(Permutation.identity(tetrahedron.n_flags))
    with pytest.raises(NotDartTransitiveException) as exc_info:
        CycletService(tetrahedron).consistent_cyclets(SubgroupSpec.custom([identity]))
    assert exc_info.value.exit_code == 2


def test_face_hole_projects_to_a_triangle(
    tetra_walks: WalkService, tetra_cyclets: CycletService
) -> None:
    w = tetra_walks.with_shunt(tetra_walks.walk_at(0, WalkKind(WalkKindTag.HOLE, 1)))
    assert w is not None
    cyclet = tetra_cyclets.walk_to_cyclet(w)
    assert cyclet is not None and cyclet.shunt is not None
    assert cyclet.length == 3
    for i, d in enumerate(cyclet.darts):
        assert cyclet.shunt(d) == cyclet.darts[(i + 1) % 3]


def test_partner_walks_share_a_cyclet(
    tetra_walks: WalkService, tetra_cyclets: CycletService
) -> None:
    w = tetra_walks.walk_at(0, WalkKind(WalkKindTag.PETRIE, 1))
    ours = tetra_cyclets.walk_to_cyclet(w)
    theirs = tetra_cyclets.walk_to_cyclet(tetra_walks.partner(w))
    assert ours is not None and theirs is not None
    assert ours.darts == theirs.darts


def test_walk_orbits_project_onto_cyclet_orbits(
    tetra_walks: WalkService, tetra_cyclets: CycletService
) -> None:
    perms = tetra_cyclets.induced_group()
    report = tetra_cyclets.consistent_cyclets()
    keys = set()
    for row in tetra_walks.enumerate_consistent_orbits().rows:
        cyclet = tetra_cyclets.walk_to_cyclet(row.representative)
        assert cyclet is not None
        keys.add(CycletService.orbit_key(cyclet, perms))
    assert keys == {o.key for o in report.orbits}
