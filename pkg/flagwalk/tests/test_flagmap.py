"""Tests for map validation, derived structure, operators and mapfiles."""

import json

import pytest

from flagwalk.config import settings
from flagwalk.core.exceptions import MapfileFormatException, MapValidationException
from flagwalk.models.flag_system import Axiom, FlagSystem
from flagwalk.models.permutation import Permutation
from flagwalk.services.flagmap import (
    MapService,
    are_isomorphic,
    dual,
    petrie,
    read_mapfile,
    validate,
    write_mapfile,
)
from flagwalk.services.walks import cyclic_equal


def _pp_loop_with(r1: list[int]) -> FlagSystem:
    return FlagSystem(Permutation([1, 0, 3, 2]), Permutation(r1), Permutation([2, 3, 0, 1]))


def test_tetrahedron_structure(tetrahedron: FlagSystem) -> None:
    service = MapService(tetrahedron)
    fs = service.face_structure
    assert (fs.n_vertices, fs.n_edges, fs.n_faces) == (4, 6, 4)
    assert service.euler_characteristic == 2
    assert service.is_orientable
    assert service.genus_report().genus == 0
    assert service.valences == (3, 3, 3, 3)
    assert service.face_sizes == (3, 3, 3, 3)
    assert service.valence == 3
    assert service.is_simple


def test_pp_loop_structure(pp_loop: FlagSystem) -> None:
    service = MapService(pp_loop)
    fs = service.face_structure
    assert (fs.n_vertices, fs.n_edges, fs.n_faces) == (1, 1, 1)
    assert not service.is_orientable
    assert service.orientation_colouring is None
    report = service.genus_report()
    assert (report.euler_characteristic, report.crosscaps, report.genus) == (1, 1, None)
    assert not service.is_simple


def test_m12_7_geometry(m12_7: FlagSystem) -> None:
    service = MapService(m12_7)
    fs = service.face_structure
    assert (fs.n_vertices, fs.n_edges, fs.n_faces) == (4, 12, 2)
    assert service.valences == (6, 6, 6, 6)
    assert service.is_orientable
    assert service.genus_report().genus == 4
    assert not service.is_simple


def test_m12_7_rotations_and_subtend(m12_7: FlagSystem) -> None:
    service = MapService(m12_7)
    assert service.vertex_rotation(1) == (0, 5, 4, 9, 8, 1)
    assert cyclic_equal(service.vertex_rotation(1), (1, 0, 5, 4, 9, 8))
    assert cyclic_equal(service.vertex_rotation(0), (0, 11, 4, 3, 8, 7))
    assert service.subtend(1, 0, 4) == {2, 4}
    assert service.subtend(1, 1, 0) == {1, 5}
    with pytest.raises(ValueError):
        service.subtend(1, 0, 2)


def test_m12_7_skeleton(m12_7: FlagSystem) -> None:
    service = MapService(m12_7)
    sk = service.skeleton
    assert sk.n_darts == 24
    assert all(sk.reverse[sk.reverse[d]] == d for d in range(sk.n_darts))
    assert not any(sk.is_loop(d) for d in range(sk.n_darts))
    # Every vertex pair on the 4-cycle carries three parallel edges.
    pairs = service.edge_endpoints
    assert sorted({pairs.count(p) for p in pairs}) == [3]
    assert len(set(pairs)) == 4


def test_valid_map_has_no_violations(tetrahedron: FlagSystem, pp_loop: FlagSystem) -> None:
    assert validate(tetrahedron).passed
    assert validate(pp_loop).passed


def test_distinctness_violation_is_the_only_one() -> None:
    report = validate(_pp_loop_with([1, 0, 3, 2]))
    assert not report.passed
    assert [(v.axiom, v.flag) for v in report.violations] == [(Axiom.DISTINCT_NEIGHBOURS, 0)]


def test_fixed_point_violation() -> None:
    report = validate(_pp_loop_with([3, 1, 2, 0]))
    found = {(v.axiom, v.flag) for v in report.violations}
    assert (Axiom.FIXED_POINT_FREE, 1) in found


def test_all_violations_are_listed() -> None:
    m = FlagSystem(
        Permutation([1, 0, 3, 2]), Permutation([1, 0, 3, 2]), Permutation([1, 0, 3, 2])
    )
    axioms = {v.axiom for v in validate(m).violations}
    assert {Axiom.DISTINCT_NEIGHBOURS, Axiom.TRANSITIVE} <= axioms


def test_unequal_domains() -> None:
    m = FlagSystem(Permutation([1, 0, 3, 2]), Permutation([1, 0]), Permutation([2, 3, 0, 1]))
    report = validate(m)
    assert [v.axiom for v in report.violations] == [Axiom.EQUAL_DOMAINS]


def test_map_service_rejects_invalid_map() -> None:
    with pytest.raises(MapValidationException) as exc_info:
        MapService(_pp_loop_with([1, 0, 3, 2]))
    assert exc_info.value.exit_code == 1
    assert exc_info.value.details["violations"][0]["axiom"] == "distinct_neighbours"


def test_operators_are_involutions(m12_7: FlagSystem, tetrahedron: FlagSystem) -> None:
    for m in (m12_7, tetrahedron):
        assert write_mapfile(dual(dual(m))) == write_mapfile(m)
        assert write_mapfile(petrie(petrie(m))) == write_mapfile(m)
    assert dual(m12_7).name == "D(M12_7)"
    assert petrie(dual(m12_7)).name == "P(D(M12_7))"


def test_dual_swaps_vertices_and_faces(m12_7: FlagSystem) -> None:
    original = MapService(m12_7).face_structure
    swapped = MapService(dual(m12_7)).face_structure
    assert (swapped.n_vertices, swapped.n_edges, swapped.n_faces) == (2, 12, 4)
    assert original.vertices == swapped.faces


def test_tetrahedron_is_self_dual(tetrahedron: FlagSystem) -> None:
    iso = are_isomorphic(tetrahedron, dual(tetrahedron))
    assert iso is not None
    d = dual(tetrahedron)
    for r_a, r_b in zip(tetrahedron.connections, d.connections):
        assert all(iso(r_a(x)) == r_b(iso(x)) for x in range(tetrahedron.n_flags))


def test_non_isomorphic_maps(tetrahedron: FlagSystem, m12_7: FlagSystem) -> None:
    assert are_isomorphic(tetrahedron, m12_7) is None
    assert are_isomorphic(tetrahedron, petrie(tetrahedron)) is None


def test_mapfile_round_trip(m12_7: FlagSystem) -> None:
    text = write_mapfile(m12_7)
    assert list(json.loads(text)) == ["flags", "r0", "r1", "r2", "name"]
    assert read_mapfile(text) == m12_7


def test_mapfile_without_name_omits_key() -> None:
    m = _pp_loop_with([3, 2, 1, 0])
    assert "name" not in json.loads(write_mapfile(m))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"flags": 4, "r0": [1,0,3,2], "r1": [3,2,1,0], "r2": [2,3,0,1], "extra": 1}',
        '{"flags": 4, "r0": [1,0,3,3], "r1": [3,2,1,0], "r2": [2,3,0,1]}',
        '{"flags": 4, "r0": [1,0,3], "r1": [3,2,1,0], "r2": [2,3,0,1]}',
        '{"flags": 2, "r0": [1,0], "r1": [1,0], "r2": [1,0]}',
        '{"flags": "4", "r0": [1,0,3,2], "r1": [3,2,1,0], "r2": [2,3,0,1]}',
    ],
)
def test_malformed_mapfiles(text: str) -> None:
    with pytest.raises(MapfileFormatException) as exc_info:
        read_mapfile(text)
    assert exc_info.value.exit_code == 2


def test_mapfile_axiom_failure() -> None:
    text = '{"flags": 4, "r0": [1,0,3,2], "r1": [1,0,3,2], "r2": [2,3,0,1]}'
    with pytest.raises(MapValidationException):
        read_mapfile(text)
    assert not validate(read_mapfile(text, check=False)).passed


def test_mapfile_flag_limit(tetrahedron: FlagSystem, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "MAX_FLAGS", 8)
    with pytest.raises(MapfileFormatException):
        read_mapfile(write_mapfile(tetrahedron))
