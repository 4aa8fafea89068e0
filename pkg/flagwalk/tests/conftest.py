"""Pytest fixtures"""

import pytest

from flagwalk.models.flag_system import FlagSystem
from flagwalk.repositories.fixtures import FixtureRepository
from flagwalk.services import AutGroupService, ClassifyService, CycletService, WalkService
from flagwalk.services.families import build_H, build_M
from flagwalk.services.flagmap import dual


@pytest.fixture(scope="session")
def repo() -> FixtureRepository:
    return FixtureRepository()


@pytest.fixture(scope="session")
def tetrahedron(repo: FixtureRepository) -> FlagSystem:
    return repo.get("tetrahedron")


@pytest.fixture(scope="session")
def pp_loop(repo: FixtureRepository) -> FlagSystem:
    return repo.get("pp_loop")


@pytest.fixture(scope="session")
def m12_7(repo: FixtureRepository) -> FlagSystem:
    return repo.get("M12_7")


@pytest.fixture(scope="session")
def dm12_7(repo: FixtureRepository) -> FlagSystem:
    return repo.get("DM12_7")


@pytest.fixture(scope="session")
def cunningham(repo: FixtureRepository) -> FlagSystem:
    return repo.get("cunningham")


@pytest.fixture(scope="session")
def chiral_torus(repo: FixtureRepository) -> FlagSystem:
    return repo.get("chiral_torus")


@pytest.fixture(scope="session")
def dh12_3() -> FlagSystem:
    return dual(build_H(12, 3))


@pytest.fixture(scope="session")
def dm5() -> FlagSystem:
    return dual(build_M(5))


# Shared services; group computations are cached on the instances


@pytest.fixture(scope="session")
def tetra_walks(tetrahedron: FlagSystem) -> WalkService:
    return WalkService(tetrahedron)


@pytest.fixture(scope="session")
def m12_7_classify(m12_7: FlagSystem) -> ClassifyService:
    return ClassifyService(m12_7)


@pytest.fixture(scope="session")
def dm12_7_classify(dm12_7: FlagSystem) -> ClassifyService:
    return ClassifyService(dm12_7)


@pytest.fixture(scope="session")
def cunningham_classify(cunningham: FlagSystem) -> ClassifyService:
    return ClassifyService(cunningham)


@pytest.fixture(scope="session")
def dh12_3_walks(dh12_3: FlagSystem) -> WalkService:
    return WalkService(dh12_3)


@pytest.fixture(scope="session")
def cunningham_auts(cunningham_classify: ClassifyService) -> AutGroupService:
    return cunningham_classify.auts


@pytest.fixture(scope="session")
def tetra_cyclets(tetra_walks: WalkService) -> CycletService:
    return CycletService(tetra_walks.map, tetra_walks.auts)
