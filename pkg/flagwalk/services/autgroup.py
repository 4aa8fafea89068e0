"""Automorphism groups, distinguished subgroups and symmetry classes."""

from functools import cached_property

import networkx as nx
import numpy as np

from flagwalk.core.exceptions import (
    NotFaceBipartiteException,
    NotOrientableException,
    UsageException,
)
from flagwalk.core.logging import get_logger
from flagwalk.core.parallel import parallel_map
from flagwalk.models.automorphism import (
    AutGroup,
    Automorphism,
    GroupSelector,
    SubgroupSpec,
    SymmetryClass,
    SymmetryTag,
)
from flagwalk.models.flag_system import FlagSystem
from flagwalk.models.permutation import OrbitPartition, Permutation
from flagwalk.services.flagmap import MapService, connection_lists, propagate
from flagwalk.services.permgroup import compose, inverse, orbits_under

logger = get_logger(__name__)

_TWO_ORBIT_TAGS = {
    (False, False): SymmetryTag.CHIRAL,
    (True, False): SymmetryTag.CLASS_2_0,
    (False, True): SymmetryTag.CLASS_2_1,
    (True, True): SymmetryTag.CLASS_2_01,
}


class AutGroupService:
    """
    Service for the symmetry group of a map and its subgroups.

    Aut(M) acts freely on flags, so every automorphism is fixed by the image of
    one base flag and is found by propagation from that single choice.
    """

    def __init__(self, flag_system: FlagSystem, map_service: MapService | None = None) -> None:
        """
        Initialize the service.

        Args:
            flag_system: A valid map
            map_service: Existing derived-structure service to share
        """
        self.maps = map_service or MapService(flag_system)
        self.map = self.maps.map
        self._conns = connection_lists(self.map)

    def extend_automorphism(self, source: int, target: int) -> Automorphism | None:
        """
        The automorphism sending ``source`` to ``target``, if there is one.

        Args:
            source: Flag to anchor
            target: Required image of ``source``

        Returns:
            The unique automorphism, or None when propagation contradicts itself
        """
        mapping = propagate(self._conns, self._conns, source, target)
        return Automorphism(Permutation(mapping)) if mapping is not None else None

    @cached_property
    def group(self) -> AutGroup:
        """Every automorphism, found by extending the base flag to each flag in turn."""
        base = 0
        candidates = parallel_map(
            lambda target: self.extend_automorphism(base, target), range(self.map.n_flags)
        )
        elements = tuple(g for g in candidates if g is not None)
        logger.info("%s: |Aut| = %d", self.map.name, len(elements))
        return AutGroup(elements, base_flag=base)

    def automorphism_group(self) -> AutGroup:
        """All automorphisms, ordered by the image of flag 0."""
        return self.group

    def _stabilizer(self, colour: tuple[int, ...] | list[int]) -> AutGroup:
        full = self.group
        base_colour = colour[full.base_flag]
        elements = tuple(g for g in full if colour[g(full.base_flag)] == base_colour)
        return AutGroup(elements, base_flag=full.base_flag)

    @cached_property
    def _rotation_group(self) -> AutGroup | None:
        colour = self.maps.orientation_colouring
        return self._stabilizer(colour) if colour is not None else None

    def rotation_subgroup(self) -> AutGroup:
        """
        Aut+(M): the orientation-preserving automorphisms.

        Raises:
            NotOrientableException: If the map has no orientation
        """
        if self._rotation_group is None:
            raise NotOrientableException(f"Map {self.map.name or ''} is not orientable".strip())
        return self._rotation_group

    @cached_property
    def face_colouring(self) -> tuple[int, ...] | None:
        """
        2-colouring of faces with faces adjacent across an edge coloured apart.

        Returns:
            Colour per face id, the face of flag 0 coloured 0; None when impossible
        """
        fs = self.maps.face_structure
        face_id = fs.faces.orbit_id
        graph = nx.Graph()
        graph.add_nodes_from(range(fs.n_faces))
        for x, y in enumerate(self.map.r2.images.tolist()):
            if face_id[x] == face_id[y]:
                return None
            graph.add_edge(face_id[x], face_id[y])
        try:
            colour = nx.bipartite.color(graph)
        except nx.NetworkXError:
            return None
        flip = colour[face_id[0]]
        return tuple(colour[f] ^ flip for f in range(fs.n_faces))

    @property
    def is_face_bipartite(self) -> bool:
        """True when faces admit two colours with adjacent faces differing."""
        return self.face_colouring is not None

    @cached_property
    def _face_bipartite_group(self) -> AutGroup | None:
        colour = self.face_colouring
        if colour is None:
            return None
        face_id = self.maps.face_structure.faces.orbit_id
        return self._stabilizer([colour[f] for f in face_id])

    def face_bipartite_subgroup(self) -> AutGroup:
        """
        Aut#(M): the stabilizer of each colour class of faces.

        Raises:
            NotFaceBipartiteException: If no proper 2-colouring of faces exists
        """
        if self._face_bipartite_group is None:
            raise NotFaceBipartiteException()
        return self._face_bipartite_group

    def _check_subgroup(self, elements: tuple[Automorphism, ...]) -> AutGroup:
        if not elements:
            raise UsageException("Custom subgroup needs at least the identity")
        conns = self.map.connections
        for g in elements:
            if g.perm.size != self.map.n_flags or any(
                compose(g.perm, r) != compose(r, g.perm) for r in conns
            ):
                raise UsageException("Custom element is not an automorphism of the map")
        group = AutGroup(elements, base_flag=0)
        if any(inverse(g.perm) not in group for g in elements):
            raise UsageException("Custom elements are not closed under inverses")
        for g in elements:
            for h in elements:
                if compose(g.perm, h.perm) not in group:
                    raise UsageException("Custom elements are not closed under composition")
        return group

    def resolve(self, spec: SubgroupSpec) -> AutGroup:
        """
        Materialize the subgroup a selector names.

        Args:
            spec: Subgroup selector

        Returns:
            The subgroup as an element list

        Raises:
            NotOrientableException: Rotation subgroup on a non-orientable map
            NotFaceBipartiteException: Chromatic subgroup on a map without face 2-colouring
            UsageException: Custom elements that do not form a subgroup
        """
        selector = GroupSelector(spec.selector)
        if selector is GroupSelector.FULL:
            return self.group
        if selector is GroupSelector.ROTATION:
            return self.rotation_subgroup()
        if selector is GroupSelector.FACE_BIPARTITE:
            return self.face_bipartite_subgroup()
        return self._check_subgroup(spec.elements)

    def flag_orbits(self, spec: SubgroupSpec | None = None) -> OrbitPartition:
        """
        Orbits of a subgroup on flags.

        Args:
            spec: Subgroup selector, full group by default

        Returns:
            Partition of the flags numbered by least flag id
        """
        group = self.resolve(spec or SubgroupSpec.full())
        return orbits_under(group.perms(), self.map.n_flags)

    def dart_orbits(self, spec: SubgroupSpec | None = None) -> OrbitPartition:
        """Orbits of the subgroup on darts, numbered by least dart id."""
        group = self.resolve(spec or SubgroupSpec.full())
        flag_level = orbits_under(group.perms() + [self.map.r2], self.map.n_flags)
        darts = self.maps.face_structure.darts
        components = [sorted({darts.orbit_id[x] for x in orbit}) for orbit in flag_level.orbits]
        return OrbitPartition.from_components(darts.count, components)

    def is_dart_transitive(self, spec: SubgroupSpec | None = None) -> bool:
        """True when the subgroup has a single orbit on darts."""
        return self.dart_orbits(spec).count == 1

    def _orbit_count_with(self, extra: list[Permutation]) -> int:
        return orbits_under(self.group.perms() + extra, self.map.n_flags).count

    @property
    def is_vertex_transitive(self) -> bool:
        return self._orbit_count_with([self.map.r1, self.map.r2]) == 1

    @property
    def is_edge_transitive(self) -> bool:
        return self._orbit_count_with([self.map.r0, self.map.r2]) == 1

    @property
    def is_face_transitive(self) -> bool:
        return self._orbit_count_with([self.map.r0, self.map.r1]) == 1

    def is_reflexion(self, g: Automorphism) -> bool:
        """True when ``g`` sends some flag to one of its neighbours."""
        images = g.perm.images
        return any(bool(np.any(images == r.images)) for r in self.map.connections)

    def is_rotation(self, g: Automorphism) -> bool:
        """
        True when ``g`` preserves orientation.

        Raises:
            NotOrientableException: If the map has no orientation
        """
        return g in self.rotation_subgroup()

    @cached_property
    def _symmetry_class(self) -> SymmetryClass:
        orbits = self.flag_orbits()
        k = orbits.count
        if not self.is_dart_transitive():
            return SymmetryClass(SymmetryTag.NOT_DART_TRANSITIVE, k)
        if k == 1:
            return SymmetryClass(SymmetryTag.REFLEXIBLE, 1)
        orbit_id = np.asarray(orbits.orbit_id)
        same = tuple(
            bool(np.all(orbit_id == orbit_id[self.map.connection(i).images])) for i in (0, 1)
        )
        tag = _TWO_ORBIT_TAGS[same]
        logger.debug("%s: two flag orbits, class %s", self.map.name, tag.value)
        return SymmetryClass(tag, k)

    def symmetry_class(self) -> SymmetryClass:
        """
        Reflexible, one of the four two-orbit classes, or not dart-transitive.

        Returns:
            Symmetry class with the number of flag orbits under Aut(M)
        """
        return self._symmetry_class
