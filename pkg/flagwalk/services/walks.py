"""Flag j-holes and j-Petrie paths, their consistency and orbit enumeration."""

from collections.abc import Sequence
from dataclasses import replace

import numpy as np

from flagwalk.core.exceptions import (
    NotDartTransitiveException,
    TheoremViolationException,
    WalkParameterException,
)
from flagwalk.core.logging import get_logger
from flagwalk.core.parallel import parallel_map
from flagwalk.models.automorphism import AutGroup, Automorphism, SubgroupSpec
from flagwalk.models.flag_system import FlagSystem
from flagwalk.models.permutation import Permutation
from flagwalk.models.walk import (
    FlagWalk,
    Trajectory,
    WalkKind,
    WalkKindTag,
    WalkOrbitReport,
    WalkOrbitRow,
)
from flagwalk.services.autgroup import AutGroupService
from flagwalk.services.permgroup import compose, compose_all, cycle_of, order, power

logger = get_logger(__name__)


def cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when ``b`` is a rotation of ``a``; entries of ``a`` are distinct."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        start = list(b).index(a[0])
    except ValueError:
        return False
    return tuple(b[start:]) + tuple(b[:start]) == tuple(a)


class WalkService:
    """
    Service for closed flag-walks of an equivelar map.

    The j-hole generator is ``r0 r1 (r2 r1)^(j-1)`` and the j-Petrie generator
    is ``r0 (r2 r1)^j``, both read left to right.
    """

    def __init__(self, flag_system: FlagSystem, aut_service: AutGroupService | None = None) -> None:
        """
        Initialize the service.

        Args:
            flag_system: A valid map
            aut_service: Existing group service to share
        """
        self.auts = aut_service or AutGroupService(flag_system)
        self.maps = self.auts.maps
        self.map = self.maps.map
        self._generators: dict[WalkKind, Permutation] = {}

    @property
    def valence(self) -> int:
        return self.maps.valence

    def kinds(self) -> list[WalkKind]:
        """Every (tag, j) with 1 <= j <= q-1, ordered by j and then hole before Petrie."""
        return [
            WalkKind(tag, j)
            for j in range(1, self.valence)
            for tag in (WalkKindTag.HOLE, WalkKindTag.PETRIE)
        ]

    def generator(self, kind: WalkKind) -> Permutation:
        """
        The flag permutation that advances walks of ``kind`` by one step.

        Raises:
            NotEquivelarException: If vertex valences differ
            WalkParameterException: If j is outside 1..q-1
        """
        q = self.valence
        if not 1 <= kind.j <= q - 1:
            raise WalkParameterException(kind.j, q)
        cached = self._generators.get(kind)
        if cached is not None:
            return cached

        m = self.map
        step = compose(m.r2, m.r1)
        if kind.tag is WalkKindTag.HOLE:
            perm = compose_all([m.r0, m.r1, power(step, kind.j - 1)])
        else:
            perm = compose(m.r0, power(step, kind.j))
        self._generators[kind] = perm
        return perm

    def hole_permutation(self, j: int) -> Permutation:
        """The j-hole generator ``r0 r1 (r2 r1)^(j-1)``."""
        return self.generator(WalkKind(WalkKindTag.HOLE, j))

    def petrie_permutation(self, j: int) -> Permutation:
        """The j-Petrie generator ``r0 (r2 r1)^j``."""
        return self.generator(WalkKind(WalkKindTag.PETRIE, j))

    def walk_at(self, flag: int, kind: WalkKind) -> FlagWalk:
        """
        The walk of ``kind`` through ``flag``.

        Args:
            flag: Base flag
            kind: Hole or Petrie path and its j

        Returns:
            The cycle of the generator through ``flag``, without a shunt
        """
        flags = tuple(cycle_of(self.generator(kind), flag))
        return FlagWalk(base=flag, kind=kind, flags=flags, valence=self.valence)

    def partner(self, w: FlagWalk) -> FlagWalk:
        """Apply r2 to every flag; a j-walk becomes a (q-j)-walk of the same kind."""
        r2 = self.map.r2
        flags = tuple(r2(x) for x in w.flags)
        kind = WalkKind(w.kind.tag, w.valence - w.kind.j)
        return FlagWalk(base=flags[0], kind=kind, flags=flags, valence=w.valence)

    def reverse(self, w: FlagWalk) -> FlagWalk:
        """Traverse backwards: r0 images for holes, r0 r2 images for Petrie paths."""
        if w.kind.tag is WalkKindTag.HOLE:
            conn = self.map.r0
        else:
            conn = compose(self.map.r0, self.map.r2)
        flags = tuple(conn(x) for x in reversed(w.flags))
        return FlagWalk(base=flags[0], kind=w.kind, flags=flags, valence=w.valence)

    def interior(self, w: FlagWalk) -> frozenset[int]:
        """Flags of the walk together with those of its reverse."""
        return frozenset(w.flags) | frozenset(self.reverse(w).flags)

    def _shunt(self, w: FlagWalk, group: AutGroup) -> Automorphism | None:
        g = self.auts.extend_automorphism(w.base, w.flags[1 % w.length])
        if g is None or g not in group:
            return None
        if order(g.perm) != w.length:
            return None
        return g

    def consistency(self, w: FlagWalk, spec: SubgroupSpec | None = None) -> Automorphism | None:
        """
        The shunt of ``w`` within the chosen subgroup.

        Args:
            w: Walk built by ``walk_at``
            spec: Subgroup selector, full group by default

        Returns:
            The automorphism advancing ``w`` by one step, with order equal to the
            walk length, or None when no such element lies in the subgroup
        """
        return self._shunt(w, self.auts.resolve(spec or SubgroupSpec.full()))

    def with_shunt(self, w: FlagWalk, spec: SubgroupSpec | None = None) -> FlagWalk | None:
        """
        Attach the shunt to ``w``.

        Args:
            w: Walk built by ``walk_at``
            spec: Subgroup selector, full group by default

        Returns:
            A copy of ``w`` carrying its shunt, or None when ``w`` is not consistent
        """
        shunt = self.consistency(w, spec)
        return replace(w, shunt=shunt) if shunt is not None else None

    def _maps_onto(self, w: FlagWalk, group: AutGroup, targets: list[tuple[int, ...]]) -> bool:
        source = np.asarray(w.flags, dtype=np.int64)
        for g in group:
            image = g.perm.images[source].tolist()
            if any(cyclic_equal(target, image) for target in targets):
                return True
        return False

    def _is_flag_symmetric(self, w: FlagWalk, group: AutGroup) -> bool:
        return self._maps_onto(w, group, [self.reverse(w).flags])

    def _is_symmetric(self, w: FlagWalk, group: AutGroup) -> bool:
        targets = [self.reverse(w).flags]
        if 2 * w.kind.j == w.valence:
            targets.append(self.reverse(self.partner(w)).flags)
        return self._maps_onto(w, group, targets)

    def is_flag_symmetric(self, w: FlagWalk, spec: SubgroupSpec | None = None) -> bool:
        """True when some group element carries ``w`` onto its reverse as a cyclic flag sequence."""
        return self._is_flag_symmetric(w, self.auts.resolve(spec or SubgroupSpec.full()))

    def is_symmetric_walk(self, w: FlagWalk, spec: SubgroupSpec | None = None) -> bool:
        """
        True when some group element reverses ``w``.

        For ``j = q/2`` the reverse of the partner walk is accepted as well, since
        it induces the same dart sequence as the reverse of ``w``.
        """
        return self._is_symmetric(w, self.auts.resolve(spec or SubgroupSpec.full()))

    def is_line(self, w: FlagWalk) -> bool:
        """
        Whether ``w`` runs along a line.

        Args:
            w: Any walk

        Returns:
            True when ``q`` is even, ``j = q/2`` and the q/2-hole and q/2-Petrie
            path at the base of ``w`` visit the same edges
        """
        q = w.valence
        if q % 2 or 2 * w.kind.j != q:
            return False
        edge_id = self.maps.face_structure.edges.orbit_id
        half = q // 2
        hole = self.walk_at(w.base, WalkKind(WalkKindTag.HOLE, half))
        petrie = self.walk_at(w.base, WalkKind(WalkKindTag.PETRIE, half))
        return {edge_id[x] for x in hole.flags} == {edge_id[x] for x in petrie.flags}

    def _orbit_row(
        self, group: AutGroup, flag_orbit: int, representative: int, kind: WalkKind
    ) -> WalkOrbitRow | None:
        w = self.walk_at(representative, kind)
        shunt = self._shunt(w, group)
        if shunt is None:
            return None
        w = replace(w, shunt=shunt)
        row = WalkOrbitRow(
            flag_orbit=flag_orbit,
            kind=kind,
            length=w.length,
            symmetric=self._is_symmetric(w, group),
            flag_symmetric=self._is_flag_symmetric(w, group),
            is_line=self.is_line(w),
            representative=w,
            orbit_size=group.order // w.length,
            gamma_order=order(self.generator(kind)),
        )
        if row.length_mismatch:
            logger.warning(
                "%s %s at flag %d: cycle length %d differs from generator order %d",
                self.map.name,
                kind,
                representative,
                row.length,
                row.gamma_order,
            )
        return row

    def enumerate_consistent_orbits(self, spec: SubgroupSpec | None = None) -> WalkOrbitReport:
        """
        One row per orbit of consistent flag-walks under the chosen subgroup.

        Orbits are keyed by (flag orbit of the base, j, kind); each triple is
        tested once at the least flag of its flag orbit.

        Args:
            spec: Subgroup selector, full group by default

        Returns:
            Report with rows sorted by (flag_orbit, j, kind)

        Raises:
            NotDartTransitiveException: If the subgroup is not transitive on darts
            TheoremViolationException: If the row count is not 2(q-1)
        """
        spec = spec or SubgroupSpec.full()
        group = self.auts.resolve(spec)
        dart_orbits = self.auts.dart_orbits(spec)
        if dart_orbits.count != 1:
            raise NotDartTransitiveException(dart_orbits.count)

        flag_orbits = self.auts.flag_orbits(spec)
        tasks = [
            (index, orbit[0], kind)
            for index, orbit in enumerate(flag_orbits.orbits)
            for kind in self.kinds()
        ]
        results = parallel_map(lambda task: self._orbit_row(group, *task), tasks)
        rows = sorted(
            (row for row in results if row is not None),
            key=lambda row: (row.flag_orbit, row.kind.j, row.kind.tag.value),
        )
        report = WalkOrbitReport(
            valence=self.valence,
            group_order=group.order,
            selector=spec.selector,
            rows=tuple(rows),
        )
        logger.info(
            "%s: %d consistent walk orbits under %s (expected %d)",
            self.map.name,
            len(report),
            spec.selector.value,
            report.expected_rows,
        )
        if len(report) != report.expected_rows:
            raise TheoremViolationException(
                f"Found {len(report)} orbits of consistent walks, expected {report.expected_rows}",
                witness={
                    "map": self.map.name,
                    "group_order": group.order,
                    "rows": [[row.flag_orbit, row.kind.tag.value, row.kind.j] for row in rows],
                },
            )
        return report

    def _match_kind(self, cycle: list[int]) -> WalkKind | None:
        nxt = cycle[1 % len(cycle)]
        for kind in self.kinds():
            gamma = self.generator(kind)
            if gamma(cycle[0]) == nxt and cycle_of(gamma, cycle[0]) == cycle:
                return kind
        return None

    def brute_force_consistent_walks(self, spec: SubgroupSpec | None = None) -> list[Trajectory]:
        """
        Every trajectory of a group element that closes up as a flag-walk.

        A cycle of ``g`` is a closed flag-walk when each flag's 0-neighbour
        shares a vertex with the next flag and the step does not turn back
        along the same edge-end (the next flag is neither ``x^0`` nor
        ``x^02``). Each such cycle is matched against
        the hole and Petrie generators; ``kind`` is None when none fits.

        Args:
            spec: Subgroup selector, full group by default

        Returns:
            Trajectories in group order, one per closing cycle
        """
        group = self.auts.resolve(spec or SubgroupSpec.full())
        vertex_id = self.maps.face_structure.vertices.orbit_id
        r0, r2 = self.map.r0.tolist(), self.map.r2.tolist()

        def steps_on(x: int, nxt: int) -> bool:
            return vertex_id[r0[x]] == vertex_id[nxt] and nxt not in (r0[x], r2[r0[x]])

        trajectories = []
        for g in group:
            perm = g.perm
            seen: set[int] = set()
            g_order = order(perm)
            for flag in range(self.map.n_flags):
                if flag in seen:
                    continue
                cycle = cycle_of(perm, flag)
                seen.update(cycle)
                if len(cycle) != g_order:
                    continue
                if all(steps_on(x, cycle[(i + 1) % len(cycle)]) for i, x in enumerate(cycle)):
                    trajectories.append(Trajectory(tuple(cycle), g, self._match_kind(cycle)))
        logger.debug("%s: %d closing trajectories", self.map.name, len(trajectories))
        return trajectories
