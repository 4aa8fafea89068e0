"""Consistent cyclets on the skeleton, counted independently of the walk machinery."""

from collections import Counter

from flagwalk.core.exceptions import NotDartTransitiveException, NotEquivelarException
from flagwalk.core.logging import get_logger
from flagwalk.core.parallel import parallel_map
from flagwalk.models.automorphism import Automorphism, SubgroupSpec
from flagwalk.models.cyclet import CycletOrbit, CycletReport, DartCyclet
from flagwalk.models.flag_system import FlagSystem
from flagwalk.models.permutation import Permutation
from flagwalk.models.walk import FlagWalk
from flagwalk.services.autgroup import AutGroupService
from flagwalk.services.permgroup import cycle_of, order, orbits_under

logger = get_logger(__name__)


class CycletService:
    """
    Service for directed cyclets of the skeleton pseudograph.

    Works on darts only: the group acts through its induced dart permutations
    and closure is checked with the skeleton's initial and reverse maps.
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

    def induced_dart_action(self, g: Automorphism) -> Permutation:
        """
        The permutation ``g`` induces on darts of the skeleton.

        Args:
            g: Automorphism of the map

        Returns:
            Dart permutation; each dart goes where its least flag is sent
        """
        darts = self.maps.face_structure.darts
        return Permutation([darts.orbit_id[g(orbit[0])] for orbit in darts.orbits])

    def induced_group(self, spec: SubgroupSpec | None = None) -> list[Permutation]:
        """Distinct dart permutations induced by the subgroup, in group order."""
        group = self.auts.resolve(spec or SubgroupSpec.full())
        return list(dict.fromkeys(self.induced_dart_action(g) for g in group))

    def is_sequential(self, first: int, second: int) -> bool:
        """``second`` leaves where ``first`` ends and does not reverse it."""
        sk = self.maps.skeleton
        return sk.terminal(first) == sk.initial[second] and sk.reverse[first] != second

    def _closes(self, darts: list[int]) -> bool:
        return all(
            self.is_sequential(d, darts[(i + 1) % len(darts)]) for i, d in enumerate(darts)
        )

    def _skeleton_valence(self) -> int:
        counts = Counter(self.maps.skeleton.initial)
        if len(set(counts.values())) != 1:
            raise NotEquivelarException(list(counts.values()))
        return next(iter(counts.values()))

    def _cyclets_of(self, sigma: Permutation) -> list[DartCyclet]:
        found = []
        sigma_order = order(sigma)
        seen: set[int] = set()
        for dart in range(sigma.size):
            if dart in seen:
                continue
            darts = cycle_of(sigma, dart)
            seen.update(darts)
            if len(darts) == sigma_order and self._closes(darts):
                cyclet = DartCyclet(tuple(darts), shunt=sigma)
                found.append(DartCyclet(cyclet.canonical(), shunt=sigma))
        return found

    @staticmethod
    def orbit_key(cyclet: DartCyclet, perms: list[Permutation]) -> tuple[int, ...]:
        """Least canonical image of ``cyclet`` under ``perms``; equal keys mean one orbit."""
        return min(
            DartCyclet(tuple(p(d) for d in cyclet.darts)).canonical() for p in perms
        )

    def consistent_cyclets(self, spec: SubgroupSpec | None = None) -> CycletReport:
        """
        Orbits of consistent cyclets under the induced dart action.

        A cyclet is consistent when some induced element of order equal to its
        length advances it by one dart.

        Args:
            spec: Subgroup selector, full group by default

        Returns:
            Orbits sorted by key, with representatives and sizes

        Raises:
            NotDartTransitiveException: If the induced action has several dart orbits
            NotEquivelarException: If skeleton vertices differ in valence
        """
        perms = self.induced_group(spec)
        n_darts = self.maps.skeleton.n_darts
        dart_orbits = orbits_under(perms, n_darts)
        if dart_orbits.count != 1:
            raise NotDartTransitiveException(dart_orbits.count)
        q = self._skeleton_valence()

        cyclets: dict[tuple[int, ...], DartCyclet] = {}
        for found in parallel_map(self._cyclets_of, perms):
            for cyclet in found:
                cyclets.setdefault(cyclet.darts, cyclet)

        members: dict[tuple[int, ...], list[DartCyclet]] = {}
        for darts in sorted(cyclets):
            cyclet = cyclets[darts]
            members.setdefault(self.orbit_key(cyclet, perms), []).append(cyclet)
        orbits = tuple(
            CycletOrbit(key=key, representative=group[0], size=len(group))
            for key, group in sorted(members.items())
        )
        logger.info(
            "%s: %d consistent cyclets in %d orbits (q - 1 = %d)",
            self.map.name,
            len(cyclets),
            len(orbits),
            q - 1,
        )
        return CycletReport(valence=q, group_order=len(perms), orbits=orbits)

    def walk_to_cyclet(self, w: FlagWalk) -> DartCyclet | None:
        """
        The dart sequence a walk induces, when consecutive darts are sequential.

        Partner walks induce the same cyclet.
        """
        dart_id = self.maps.face_structure.darts.orbit_id
        darts = [dart_id[x] for x in w.flags]
        if not self._closes(darts):
            return None
        shunt = self.induced_dart_action(w.shunt) if w.shunt is not None else None
        return DartCyclet(tuple(darts), shunt=shunt)
