"""Edge-set classification of consistent walks: cycles, beads, bracelets and twinings."""

from collections import defaultdict
from functools import cache

import networkx as nx

from flagwalk.core.exceptions import TheoremViolationException
from flagwalk.core.logging import get_logger
from flagwalk.core.parallel import parallel_map
from flagwalk.models.automorphism import SubgroupSpec
from flagwalk.models.classification import (
    Bead,
    BeadParity,
    Bracelet,
    Cycle,
    EdgeSetClassification,
    EdgeSetLabel,
    EdgeVisitTrace,
    ProofCase,
    Twining,
)
from flagwalk.models.flag_system import FlagSystem
from flagwalk.models.walk import FlagWalk, WalkKindTag, WalkOrbitRow
from flagwalk.services.walks import WalkService

logger = get_logger(__name__)


def is_cycle_edges(t: EdgeVisitTrace) -> bool:
    """
    True when the edge set of the walk is a cycle of length at least 2.

    With ``l`` distinct edges, the first ``l`` steps must repeat no vertex and
    no edge, and the walk must go around that cycle ``length / l`` times.
    """
    ell = t.distinct_edges
    if ell < 2 or t.length % ell:
        return False
    if len(set(t.vertices[:ell])) != ell or len(set(t.edges[:ell])) != ell:
        return False
    return all(
        t.edges[i] == t.edges[i % ell] and t.vertices[i] == t.vertices[i % ell]
        for i in range(ell, t.length)
    )


class ClassifyService:
    """
    Structural tests on the edge set of a consistent walk.

    Positions of edges around a vertex are read from its rotation; an edge set
    is evenly spaced at a vertex when its positions form one full residue
    class modulo some divisor ``d`` of the valence.
    """

    def __init__(self, flag_system: FlagSystem, walk_service: WalkService | None = None) -> None:
        """
        Initialize the service.

        Args:
            flag_system: A valid equivelar map
            walk_service: Existing walk service to share
        """
        self.walks = walk_service or WalkService(flag_system)
        self.auts = self.walks.auts
        self.maps = self.walks.maps
        self.map = self.maps.map
        self._positions = cache(self._positions_at)

    def _positions_at(self, v: int) -> dict[int, tuple[int, ...]]:
        positions: dict[int, list[int]] = defaultdict(list)
        for index, e in enumerate(self.maps.vertex_rotation(v)):
            positions[e].append(index)
        return {e: tuple(p) for e, p in positions.items()}

    def trace(self, w: FlagWalk) -> EdgeVisitTrace:
        """
        Edge and vertex sequences of ``w`` and where it stands after ``l`` steps.

        ``l`` is the number of distinct edges. The flag reached is compared with
        the base, its 02-neighbour and its 2-neighbour, all taken in hole form
        (for Petrie paths the 0-connection is r0 r2). Reaching the
        0-neighbour is reported as FORBIDDEN.
        """
        fs = self.maps.face_structure
        edges = tuple(fs.edges.orbit_id[x] for x in w.flags)
        vertices = tuple(fs.vertices.orbit_id[x] for x in w.flags)

        r0, r2 = self.map.r0, self.map.r2
        base = w.base
        reached = w.flags[len(set(edges)) % w.length]
        if w.kind.tag is WalkKindTag.HOLE:
            opposite, forbidden = r2(r0(base)), r0(base)
        else:
            opposite, forbidden = r0(base), r2(r0(base))
        if reached == base:
            case = ProofCase.IDENTITY
        elif reached == opposite:
            case = ProofCase.OPPOSITE
        elif reached == r2(base):
            case = ProofCase.ACROSS
        elif reached == forbidden:
            case = ProofCase.FORBIDDEN
        else:
            case = ProofCase.UNRESOLVED
        return EdgeVisitTrace(
            edges=edges, vertices=vertices, kind=w.kind, valence=w.valence, proof_case=case
        )

    def _spacing(self, v: int, edges: set[int] | frozenset[int]) -> int | None:
        """``d`` when the edges sit at ``v`` on one full residue class mod ``d``, else None."""
        positions_at = self._positions(v)
        positions = sorted(p for e in edges for p in positions_at.get(e, ()))
        q = self.maps.valences[v]
        count = len(positions)
        if count < 2 or q % count:
            return None
        d = q // count
        if all(p - positions[0] == i * d for i, p in enumerate(positions)):
            return d
        return None

    def is_bead(self, t: EdgeVisitTrace) -> Bead | None:
        """
        Parallel edges on two vertices, evenly spaced at both ends.

        Returns:
            The bead with its spacing ``d`` and parity, or None
        """
        edge_set = t.edge_set
        ends = {self.maps.edge_endpoints[e] for e in edge_set}
        if len(edge_set) < 2 or len(ends) != 1:
            return None
        u, v = ends.pop()
        if u == v:
            return None
        d = self._spacing(u, edge_set)
        if d is None or self._spacing(v, edge_set) != d:
            return None
        parity = BeadParity.ODD if len(edge_set) % 2 else BeadParity.EVEN
        return Bead(d=d, parity=parity, edge_count=len(edge_set))

    def _residue_classes(self, v: int, edges: frozenset[int], d: int) -> set[frozenset[int]] | None:
        q = self.maps.valences[v]
        positions_at = self._positions(v)
        classes: dict[int, set[int]] = defaultdict(set)
        for e in edges:
            for p in positions_at[e]:
                classes[p % d].add(e)
        if any(len(members) != q // d for members in classes.values()):
            return None
        return {frozenset(members) for members in classes.values()}

    def _two_vertex_bracelet(self, u: int, v: int, edges: frozenset[int]) -> Bracelet | None:
        q = self.maps.valences[u]
        for d in range(1, q // 2 + 1):
            if q % d:
                continue
            at_u = self._residue_classes(u, edges, d)
            if at_u is None or len(at_u) < 2:
                continue
            if at_u == self._residue_classes(v, edges, d):
                return Bracelet(d=d, bead_count=len(at_u))
        return None

    def is_bracelet(self, t: EdgeVisitTrace) -> Bracelet | None:
        """
        A union of d-beads, one fixed ``d``, on the vertices of a cycle.

        On two vertices the edge set must split into at least two beads that
        agree at both ends.

        Returns:
            The bracelet with ``d`` and the number of beads, or None
        """
        edge_set = t.edge_set
        classes: dict[tuple[int, int], set[int]] = defaultdict(set)
        for e in edge_set:
            classes[self.maps.edge_endpoints[e]].add(e)
        if any(u == v for u, v in classes):
            return None

        vertices = set(t.vertices)
        if len(vertices) == 2 and len(classes) == 1:
            u, v = next(iter(classes))
            return self._two_vertex_bracelet(u, v, edge_set)
        if len(vertices) < 3:
            return None

        graph = nx.Graph(list(classes))
        if (
            graph.number_of_nodes() != len(vertices)
            or graph.number_of_edges() != len(vertices)
            or any(degree != 2 for _, degree in graph.degree())
            or not nx.is_connected(graph)
        ):
            return None

        spacings = set()
        for (u, v), members in classes.items():
            d = self._spacing(u, members)
            if d is None or self._spacing(v, members) != d:
                return None
            spacings.add(d)
        if len(spacings) != 1:
            return None
        return Bracelet(d=spacings.pop(), bead_count=len(classes))

    def _swapping_symmetry(self, vertices: tuple[int, ...], edges: tuple[int, ...]) -> bool:
        fs = self.maps.face_structure
        vertex_rep = [fs.vertices.orbits[v][0] for v in vertices]
        edge_rep = [fs.edges.orbits[e][0] for e in edges]
        k = len(vertices)
        vertex_id, edge_id = fs.vertices.orbit_id, fs.edges.orbit_id
        for g in self.auts.group:
            if all(vertex_id[g(x)] == v for x, v in zip(vertex_rep, vertices)) and all(
                edge_id[g(x)] == edges[(i + k) % len(edges)] for i, x in enumerate(edge_rep)
            ):
                return True
        return False

    def is_twining(self, t: EdgeVisitTrace) -> Twining | None:
        """
        A doubled closed walk of length 2k.

        Requires k distinct vertices repeated once in order, ``e_i`` and
        ``e_{i+k}`` distinct with the same ends, uniform subtend values ``d``
        at ``v_i`` and ``d'`` at ``v_{i+1}``, and an automorphism fixing every
        ``v_i`` while swapping every ``e_i`` with ``e_{i+k}``.

        Returns:
            The twining with both subtend values and the matching sign, or None
        """
        m = t.length
        if m < 4 or m % 2:
            return None
        k = m // 2
        vs, es = t.vertices, t.edges
        if len(set(vs[:k])) != k or any(vs[i + k] != vs[i] for i in range(k)):
            return None
        if any(es[i] == es[i + k] for i in range(k)):
            return None
        for i in range(k):
            ends = {vs[i], vs[(i + 1) % m]}
            if set(self.maps.edge_endpoints[es[i]]) != ends:
                return None
            if set(self.maps.edge_endpoints[es[i + k]]) != ends:
                return None

        at_start = set.intersection(*(self.maps.subtend(vs[i], es[i], es[i + k]) for i in range(k)))
        at_end = set.intersection(
            *(self.maps.subtend(vs[(i + 1) % m], es[i], es[i + k]) for i in range(k))
        )
        if not at_start or not at_end:
            return None
        if not self._swapping_symmetry(vs[:k], es):
            return None

        d, d_prime = min(at_start), min(at_end)
        q, j = t.valence, t.kind.j
        sign = None
        for candidate, value in (("+", q - 2 * j + d), ("-", q - 2 * j - d)):
            if value % q in {d_prime, (q - d_prime) % q}:
                sign = candidate
                break
        return Twining(d=d, d_prime=d_prime, half_length=k, sign=sign)

    def classify(self, w: FlagWalk) -> EdgeSetClassification:
        """
        Every label that fits the edge set of ``w``, with the primary one first.

        Args:
            w: Consistent walk

        Returns:
            Labels in the order cycle, bead, bracelet, twining

        Raises:
            TheoremViolationException: If a map with two or more vertices leaves
                the walk without a label
        """
        t = self.trace(w)
        labels: list[EdgeSetLabel] = []
        if is_cycle_edges(t):
            labels.append(Cycle(length=t.distinct_edges))
        for test in (self.is_bead, self.is_bracelet, self.is_twining):
            label = test(t)
            if label is not None:
                labels.append(label)

        one_vertex = self.maps.face_structure.n_vertices == 1
        if not labels and not one_vertex:
            raise TheoremViolationException(
                "Consistent walk has no edge-set label",
                witness={
                    "map": self.map.name,
                    "kind": str(w.kind),
                    "flags": list(w.flags),
                    "edges": list(t.edges),
                    "vertices": list(t.vertices),
                    "proof_case": t.proof_case.value,
                },
            )
        if t.proof_case in (ProofCase.FORBIDDEN, ProofCase.UNRESOLVED):
            logger.warning("%s %s: unexpected proof case %s", self.map.name, w.kind, t.proof_case)
        return EdgeSetClassification(
            labels=tuple(labels),
            primary=labels[0] if labels else None,
            is_line=self.walks.is_line(w),
            one_vertex_map=one_vertex,
            trace=t,
        )

    def classify_orbits(
        self, spec: SubgroupSpec | None = None
    ) -> list[tuple[WalkOrbitRow, EdgeSetClassification]]:
        """
        Classify the representative of every consistent walk orbit.

        Args:
            spec: Subgroup selector, full group by default

        Returns:
            Pairs of orbit row and classification, in report row order

        Raises:
            NotDartTransitiveException: If the subgroup is not transitive on darts
            TheoremViolationException: If a walk on a map with two or more
                vertices gets no label
        """
        report = self.walks.enumerate_consistent_orbits(spec)
        results = parallel_map(lambda row: self.classify(row.representative), report.rows)
        return list(zip(report.rows, results))
