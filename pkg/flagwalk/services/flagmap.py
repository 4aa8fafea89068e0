"""Flag-system validation, derived structure, operators and mapfile I/O."""

from collections.abc import Sequence
from functools import cached_property
from typing import Any

import networkx as nx
import numpy as np
from pydantic import ValidationError

from flagwalk.config import settings
from flagwalk.core.exceptions import (
    MapfileFormatException,
    MapValidationException,
    NotEquivelarException,
    validation_errors,
)
from flagwalk.core.logging import get_logger
from flagwalk.models.flag_system import (
    Axiom,
    AxiomViolation,
    FaceStructure,
    FlagSystem,
    GenusReport,
    Skeleton,
    ValidationReport,
)
from flagwalk.models.permutation import Permutation
from flagwalk.schemas.mapfile import MapfileSchema
from flagwalk.services.permgroup import compose, orbits_under

logger = get_logger(__name__)


def validate(m: FlagSystem) -> ValidationReport:
    """
    Check every map axiom and collect one witness flag per violated axiom.

    Args:
        m: Flag system to check

    Returns:
        Report listing all violations; empty when the map is valid
    """
    n = m.r0.size
    violations: list[AxiomViolation] = []
    if m.r1.size != n or m.r2.size != n:
        violations.append(
            AxiomViolation(
                Axiom.EQUAL_DOMAINS,
                None,
                None,
                f"domain sizes {m.r0.size}, {m.r1.size}, {m.r2.size}",
            )
        )
        return ValidationReport(n, tuple(violations))

    identity = np.arange(n)
    for i, r in enumerate(m.connections):
        name = f"r{i}"
        moved = np.flatnonzero(r.images[r.images] != identity)
        if moved.size:
            flag = int(moved[0])
            violations.append(
                AxiomViolation(Axiom.INVOLUTION, flag, name, f"{name}^2 moves flag {flag}")
            )
        fixed = np.flatnonzero(r.images == identity)
        if fixed.size:
            flag = int(fixed[0])
            violations.append(
                AxiomViolation(Axiom.FIXED_POINT_FREE, flag, name, f"{name} fixes flag {flag}")
            )

    r0r2 = m.r2.images[m.r0.images]
    moved = np.flatnonzero(r0r2[r0r2] != identity)
    if moved.size:
        flag = int(moved[0])
        violations.append(
            AxiomViolation(Axiom.R0R2_COMMUTE, flag, "r0r2", f"(r0r2)^2 moves flag {flag}")
        )

    for a, b in ((0, 1), (0, 2), (1, 2)):
        clash = np.flatnonzero(m.connection(a).images == m.connection(b).images)
        if clash.size:
            flag = int(clash[0])
            violations.append(
                AxiomViolation(
                    Axiom.DISTINCT_NEIGHBOURS,
                    flag,
                    f"r{a}=r{b}",
                    f"r{a} and r{b} send flag {flag} to the same flag",
                )
            )

    if n:
        orbits = orbits_under(list(m.connections), n)
        if orbits.count != 1:
            flag = orbits.orbits[1][0]
            violations.append(
                AxiomViolation(
                    Axiom.TRANSITIVE, flag, None, f"flag {flag} is unreachable from flag 0"
                )
            )

    return ValidationReport(n, tuple(violations))


def violations_payload(report: ValidationReport) -> list[dict[str, Any]]:
    return [
        {"axiom": v.axiom.value, "flag": v.flag, "connection": v.connection, "detail": v.detail}
        for v in report.violations
    ]


def require_valid(m: FlagSystem) -> None:
    """
    Validate and raise on failure.

    Raises:
        MapValidationException: If any axiom fails
    """
    report = validate(m)
    if not report.passed:
        raise MapValidationException("Map axioms violated", violations=violations_payload(report))


class MapService:
    """
    Derived structure of a valid map, computed lazily and cached.

    Example:
        ```python
        service = MapService(tetrahedron())
        service.face_structure.n_faces  # 4
        ```
    """

    def __init__(self, flag_system: FlagSystem, check: bool = True) -> None:
        """
        Initialize the service.

        Args:
            flag_system: The map
            check: Validate the axioms first

        Raises:
            MapValidationException: If ``check`` and the map is invalid
        """
        if check:
            require_valid(flag_system)
        self.map = flag_system

    @property
    def n_flags(self) -> int:
        return self.map.n_flags

    @cached_property
    def face_structure(self) -> FaceStructure:
        """Vertex, edge, face and dart orbits of the connection subgroups."""
        m, n = self.map, self.map.n_flags
        structure = FaceStructure(
            vertices=orbits_under([m.r1, m.r2], n),
            edges=orbits_under([m.r0, m.r2], n),
            faces=orbits_under([m.r0, m.r1], n),
            darts=orbits_under([m.r2], n),
        )
        logger.debug(
            "%s: V=%d E=%d F=%d",
            m.name,
            structure.n_vertices,
            structure.n_edges,
            structure.n_faces,
        )
        return structure

    @cached_property
    def skeleton(self) -> Skeleton:
        """Underlying pseudograph with loops and parallel edges kept."""
        fs = self.face_structure
        r0 = self.map.r0
        initial, reverse, edge = [], [], []
        for flags in fs.darts.orbits:
            flag = flags[0]
            initial.append(fs.vertices.orbit_id[flag])
            reverse.append(fs.darts.orbit_id[r0(flag)])
            edge.append(fs.edges.orbit_id[flag])
        return Skeleton(initial=tuple(initial), reverse=tuple(reverse), edge=tuple(edge))

    @cached_property
    def edge_endpoints(self) -> tuple[tuple[int, int], ...]:
        """Sorted end vertices per edge id."""
        sk = self.skeleton
        ends: dict[int, tuple[int, int]] = {}
        for dart in range(sk.n_darts):
            if sk.edge[dart] not in ends:
                u, v = sk.initial[dart], sk.terminal(dart)
                ends[sk.edge[dart]] = (min(u, v), max(u, v))
        return tuple(ends[e] for e in range(len(ends)))

    @cached_property
    def orientation_colouring(self) -> tuple[int, ...] | None:
        """2-colouring of flags that every connection swaps, flag 0 coloured 0; None if none."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_flags))
        for r in self.map.connections:
            graph.add_edges_from(enumerate(r.images.tolist()))
        try:
            colour = nx.bipartite.color(graph)
        except nx.NetworkXError:
            return None
        flip = colour[0]
        return tuple(colour[x] ^ flip for x in range(self.n_flags))

    @property
    def is_orientable(self) -> bool:
        """True when the flags admit a 2-colouring swapped by every connection."""
        return self.orientation_colouring is not None

    @property
    def euler_characteristic(self) -> int:
        fs = self.face_structure
        return fs.n_vertices - fs.n_edges + fs.n_faces

    def genus_report(self) -> GenusReport:
        """Orientability, Euler characteristic and genus of the surface."""
        chi = self.euler_characteristic
        if self.is_orientable:
            return GenusReport(chi, True, genus=(2 - chi) // 2)
        return GenusReport(chi, False, crosscaps=2 - chi)

    @cached_property
    def valences(self) -> tuple[int, ...]:
        return tuple(len(flags) // 2 for flags in self.face_structure.vertices.orbits)

    @cached_property
    def face_sizes(self) -> tuple[int, ...]:
        return tuple(len(flags) // 2 for flags in self.face_structure.faces.orbits)

    @property
    def is_equivelar(self) -> bool:
        return len(set(self.valences)) == 1

    @property
    def valence(self) -> int:
        """
        Common valence q.

        Raises:
            NotEquivelarException: If vertices differ in valence
        """
        if not self.is_equivelar:
            raise NotEquivelarException(list(self.valences))
        return self.valences[0]

    @cached_property
    def rho(self) -> Permutation:
        """Rotation r1 r2 about each vertex."""
        return compose(self.map.r1, self.map.r2)

    def vertex_rotation(self, v: int) -> tuple[int, ...]:
        """Edges around vertex ``v`` in r1 r2 order from its least flag; loops appear twice."""
        fs = self.face_structure
        flag = fs.vertices.orbits[v][0]
        rotation = []
        for _ in range(self.valences[v]):
            rotation.append(fs.edges.orbit_id[flag])
            flag = self.rho(flag)
        return tuple(rotation)

    def flags_at(self, v: int, e: int) -> list[int]:
        """
        Flags incident to both a vertex and an edge.

        Args:
            v: Vertex id
            e: Edge id

        Returns:
            Flag ids, empty when ``v`` is not an end of ``e``
        """
        edge_id = self.face_structure.edges.orbit_id
        return [x for x in self.face_structure.vertices.orbits[v] if edge_id[x] == e]

    def subtend(self, v: int, e: int, e2: int) -> set[int]:
        """
        All ``d`` in ``1..q-1`` such that ``e`` and ``e2`` subtend ``d`` faces at ``v``.

        Args:
            v: Vertex id
            e: Edge incident to ``v``
            e2: Edge incident to ``v``

        Returns:
            Set of face counts; closed under ``d -> q - d``

        Raises:
            ValueError: If either edge misses ``v``
        """
        start = self.flags_at(v, e)
        if not start or not self.flags_at(v, e2):
            raise ValueError(f"Edges {e} and {e2} are not both incident to vertex {v}")
        edge_id = self.face_structure.edges.orbit_id
        q = self.valences[v]
        found = set()
        for flag in start:
            for d in range(1, q):
                flag = self.rho(flag)
                if edge_id[flag] == e2:
                    found.add(d)
        return found

    @property
    def is_simple(self) -> bool:
        """True when the skeleton has no loops and no parallel edges."""
        sk = self.skeleton
        if any(sk.is_loop(d) for d in range(sk.n_darts)):
            return False
        return len(set(self.edge_endpoints)) == len(self.edge_endpoints)


def _operator_name(prefix: str, name: str | None) -> str | None:
    """``X -> prefix(X)``, undoing an outer ``prefix(...)`` so the operators stay involutions."""
    if name is None:
        return None
    opener = f"{prefix}("
    if name.startswith(opener) and name.endswith(")"):
        depth = 0
        for i, ch in enumerate(name[len(prefix) :], start=len(prefix)):
            depth += {"(": 1, ")": -1}.get(ch, 0)
            if depth == 0:
                if i == len(name) - 1:
                    return name[len(opener) : -1]
                break
    return f"{prefix}({name})"


def dual(m: FlagSystem) -> FlagSystem:
    """The map (F, r2, r1, r0)."""
    return FlagSystem(m.r2, m.r1, m.r0, name=_operator_name("D", m.name))


def petrie(m: FlagSystem) -> FlagSystem:
    """The map (F, r0 r2, r1, r2)."""
    return FlagSystem(compose(m.r0, m.r2), m.r1, m.r2, name=_operator_name("P", m.name))


def propagate(
    source_conns: Sequence[list[int]],
    target_conns: Sequence[list[int]],
    source: int,
    target: int,
) -> list[int] | None:
    n = len(source_conns[0])
    mapping = [-1] * n
    mapping[source] = target
    stack = [source]
    while stack:
        x = stack.pop()
        y = mapping[x]
        for ra, rb in zip(source_conns, target_conns):
            x2, y2 = ra[x], rb[y]
            seen = mapping[x2]
            if seen == -1:
                mapping[x2] = y2
                stack.append(x2)
            elif seen != y2:
                return None
    if -1 in mapping or len(set(mapping)) != n:
        return None
    return mapping


def connection_lists(m: FlagSystem) -> tuple[list[int], list[int], list[int]]:
    return (m.r0.tolist(), m.r1.tolist(), m.r2.tolist())


def extend_morphism(a: FlagSystem, b: FlagSystem, source: int, target: int) -> Permutation | None:
    """
    The flag bijection ``phi`` with ``phi(source) = target`` and
    ``phi(r_i^a(x)) = r_i^b(phi(x))``, built by propagation over the connections.

    Returns:
        The bijection, or None when propagation meets a contradiction
    """
    if a.n_flags != b.n_flags:
        return None
    mapping = propagate(connection_lists(a), connection_lists(b), source, target)
    return Permutation(mapping) if mapping is not None else None


def are_isomorphic(a: FlagSystem, b: FlagSystem) -> Permutation | None:
    """
    Find an isomorphism from ``a`` to ``b`` by anchoring flag 0 of ``a`` at each flag of ``b``.

    Returns:
        A flag bijection intertwining the connections, or None
    """
    if a.n_flags != b.n_flags:
        return None
    a_conns, b_conns = connection_lists(a), connection_lists(b)
    for target in range(b.n_flags):
        mapping = propagate(a_conns, b_conns, 0, target)
        if mapping is not None:
            return Permutation(mapping)
    return None


def from_rotation_system(
    sigma: Sequence[int], theta: Sequence[int], name: str | None = None
) -> FlagSystem:
    """
    Flag system of an orientable map given on darts.

    Dart ``x`` carries flags ``2x`` and ``2x + 1``. ``sigma`` rotates darts about
    their initial vertex and ``theta`` reverses them; faces are the cycles of
    ``theta`` followed by ``sigma``.

    Args:
        sigma: Vertex rotation on darts
        theta: Fixed-point-free involution reversing darts
        name: Optional label

    Returns:
        The flag system (not yet validated)
    """
    sigma_perm, theta_perm = Permutation(sigma), Permutation(theta)
    darts = sigma_perm.size
    r0, r1, r2 = [0] * (2 * darts), [0] * (2 * darts), [0] * (2 * darts)
    for x in range(darts):
        for side in (0, 1):
            r2[2 * x + side] = 2 * x + 1 - side
            r0[2 * x + side] = 2 * theta_perm(x) + 1 - side
        r1[2 * x] = 2 * sigma_perm(x) + 1
        r1[2 * sigma_perm(x) + 1] = 2 * x
    return FlagSystem(Permutation(r0), Permutation(r1), Permutation(r2), name=name)


def read_mapfile(text: str, check: bool = True) -> FlagSystem:
    """
    Parse a Mapfile v1 document.

    Args:
        text: JSON text
        check: Validate the map axioms

    Returns:
        The flag system

    Raises:
        MapfileFormatException: Malformed JSON, unknown keys or non-bijective arrays
        MapValidationException: If ``check`` and an axiom fails
    """
    try:
        doc = MapfileSchema.model_validate_json(text)
    except ValidationError as exc:
        raise MapfileFormatException(errors=validation_errors(exc)) from exc
    if doc.flags > settings.MAX_FLAGS:
        raise MapfileFormatException(f"Mapfile has {doc.flags} flags, limit {settings.MAX_FLAGS}")

    m = FlagSystem(Permutation(doc.r0), Permutation(doc.r1), Permutation(doc.r2), name=doc.name)
    if check:
        require_valid(m)
    return m


def write_mapfile(m: FlagSystem) -> str:
    """Serialize as compact Mapfile v1 with keys flags, r0, r1, r2, name."""
    doc = MapfileSchema(
        flags=m.n_flags, r0=m.r0.tolist(), r1=m.r1.tolist(), r2=m.r2.tolist(), name=m.name
    )
    return doc.model_dump_json(exclude_none=True)
