"""One-face families built by polygon gluing, plus the hand-built fixture maps.

Flag ``f(p, i) = 2p + i`` lies on side ``p`` of the polygon and touches
corner ``p + i``.
"""

from flagwalk.core.logging import get_logger
from flagwalk.models.flag_system import FlagSystem
from flagwalk.models.gluing import PolygonGluing
from flagwalk.models.permutation import Permutation
from flagwalk.services.flagmap import dual, from_rotation_system, petrie, validate

logger = get_logger(__name__)


def glue(p: PolygonGluing, name: str | None = None) -> FlagSystem:
    """
    The one-face map obtained by identifying the polygon's sides in pairs.

    ``r0`` swaps the two flags of a side, ``r1`` joins side ``p`` to side
    ``p + 1`` at their shared corner and ``r2`` follows the pairing.

    Args:
        p: Side pairing with per-side orientation
        name: Optional label

    Returns:
        The flag system; it is not validated here
    """
    n_flags = 2 * p.n_sides
    r0 = [x ^ 1 for x in range(n_flags)]
    r1 = [0] * n_flags
    r2 = [0] * n_flags
    for pos in range(p.n_sides):
        a, b = 2 * pos + 1, 2 * ((pos + 1) % p.n_sides)
        r1[a], r1[b] = b, a
        other = p.pairing[pos]
        for i in (0, 1):
            r2[2 * pos + i] = 2 * other + (1 - i if p.orientable[pos] else i)
    return FlagSystem(Permutation(r0), Permutation(r1), Permutation(r2), name=name)


def _opposite_pairing(n: int) -> list[int]:
    return [(p + n) % (2 * n) for p in range(2 * n)]


def m_gluing(n: int) -> PolygonGluing:
    return PolygonGluing.uniform(_opposite_pairing(n), orientable=True)


def delta_gluing(n: int) -> PolygonGluing:
    return PolygonGluing.uniform(_opposite_pairing(n), orientable=False)


def h_gluing(n: int, a: int) -> PolygonGluing:
    """
    Blue label ``x`` on side ``2x`` glued orientably to yellow ``x`` on side ``2x - 2a - 1``.

    Raises:
        ValueError: Unless ``n >= 2`` and ``0 <= a < n``
    """
    if n < 2 or not 0 <= a < n:
        raise ValueError(f"H({n},{a}) needs n >= 2 and 0 <= a < n")
    sides = 2 * n
    pairing = [0] * sides
    for x in range(n):
        blue, yellow = 2 * x, (2 * x - 2 * a - 1) % sides
        pairing[blue], pairing[yellow] = yellow, blue
    return PolygonGluing.uniform(pairing, orientable=True)


def build_M(n: int) -> FlagSystem:
    """
    Opposite sides of a 2n-gon glued orientably.

    Raises:
        ValueError: If ``n < 2``
    """
    if n < 2:
        raise ValueError("M_n needs n >= 2")
    return glue(m_gluing(n), name=f"M_{n}")


def build_delta(n: int) -> FlagSystem:
    """
    Opposite sides of a 2n-gon glued non-orientably.

    Raises:
        ValueError: If ``n < 2``
    """
    if n < 2:
        raise ValueError("delta_n needs n >= 2")
    return glue(delta_gluing(n), name=f"delta_{n}")


def build_H(n: int, a: int) -> FlagSystem:
    return glue(h_gluing(n, a), name=f"H({n},{a})")


def corner_of_flag(n_sides: int, flag: int) -> int:
    pos, i = divmod(flag, 2)
    return (pos + i) % n_sides


def m_edge_label(n: int, flag: int) -> int:
    """Edge label of a flag of M_n or delta_n: side ``p`` carries label ``p mod n``."""
    return (flag // 2) % n


def h_edge_label(n: int, a: int, flag: int) -> int:
    """Edge label of a flag of H(n, a): blue ``x`` on side ``2x``, yellow ``x+a+1`` on ``2x+1``."""
    pos = flag // 2
    if pos % 2 == 0:
        return pos // 2
    return (pos // 2 + a + 1) % n


def build_petrie_dual_pair(n: int) -> dict[str, FlagSystem]:
    """D(M_n), D(delta_n) and P(D(M_n)); the last two are isomorphic."""
    dm = dual(build_M(n))
    return {"DM": dm, "Ddelta": dual(build_delta(n)), "PDM": petrie(dm)}


def operator_orbit(m: FlagSystem) -> list[FlagSystem]:
    """The distinct maps reachable from ``m`` by the dual and Petrie operators (at most six)."""
    candidates = [m, dual(m), petrie(m), dual(petrie(m)), petrie(dual(m)), dual(petrie(dual(m)))]
    distinct: dict[FlagSystem, FlagSystem] = {}
    for c in candidates:
        distinct.setdefault(c, c)
    return list(distinct.values())


def theorem_maps(max_sides: int) -> list[FlagSystem]:
    """
    Valid maps generated from M_n, delta_n and H(n, a) with ``2n <= max_sides``.

    Each base map contributes its operator orbit; H(n, a) is taken once per
    pair ``{a, n - 1 - a}``. Invalid gluings are dropped.
    """
    bases: list[FlagSystem] = []
    for n in range(2, max_sides // 2 + 1):
        bases.append(build_M(n))
        bases.append(build_delta(n))
        bases.extend(build_H(n, a) for a in range(1, (n - 1) // 2 + 1))
    maps: list[FlagSystem] = []
    for base in bases:
        maps.extend(m for m in operator_orbit(base) if validate(m).passed)
    logger.debug("Generated %d valid maps with at most %d sides", len(maps), max_sides)
    return maps


# Fixture constructors


def tetrahedron() -> FlagSystem:
    rotations = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}
    darts = [(u, v) for u, around in rotations.items() for v in around]
    index = {dart: i for i, dart in enumerate(darts)}
    sigma = [0] * len(darts)
    theta = [0] * len(darts)
    for (u, v), i in index.items():
        around = rotations[u]
        sigma[i] = index[(u, around[(around.index(v) + 1) % len(around)])]
        theta[i] = index[(v, u)]
    return from_rotation_system(sigma, theta, name="tetrahedron")


def pp_loop() -> FlagSystem:
    """One vertex, one loop, one face on the projective plane."""
    return FlagSystem(
        Permutation([1, 0, 3, 2]),
        Permutation([3, 2, 1, 0]),
        Permutation([2, 3, 0, 1]),
        name="pp_loop",
    )


def m12_7() -> FlagSystem:
    """
    Genus-4 map on a 4-cycle with tripled edges; vertices 0..3 are d, a, b, c.

    Edge ``e`` runs from ``e+`` (dart ``2e``) to ``e-`` (dart ``2e + 1``).
    """
    sigma = [0] * 24
    for e in range(12):
        sigma[2 * e] = 2 * ((e - 1) % 12) + 1
        sigma[2 * e + 1] = 2 * ((e + 5) % 12)
    theta = [x ^ 1 for x in range(24)]
    return from_rotation_system(sigma, theta, name="M12_7")


def cunningham() -> FlagSystem:
    """
    Half-reflexible torus map: the 3x3 grid with every edge doubled.

    Horizontal edge copy ``c`` from ``(x, y)`` has id ``2(3y + x) + c``,
    vertical copies follow from 18. Dart ``2e`` leaves the lower coordinate.
    """

    def h(x: int, y: int, c: int) -> int:
        return 2 * (3 * (y % 3) + x % 3) + c

    def v(x: int, y: int, c: int) -> int:
        return 18 + 2 * (3 * (y % 3) + x % 3) + c

    sigma = [0] * 72
    for x in range(3):
        for y in range(3):
            around = [
                2 * h(x, y, 0),
                2 * h(x, y, 1),
                2 * v(x, y, 0),
                2 * v(x, y, 1),
                2 * h(x - 1, y, 1) + 1,
                2 * h(x - 1, y, 0) + 1,
                2 * v(x, y - 1, 1) + 1,
                2 * v(x, y - 1, 0) + 1,
            ]
            for i, dart in enumerate(around):
                sigma[dart] = around[(i + 1) % len(around)]
    theta = [x ^ 1 for x in range(72)]
    return from_rotation_system(sigma, theta, name="cunningham")


def torus_44(b: int, c: int, name: str | None = None) -> FlagSystem:
    """
    The square grid on the torus ``Z^2 / <(b, c), (-c, b)>``.

    Chiral when ``bc(b - c) != 0``, reflexible otherwise. With ``n`` vertices,
    edge ``i`` runs east from vertex ``i`` and edge ``n + i`` runs north from
    it; dart ``2e`` leaves the start of edge ``e``.

    Raises:
        ValueError: If the quotient has fewer than 5 vertices, where the grid
            would have loops or parallel edges
    """
    n = b * b + c * c
    if n < 5:
        raise ValueError(f"{{4,4}}_({b},{c}) needs b^2 + c^2 >= 5")

    def same(p: tuple[int, int], r: tuple[int, int]) -> bool:
        dx, dy = p[0] - r[0], p[1] - r[1]
        return (b * dx + c * dy) % n == 0 and (b * dy - c * dx) % n == 0

    reps: list[tuple[int, int]] = [(0, 0)]
    frontier = [(0, 0)]
    while frontier:
        x, y = frontier.pop()
        for p in ((x + 1, y), (x, y + 1)):
            if not any(same(p, r) for r in reps):
                reps.append(p)
                frontier.append(p)

    def index(p: tuple[int, int]) -> int:
        return next(i for i, r in enumerate(reps) if same(p, r))

    sigma = [0] * (4 * n)
    for i, (x, y) in enumerate(reps):
        around = [
            2 * i,
            2 * (n + i),
            2 * index((x - 1, y)) + 1,
            2 * (n + index((x, y - 1))) + 1,
        ]
        for k, dart in enumerate(around):
            sigma[dart] = around[(k + 1) % 4]
    theta = [x ^ 1 for x in range(4 * n)]
    return from_rotation_system(sigma, theta, name=name or f"{{4,4}}_({b},{c})")


def chiral_torus() -> FlagSystem:
    """{4,4}_(1,2): five vertices, no reflexions."""
    return torus_44(1, 2, name="chiral_torus")
