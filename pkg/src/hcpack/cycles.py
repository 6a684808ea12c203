"""Hamiltonian cycles, packings, and the boundary-edge structure predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .errors import ConfigMismatch
from .geometry import Config, CrossingOracle, Edge, edge


@dataclass(frozen=True)
class HamCycle:
    """Cyclic vertex-index sequence; equality is on the listed order."""

    order: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if len(self.order) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.order)) != len(self.order):
            raise ValueError("repeated vertex in cycle")

    def __len__(self):
        return len(self.order)

    def edges(self) -> Tuple[Edge, ...]:
        n = len(self.order)
        return tuple(
            edge(self.order[i], self.order[(i + 1) % n]) for i in range(n)
        )

    def canonical(self) -> "HamCycle":
        """Rotate the smallest vertex first, direction by smaller second."""
        n = len(self.order)
        k = self.order.index(min(self.order))
        fwd = tuple(self.order[(k + i) % n] for i in range(n))
        rev = tuple(self.order[(k - i) % n] for i in range(n))
        return HamCycle(fwd if fwd[1] <= rev[1] else rev)


@dataclass(frozen=True)
class Packing:
    """Ordered, pairwise edge-disjoint cycles over one point set."""

    cycles: Tuple[HamCycle, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))

    def __len__(self):
        return len(self.cycles)

    def edge_union(self) -> set[Edge]:
        out: set[Edge] = set()
        for c in self.cycles:
            out |= set(c.edges())
        return out


@dataclass
class CrossReport:
    counts: Dict[Edge, int]
    max_count: int = field(init=False)

    def __post_init__(self):
        self.max_count = max(self.counts.values()) if self.counts else 0


def verify_hamiltonian(c: HamCycle, n: int) -> bool:
    return sorted(c.order) == list(range(n))


def crossing_report(c: HamCycle, oracle: CrossingOracle) -> CrossReport:
    """Per-edge count of other cycle edges properly crossing it.

    Cycle edges sharing a vertex are adjacent in the cycle and never counted.
    """
    es = c.edges()
    counts = {e: 0 for e in es}
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            e2 = es[j]
            if a in e2 or b in e2:
                continue
            if oracle(es[i], e2):
                counts[es[i]] += 1
                counts[e2] += 1
    return CrossReport(counts)


def is_one_plane(c: HamCycle, oracle: CrossingOracle) -> bool:
    return crossing_report(c, oracle).max_count <= 1


def are_edge_disjoint(a: HamCycle, b: HamCycle) -> bool:
    return not (set(a.edges()) & set(b.edges()))


def _rim_relabel(c: HamCycle, n: int, center_index: int) -> Tuple[Tuple[int, ...], int]:
    """Map a wheel cycle to rim labels 0..m-1 plus sentinel m."""
    m = n - 1

    def relabel(v):
        if v == center_index:
            return m
        return v if v < center_index else v - 1

    return tuple(relabel(v) for v in c.order), m


def boundary_edge_count(
    c: HamCycle,
    n: int,
    config: Config = Config.CONVEX,
    center_index: Optional[int] = None,
) -> int:
    """Number of cycle edges joining cyclically consecutive hull indices.

    For wheel sets only the rim order counts; radial edges are never
    boundary edges.
    """
    if config is Config.GENERAL:
        raise ConfigMismatch("boundary edges are defined for convex and wheel sets")
    if config is Config.WHEEL:
        order, m = _rim_relabel(c, n, n - 1 if center_index is None else center_index)
        cyc = HamCycle(order)
        return sum(
            1
            for a, b in cyc.edges()
            if m not in (a, b) and (b - a) % m in (1, m - 1)
        )
    return sum(1 for a, b in c.edges() if (b - a) % n in (1, n - 1))


def radial_edge_count(c: HamCycle, n: int, center_index: Optional[int] = None) -> int:
    center = n - 1 if center_index is None else center_index
    return sum(1 for e in c.edges() if center in e)


def check_boundary_minimum(c: HamCycle, n: int) -> bool:
    """Boundary-edge minimum on a convex set: 2 for even n, 3 for odd n."""
    need = 2 if n % 2 == 0 else 3
    return boundary_edge_count(c, n) >= need


def _boundary_on_side(c_edges: Iterable[Edge], i: int, j: int, n: int) -> int:
    """Boundary edges (k, k+1) of the cycle with i <= k < j cyclically."""
    span = (j - i) % n
    count = 0
    for a, b in c_edges:
        if (b - a) % n in (1, n - 1):
            k = a if (b - a) % n == 1 else b
            if (k - i) % n < span:
                count += 1
    return count


def check_diagonal_sides(c: HamCycle, n: int) -> bool:
    """Every diagonal of the cycle leaves enough boundary edges on each side.

    A side with an odd vertex count needs one boundary edge, an even side
    needs two.
    """
    es = c.edges()
    for a, b in es:
        if (b - a) % n in (1, n - 1):
            continue
        for i, j in ((a, b), (b, a)):
            size = (j - i) % n + 1
            need = 1 if size % 2 == 1 else 2
            if _boundary_on_side(es, i, j, n) < need:
                return False
    return True


def _companions_present(edges_set: set[Edge], k: int, n: int) -> bool:
    return (
        edge(k % n, (k + 2) % n) in edges_set
        and edge((k + 1) % n, (k - 1) % n) in edges_set
    )


def check_companion_edges(c: HamCycle, n: int) -> bool:
    """Companion-edge structure for cycles with two or three boundary edges.

    Two boundary edges (k, k+1): both must come with (k, k+2) and
    (k+1, k-1).  Three: at least one single boundary edge has both
    companions.  Anything else holds vacuously; n < 4 is skipped.
    """
    if n < 4:
        return True
    es = set(c.edges())
    starts = [
        a if (b - a) % n == 1 else b
        for a, b in es
        if (b - a) % n in (1, n - 1)
    ]
    if len(starts) == 2:
        return all(_companions_present(es, k, n) for k in starts)
    if len(starts) == 3:
        start_set = set(starts)
        for k in starts:
            single = ((k - 1) % n not in start_set) and ((k + 1) % n not in start_set)
            if single and _companions_present(es, k, n):
                return True
        return False
    return True


def check_path_boundary(path: Sequence[int], n: int) -> bool:
    """Boundary-edge minima for a 1-plane Hamiltonian path on a convex set.

    Adjacent pendant vertices need one boundary edge, otherwise two.  Every
    diagonal edge needs a boundary edge on each pendant-free side: a side
    holding a pendant strictly inside is exempt, since the path can simply
    end there (e.g. 0-1-3-4-2 on five points has no boundary edge on the
    {1,2,3} side of the diagonal (1,3)).
    """
    path = list(path)
    path_edges = [edge(path[i], path[i + 1]) for i in range(len(path) - 1)]
    boundary = [e for e in path_edges if (e[1] - e[0]) % n in (1, n - 1)]
    i, j = path[0], path[-1]
    need = 1 if (j - i) % n in (1, n - 1) else 2
    if len(boundary) < need:
        return False
    pendants = {path[0], path[-1]}
    for a, b in path_edges:
        if (b - a) % n in (1, n - 1):
            continue
        for lo, hi in ((a, b), (b, a)):
            span = (hi - lo) % n
            if any(0 < (v - lo) % n < span for v in pendants):
                continue
            if _boundary_on_side(path_edges, lo, hi, n) < 1:
                return False
    return True


def check_wheel_boundary(
    c: HamCycle, n: int, center_index: Optional[int] = None
) -> bool:
    """Wheel version: two boundary edges minimum, one per side of each rim
    diagonal."""
    order, m = _rim_relabel(c, n, n - 1 if center_index is None else center_index)
    cyc = HamCycle(order)
    rim_edges = [e for e in cyc.edges() if m not in e]
    boundary = [e for e in rim_edges if (e[1] - e[0]) % m in (1, m - 1)]
    if len(boundary) < 2:
        return False
    for a, b in rim_edges:
        if (b - a) % m in (1, m - 1):
            continue
        for lo, hi in ((a, b), (b, a)):
            if _boundary_on_side(rim_edges, lo, hi, m) < 1:
                return False
    return True


def verify_packing(cycles: Sequence[HamCycle], n: int, oracle: CrossingOracle) -> dict:
    """Full verification report: Hamiltonicity, crossings, disjointness."""
    per_cycle = []
    for c in cycles:
        report = crossing_report(c, oracle)
        per_cycle.append(
            {
                "hamiltonian": verify_hamiltonian(c, n),
                "max_crossings": report.max_count,
                "one_plane": report.max_count <= 1,
            }
        )
    k = len(cycles)
    disjoint = [[True] * k for _ in range(k)]
    all_disjoint = True
    for i in range(k):
        for j in range(i + 1, k):
            d = are_edge_disjoint(cycles[i], cycles[j])
            disjoint[i][j] = disjoint[j][i] = d
            all_disjoint = all_disjoint and d
    ok = all_disjoint and all(
        r["hamiltonian"] and r["one_plane"] for r in per_cycle
    )
    return {
        "cycles": per_cycle,
        "pairwise_disjoint": disjoint,
        "all_disjoint": all_disjoint,
        "ok": ok,
    }
