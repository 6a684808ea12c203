"""Explicit maximum packings for convex position and the regular wheel.

All three cycle families are alternating zigzags around the hull:

* ``THREE_BOUNDARY`` (odd n): from an anchor a, visit a, a+1, a-1, a+3,
  a-3, ... through every odd offset.  Gives one single boundary edge at
  (a, a+1) and a consecutive couple opposite it.
* ``TWO_BOUNDARY`` (even n, family A): odd offsets outward, the antipode,
  then even offsets back in.  Two single boundary edges, antipodal.
* ``FOUR_BOUNDARY`` (even n, family B): a boundary couple around the
  anchor, a zigzag out, and the antipodal couple.

Rotating anchors in steps of (n+3)/2 for odd n, or 3 for even n, tiles the
boundary so the k = floor(n/3) cycles stay pairwise edge-disjoint.  The
wheel packing reuses the odd-n rim zigzag and splices the center into one
chord per cycle, searched so radial edges stay distinct and each cycle
stays 1-plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .cycles import (
    HamCycle,
    Packing,
    crossing_report,
    is_one_plane,
    radial_edge_count,
    verify_hamiltonian,
)
from .errors import ConstructionFailed, InvalidN, NonHamiltonian
from .geometry import convex_oracle, edge as edge_of, wheel_oracle


class BoundaryPlan(Enum):
    TWO_BOUNDARY = "two"
    FOUR_BOUNDARY = "four"
    THREE_BOUNDARY = "three"


def _offsets_three(n: int) -> list[int]:
    m = (n - 1) // 2
    out = [0]
    for j in range(1, m + 1):
        out += [2 * j - 1, -(2 * j - 1)]
    return out


def _offsets_two(n: int) -> list[int]:
    m = n // 2
    out = [0]
    o = 1
    while o <= m - 1:
        out += [o, -o]
        o += 2
    out.append(m)
    e = m - 1 if (m - 1) % 2 == 0 else m - 2
    while e >= 2:
        out += [-e, e]
        e -= 2
    return out


def _offsets_four(n: int) -> list[int]:
    m = n // 2
    out = [-1, 0, 1]
    for mag in range(2, m):
        out.append(mag if mag % 2 else -mag)
    out.append(m)
    for mag in range(m - 1, 1, -1):
        out.append(-mag if mag % 2 else mag)
    return out


@dataclass(frozen=True)
class ZigzagSpec:
    """Index schedule for one constructed cycle.

    `pattern` is the resolved offset schedule relative to `anchor`; for
    wheel cycles the center vertex is spliced in at `splice_pos`.
    """

    n: int
    anchor: int
    plan: BoundaryPlan
    center: Optional[int] = None
    splice_pos: Optional[int] = None
    pattern: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.plan is BoundaryPlan.THREE_BOUNDARY:
            if self.n % 2 == 0:
                raise InvalidN("three-boundary zigzags need odd n")
            pat = _offsets_three(self.n)
        elif self.plan is BoundaryPlan.TWO_BOUNDARY:
            if self.n % 2 == 1:
                raise InvalidN("two-boundary zigzags need even n")
            pat = _offsets_two(self.n)
        else:
            if self.n % 2 == 1:
                raise InvalidN("four-boundary zigzags need even n")
            pat = _offsets_four(self.n)
        object.__setattr__(self, "pattern", tuple(pat))


def generate_zigzag(spec: ZigzagSpec) -> HamCycle:
    """Expand the offset schedule into a Hamiltonian cycle."""
    seq = [(spec.anchor + o) % spec.n for o in spec.pattern]
    if len(set(seq)) != len(seq):
        raise NonHamiltonian(f"offset schedule revisits an index: {spec}")
    if spec.splice_pos is not None:
        if spec.center is None:
            raise ValueError("splice_pos needs a center vertex")
        seq = seq[: spec.splice_pos + 1] + [spec.center] + seq[spec.splice_pos + 1 :]
    return HamCycle(tuple(seq))


def _verify_family(cycles, n, oracle, label):
    seen = set()
    for c in cycles:
        if not verify_hamiltonian(c, n):
            raise ConstructionFailed(f"{label}: cycle not Hamiltonian: {c.order}")
        if not is_one_plane(c, oracle):
            raise ConstructionFailed(f"{label}: cycle not 1-plane: {c.order}")
        es = set(c.edges())
        if es & seen:
            raise ConstructionFailed(f"{label}: shared edges {es & seen}")
        seen |= es


def pack_convex(n: int) -> Packing:
    """floor(n/3) pairwise edge-disjoint 1-plane Hamiltonian cycles."""
    if n < 3:
        raise InvalidN(f"need n >= 3, got {n}")
    k = n // 3
    cycles = []
    if n % 2 == 1:
        m = (n - 1) // 2
        for i in range(k):
            spec = ZigzagSpec(n, ((m + 2) * i) % n, BoundaryPlan.THREE_BOUNDARY)
            cycles.append(generate_zigzag(spec))
    else:
        t_a = (k + 1) // 2
        for i in range(t_a):
            cycles.append(generate_zigzag(ZigzagSpec(n, 3 * i, BoundaryPlan.TWO_BOUNDARY)))
        for j in range(k - t_a):
            cycles.append(
                generate_zigzag(ZigzagSpec(n, 3 * j + 2, BoundaryPlan.FOUR_BOUNDARY))
            )
    _verify_family(cycles, n, convex_oracle(n), f"pack_convex({n})")
    if len(cycles) != k:
        raise ConstructionFailed(f"expected {k} cycles, built {len(cycles)}")
    return Packing(tuple(cycles))


def pack_wheel(n: int) -> Packing:
    """floor((n-1)/3) cycles on the wheel; center stored as index n-1.

    Each rim zigzag gets the center spliced into one chord.  The preferred
    splice slot is the chord between the last two zigzag turns; when that
    slot would reuse a radial edge or break 1-planarity for larger rims,
    the next verifying chord position is taken instead.
    """
    if n % 2 != 0 or n < 10:
        raise InvalidN(f"wheel packing needs even n >= 10, got {n}")
    m = n - 1
    mu = (m - 1) // 2
    k = m // 3
    oracle = wheel_oracle(n)
    used_radial: set[int] = set()
    used_edges: set = set()
    cycles = []
    for i in range(k):
        anchor = ((mu + 2) * i) % m
        rim = [(anchor + o) % m for o in _offsets_three(m)]
        rim_cycle = HamCycle(tuple(rim))
        rim_counts = crossing_report(rim_cycle, oracle).counts
        rim_edges = rim_cycle.edges()
        chosen = None
        slots = [m - 3] + [p for p in range(m - 1, -1, -1) if p != m - 3]
        for pos in slots:
            u, v = rim[pos], rim[(pos + 1) % m]
            if (v - u) % m in (1, m - 1):
                continue  # splicing a boundary edge would drop below three
            if u in used_radial or v in used_radial:
                continue
            # incremental 1-planarity: drop the spliced chord, add radials
            uv = edge_of(u, v)
            rad_u, rad_v = edge_of(u, n - 1), edge_of(v, n - 1)
            ok = True
            cnt_u = cnt_v = 0
            for f in rim_edges:
                if f == uv:
                    continue
                c = rim_counts[f] - (
                    1 if (uv[0] not in f and uv[1] not in f and oracle(f, uv)) else 0
                )
                for rad, bump in ((rad_u, "u"), (rad_v, "v")):
                    if f[0] in rad or f[1] in rad:
                        continue
                    if oracle(rad, f):
                        c += 1
                        if bump == "u":
                            cnt_u += 1
                        else:
                            cnt_v += 1
                if c > 1:
                    ok = False
                    break
            if not ok or cnt_u > 1 or cnt_v > 1:
                continue
            cand = HamCycle(tuple(rim[: pos + 1] + [n - 1] + rim[pos + 1 :]))
            if set(cand.edges()) & used_edges:
                continue
            chosen = (cand, u, v)
            break
        if chosen is None:
            raise ConstructionFailed(f"pack_wheel({n}): no splice slot for cycle {i}")
        cand, u, v = chosen
        used_radial |= {u, v}
        used_edges |= set(cand.edges())
        cycles.append(cand)
    for c in cycles:
        if radial_edge_count(c, n) != 2:
            raise ConstructionFailed(f"pack_wheel({n}): radial count != 2")
    _verify_family(cycles, n, oracle, f"pack_wheel({n})")
    if len(cycles) != k:
        raise ConstructionFailed(f"expected {k} cycles, built {len(cycles)}")
    return Packing(tuple(cycles))
