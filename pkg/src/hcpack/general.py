"""Single-cycle construction on arbitrary points, joining, and the driver.

The cycle builder is a ladder march down a bisecting line: it keeps one
dangling chain end per side and repeatedly links the next extreme pair
across the line.  The written-down move rules leave several geometric
cases open, so the march runs as a depth-first search: rule-conforming
moves are tried first, relaxed variants after, every added edge keeps
incremental crossing counts, and any branch that would cross an edge
twice (or touch a forbidden edge) is cut immediately.  Whatever survives
to a full cycle is a verified 1-plane Hamiltonian cycle by construction.

The packer stacks such cycles level by level: each level bisects every
part (paired ham-sandwich cuts, stone pairs kept together when possible),
builds one cycle per part, and splices them into a single cycle through
exchange moves.  Cut choices are searched depth-first across levels, so a
dead partition at the bottom backtracks into different cuts above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .bisection import Bisection, bisecting_lines, ham_sandwich_cuts, separating_subset_line
from .cycles import HamCycle, Packing, crossing_report, is_one_plane
from .errors import MarchFailed, NoJoinFound, NotSeparable, PackingIncomplete, StillCrossing
from .geometry import CrossingOracle, Edge, Point, PointSet, coordinate_oracle, edge, segments_properly_cross


@dataclass(frozen=True)
class Stone:
    """Terminal same-side edge of a march; constrains later cuts."""

    v: int
    w: int
    part_id: Optional[int] = None

    def pair(self) -> Edge:
        return edge(self.v, self.w)


@dataclass
class LevelParts:
    """Parts of one level in counter-clockwise label order."""

    parts: List[Tuple[int, ...]]
    stones: Dict[int, Stone]
    cut_case: Dict[int, str] = field(default_factory=dict)


@dataclass
class PartitionTree:
    levels: List[LevelParts] = field(default_factory=list)
    used_edges: set = field(default_factory=set)


@dataclass(frozen=True)
class JoinMove:
    removed: Tuple[Edge, Edge]
    added: Tuple[Edge, Edge]
    created_uncrossings: Tuple[Tuple[Tuple[Edge, Edge], Tuple[Edge, Edge]], ...] = ()

    def removed_edges(self) -> List[Edge]:
        out = list(self.removed)
        for rem_pair, _ in self.created_uncrossings:
            out.extend(rem_pair)
        return out


@dataclass
class GeneralPackResult:
    packing: Packing
    tree: PartitionTree
    join_log: List[List[JoinMove]]


# ---------------------------------------------------------------------------
# ladder march


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _orient(p: Point, q: Point, r: Point) -> int:
    return _sgn((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


class _March:
    """One backtracking march over a fixed bisection."""

    def __init__(self, points, bisection: Bisection, forbidden, node_cap):
        self.points = points
        left, right = list(bisection.left), list(bisection.right)
        if len(left) < len(right):
            left, right = right, left
        self.left0, self.right0 = left, right
        self.d = bisection.line.direction
        self.forbidden = forbidden
        self.node_cap = node_cap
        self.nodes = 0
        self.edges: List[Edge] = []
        self.counts: Dict[Edge, int] = {}
        self.adj: Dict[int, List[int]] = {i: [] for i in left + right}
        self.stone: Optional[Edge] = None

    # -- geometry helpers ---------------------------------------------------
    def _h(self, i: int) -> int:
        dx, dy = self.d
        return dx * self.points[i].x + dy * self.points[i].y

    def _below_side(self, u: int, w: int) -> int:
        dx, dy = self.d
        pu, pw = self.points[u], self.points[w]
        return _sgn((pw.x - pu.x) * (-dy) - (pw.y - pu.y) * (-dx))

    def _side(self, u: int, w: int, i: int) -> int:
        return _orient(self.points[u], self.points[w], self.points[i])

    # -- incremental edge bookkeeping ----------------------------------------
    def _try_add(self, u: int, w: int):
        e = edge(u, w)
        if e in self.forbidden or e in self.counts:
            return None
        pu, pw = self.points[u], self.points[w]
        hit = []
        for f in self.edges:
            if segments_properly_cross((pu, pw), (self.points[f[0]], self.points[f[1]])):
                if self.counts[f] >= 1 or hit:
                    return None
                hit.append(f)
        self.counts[e] = len(hit)
        for f in hit:
            self.counts[f] += 1
        self.edges.append(e)
        self.adj[u].append(w)
        self.adj[w].append(u)
        return hit

    def _undo(self, u: int, w: int, hit) -> None:
        e = edge(u, w)
        self.edges.pop()
        del self.counts[e]
        for f in hit:
            self.counts[f] -= 1
        self.adj[u].pop()
        self.adj[w].pop()

    # -- move generation ------------------------------------------------------
    def _valid_pairs(self, r1, r2):
        active = r1 | r2
        out = []
        for v1 in r1:
            for v2 in r2:
                bs = self._below_side(v1, v2)
                if bs == 0:
                    continue
                if all(
                    self._side(v1, v2, i) == bs
                    for i in active
                    if i not in (v1, v2)
                ):
                    out.append((v1, v2, bs))
        out.sort(key=lambda t: (-(self._h(t[0]) + self._h(t[1])), t[0], t[1]))
        return out

    def _moves(self, pairs, r1, r2, e1, e2):
        """Rungs and bridges, rule-conforming first, relaxed variants after."""
        moves = []
        seen = set()

        def push(kind, key, payload):
            if key not in seen:
                seen.add(key)
                moves.append((kind,) + payload)

        for v1, v2, bs in pairs:
            if self._side(v1, v2, e1) == -bs and self._side(v1, v2, e2) == -bs:
                push("rung", ("r", v1, v2), (v1, v2))
        for v1, v2, bs in pairs:
            for vi, ei, vo, si in ((v1, e1, v2, 1), (v2, e2, v1, 2)):
                lbs = self._below_side(vi, ei)
                if lbs == 0:
                    continue
                eo = e2 if si == 1 else e1
                if self._side(vi, ei, eo) != -lbs:
                    continue
                ok = all(
                    self._side(vi, ei, i) == lbs for i in (r1 | r2) if i != vi
                )
                if ok:
                    push("bridge", ("b", vi, vo, si), (vi, vo, si))
        for v1, v2, bs in pairs:
            push("rung", ("r", v1, v2), (v1, v2))
        for v1, v2, bs in pairs:
            push("bridge", ("b", v1, v2, 1), (v1, v2, 1))
            push("bridge", ("b", v2, v1, 2), (v2, v1, 2))
        return moves

    # -- search ---------------------------------------------------------------
    def run(self) -> Tuple[HamCycle, Optional[Edge]]:
        n = len(self.left0) + len(self.right0)
        if n == 3:
            order = sorted(self.left0 + self.right0)
            cyc = HamCycle(tuple(order))
            if any(e in self.forbidden for e in cyc.edges()):
                raise MarchFailed("triangle edge forbidden")
            return cyc, None
        r1, r2 = set(self.left0), set(self.right0)
        for v1, v2, _ in self._valid_pairs(r1, r2):
            hit = self._try_add(v1, v2)
            if hit is None:
                continue
            r1.discard(v1)
            r2.discard(v2)
            if self._dfs(r1, r2, v1, v2):
                start = self.left0[0]
                cyc = [start]
                prev = None
                while len(cyc) < n:
                    a, b = self.adj[cyc[-1]]
                    nxt = b if a == prev else a
                    prev = cyc[-1]
                    cyc.append(nxt)
                return HamCycle(tuple(cyc)), self.stone
            r1.add(v1)
            r2.add(v2)
            self._undo(v1, v2, hit)
        raise MarchFailed(f"march exhausted after {self.nodes} nodes")

    def _dfs(self, r1, r2, e1, e2) -> bool:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise MarchFailed(f"node cap {self.node_cap} hit")
        if not r1 and not r2:
            hit = self._try_add(e1, e2)
            if hit is not None:
                return True
            return False
        for ri, ei_, eo_ in ((r1, e1, e2), (r2, e2, e1)):
            ro = r2 if ri is r1 else r1
            if not ro and len(ri) == 1:
                w = next(iter(ri))
                h1 = self._try_add(ei_, w)
                if h1 is None:
                    return False
                h2 = self._try_add(eo_, w)
                if h2 is None:
                    self._undo(ei_, w, h1)
                    return False
                self.stone = edge(ei_, w)
                return True
        pairs = self._valid_pairs(r1, r2)
        for mv in self._moves(pairs, r1, r2, e1, e2):
            if mv[0] == "rung":
                _, v1, v2 = mv
                h1 = self._try_add(e1, v2)
                if h1 is None:
                    continue
                h2 = self._try_add(e2, v1)
                if h2 is None:
                    self._undo(e1, v2, h1)
                    continue
                r1.discard(v1)
                r2.discard(v2)
                if self._dfs(r1, r2, v1, v2):
                    return True
                r1.add(v1)
                r2.add(v2)
                self._undo(e2, v1, h2)
                self._undo(e1, v2, h1)
            else:
                _, vi, vo, si = mv
                ei_, eo_ = (e1, e2) if si == 1 else (e2, e1)
                ri, ro = (r1, r2) if si == 1 else (r2, r1)
                h1 = self._try_add(vi, eo_)
                if h1 is None:
                    continue
                h2 = self._try_add(vi, vo)
                if h2 is None:
                    self._undo(vi, eo_, h1)
                    continue
                ri.discard(vi)
                ro.discard(vo)
                ne1, ne2 = (e1, vo) if si == 1 else (vo, e2)
                if self._dfs(r1, r2, ne1, ne2):
                    return True
                ri.add(vi)
                ro.add(vo)
                self._undo(vi, vo, h2)
                self._undo(vi, eo_, h1)
        return False


def march_cycle(
    ps,
    subset: Sequence[int],
    bisection: Optional[Bisection] = None,
    forbidden: FrozenSet[Edge] = frozenset(),
    node_cap: int = 50000,
    max_cuts: int = 60,
) -> Tuple[HamCycle, Bisection, List[Stone]]:
    """A verified 1-plane Hamiltonian cycle on `subset` via the ladder march.

    With no bisection given, successive bisecting lines are tried until one
    admits a march.  The returned stone list is empty or a single terminal
    edge; a bare triangle reports no stone.
    """
    points = ps.points if isinstance(ps, PointSet) else tuple(ps)
    sub = sorted(subset)
    if len(sub) < 3:
        raise ValueError("need at least 3 points")
    cuts: Iterator[Bisection]
    if bisection is not None:
        cuts = iter([bisection])
    else:
        cuts = itertools.islice(bisecting_lines(points, sub), max_cuts)
    last = None
    for cut in cuts:
        try:
            cyc, stone = _March(points, cut, forbidden, node_cap).run()
        except MarchFailed as exc:
            last = exc
            continue
        stones = [] if stone is None or len(sub) == 3 else [Stone(stone[0], stone[1])]
        return cyc, cut, stones
    raise MarchFailed(f"no bisection admits a march: {last}")


# ---------------------------------------------------------------------------
# uncrossing and joining


def _oriented_edge_positions(c: HamCycle, e: Edge) -> Tuple[int, int]:
    """(u, v) with v the cycle successor of u and {u, v} == e."""
    n = len(c)
    pos = {v: i for i, v in enumerate(c.order)}
    i, j = pos[e[0]], pos[e[1]]
    if (i + 1) % n == j:
        return e[0], e[1]
    if (j + 1) % n == i:
        return e[1], e[0]
    raise ValueError(f"{e} is not an edge of the cycle")


def uncross(c: HamCycle, pair: Tuple[Edge, Edge], oracle: CrossingOracle) -> HamCycle:
    """Replace a crossing pair by the single-cycle reconnection.

    Of the two reconnection patterns exactly one keeps one cycle; the
    result must still verify 1-plane, else StillCrossing is raised.
    """
    e1, e2 = pair
    if not oracle(e1, e2):
        raise ValueError(f"{e1} and {e2} do not cross")
    n = len(c)
    u1, u2 = _oriented_edge_positions(c, e1)
    u3, u4 = _oriented_edge_positions(c, e2)
    pos = {v: i for i, v in enumerate(c.order)}
    arc1 = []
    i = pos[u2]
    while True:
        arc1.append(c.order[i])
        if c.order[i] == u3:
            break
        i = (i + 1) % n
    arc2 = []
    i = pos[u4]
    while True:
        arc2.append(c.order[i])
        if c.order[i] == u1:
            break
        i = (i + 1) % n
    new = HamCycle(tuple(arc2 + arc1[::-1]))
    if not is_one_plane(new, oracle):
        raise StillCrossing(f"uncrossing {pair} leaves a double crossing")
    return new


def _crossing_pairs(c: HamCycle, oracle: CrossingOracle) -> List[Tuple[Edge, Edge]]:
    es = c.edges()
    out = []
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            a, b = es[i], es[j]
            if a[0] in b or a[1] in b:
                continue
            if oracle(a, b):
                out.append((a, b))
    return sorted(out)


def _splice(c1: HamCycle, c2: HamCycle, e1: Edge, e2: Edge, pattern: int):
    n1, n2 = len(c1), len(c2)
    u2, u1 = _oriented_edge_positions(c1, e1)[::-1]
    # path of c1 from successor u2 around to u1
    p1 = []
    pos1 = {v: i for i, v in enumerate(c1.order)}
    i = pos1[u2]
    for _ in range(n1):
        p1.append(c1.order[i])
        i = (i + 1) % n1
    v2, v1 = _oriented_edge_positions(c2, e2)[::-1]
    p2 = []
    pos2 = {v: i for i, v in enumerate(c2.order)}
    i = pos2[v2]
    for _ in range(n2):
        p2.append(c2.order[i])
        i = (i + 1) % n2
    if pattern == 0:
        added = (edge(u1, v1), edge(u2, v2))
        merged = tuple(p1 + p2[::-1])
    else:
        added = (edge(u1, v2), edge(u2, v1))
        merged = tuple(p1 + p2)
    return HamCycle(merged), added


class _JoinScreen:
    """Incremental crossing accounting for candidate joins of two cycles."""

    def __init__(self, c1: HamCycle, c2: HamCycle, oracle: CrossingOracle):
        self.oracle = oracle
        self.es1, self.es2 = c1.edges(), c2.edges()
        self.cnt1 = crossing_report(c1, oracle).counts
        self.cnt2 = crossing_report(c2, oracle).counts
        self.x1 = set()
        for i in range(len(self.es1)):
            for j in range(i + 1, len(self.es1)):
                a, b = self.es1[i], self.es1[j]
                if a[0] not in b and a[1] not in b and oracle(a, b):
                    self.x1.add((a, b))
                    self.x1.add((b, a))
        self.x2 = set()
        for i in range(len(self.es2)):
            for j in range(i + 1, len(self.es2)):
                a, b = self.es2[i], self.es2[j]
                if a[0] not in b and a[1] not in b and oracle(a, b):
                    self.x2.add((a, b))
                    self.x2.add((b, a))
        self.x12 = set()
        self.row1 = {f: 0 for f in self.es1}
        self.row2 = {g: 0 for g in self.es2}
        for f in self.es1:
            for g in self.es2:
                if f[0] in g or f[1] in g:
                    continue
                if oracle(f, g):
                    self.x12.add((f, g))
                    self.row1[f] += 1
                    self.row2[g] += 1
        self._rows: Dict[Edge, Dict[Edge, bool]] = {}

    def _cross(self, a: Edge, f: Edge) -> bool:
        if a[0] in f or a[1] in f:
            return False
        row = self._rows.setdefault(a, {})
        v = row.get(f)
        if v is None:
            v = self.oracle(a, f)
            row[f] = v
        return v

    def candidate_ok(self, r1: Edge, r2: Edge, a1: Edge, a2: Edge) -> bool:
        """All merged-cycle crossing counts stay <= 1."""
        for f in self.es1:
            if f == r1:
                continue
            c = self.cnt1[f] - ((f, r1) in self.x1) + self.row1[f]
            c -= (f, r2) in self.x12
            c += self._cross(a1, f) + self._cross(a2, f)
            if c > 1:
                return False
        for g in self.es2:
            if g == r2:
                continue
            c = self.cnt2[g] - ((g, r2) in self.x2) + self.row2[g]
            c -= (r1, g) in self.x12
            c += self._cross(a1, g) + self._cross(a2, g)
            if c > 1:
                return False
        for a, other in ((a1, a2), (a2, a1)):
            c = int(self._cross(a, other))
            for f in self.es1:
                if f != r1:
                    c += self._cross(a, f)
            for g in self.es2:
                if g != r2:
                    c += self._cross(a, g)
            if c > 1:
                return False
        return True


def _plain_join(c1, c2, forbidden, oracle, extra_uncross=()):
    screen = _JoinScreen(c1, c2, oracle)
    for r1 in sorted(screen.es1):
        for r2 in sorted(screen.es2):
            for pattern in (0, 1):
                merged, added = _splice(c1, c2, r1, r2, pattern)
                if added[0] in forbidden or added[1] in forbidden:
                    continue
                if not screen.candidate_ok(r1, r2, added[0], added[1]):
                    continue
                if not is_one_plane(merged, oracle):
                    continue
                return merged, JoinMove(
                    removed=(r1, r2), added=added, created_uncrossings=tuple(extra_uncross)
                )
    return None


def join_cycles(
    c1: HamCycle,
    c2: HamCycle,
    forbidden: FrozenSet[Edge],
    oracle: CrossingOracle,
) -> Tuple[HamCycle, JoinMove]:
    """Merge two vertex-disjoint 1-plane cycles into one.

    Plain exchange pairs are tried in canonical order, then variants that
    first uncross one cycle, then both.  Added and created edges must avoid
    `forbidden`.
    """
    r = _plain_join(c1, c2, forbidden, oracle)
    if r:
        return r

    def uncross_variants(c):
        for pair in _crossing_pairs(c, oracle):
            try:
                nc = uncross(c, pair, oracle)
            except StillCrossing:
                continue
            created = tuple(e for e in nc.edges() if e not in set(c.edges()))
            if any(e in forbidden for e in created):
                continue
            yield nc, (pair, created)

    for which in (0, 1):
        base, other = (c1, c2) if which == 0 else (c2, c1)
        for nc, record in uncross_variants(base):
            a, b = (nc, other) if which == 0 else (other, nc)
            r = _plain_join(a, b, forbidden, oracle, extra_uncross=[record])
            if r:
                return r
    for nc1, rec1 in uncross_variants(c1):
        for nc2, rec2 in uncross_variants(c2):
            r = _plain_join(nc1, nc2, forbidden, oracle, extra_uncross=[rec1, rec2])
            if r:
                return r
    raise NoJoinFound(
        f"no join for cycles of size {len(c1)} and {len(c2)} "
        f"with {len(forbidden)} forbidden edges"
    )


# ---------------------------------------------------------------------------
# the level driver


def _ccw_part_order(parts: List[Tuple[int, ...]], points) -> List[Tuple[int, ...]]:
    """Parts by exact angular order of centroids around the global centroid."""
    total = sum(len(p) for p in parts)
    gx = sum(points[i].x for p in parts for i in p)
    gy = sum(points[i].y for p in parts for i in p)

    def vec(part):
        sx = sum(points[i].x for i in part)
        sy = sum(points[i].y for i in part)
        return (total * sx - len(part) * gx, total * sy - len(part) * gy)

    import functools

    def cmp(p1, p2):
        v1, v2 = vec(p1), vec(p2)
        h1 = 0 if (v1[1] > 0 or (v1[1] == 0 and v1[0] > 0)) else 1
        h2 = 0 if (v2[1] > 0 or (v2[1] == 0 and v2[0] > 0)) else 1
        if h1 != h2:
            return -1 if h1 < h2 else 1
        c = v1[0] * v2[1] - v1[1] * v2[0]
        if c != 0:
            return -1 if c > 0 else 1
        return -1 if min(p1) < min(p2) else 1

    return sorted(parts, key=functools.cmp_to_key(cmp))


def _nth(it, idx):
    return next(itertools.islice(it, idx, None), None)


def _bisection_from_cut(line, cls_left, part) -> Bisection:
    left = tuple(i for i in part if i in cls_left)
    right = tuple(i for i in part if i not in cls_left)
    if len(left) < len(right):
        left, right = right, left
    return Bisection(line, left, right)


def _run_level(points, parts, stones, used, variant, oracle):
    """One attempt at a level: marches per part plus the joining fold."""
    part_cuts: List[Optional[Bisection]] = [None] * len(parts)
    cut_case: Dict[int, str] = {}
    for t in range(0, len(parts), 2):
        a_idx, b_idx = t, t + 1
        A, B = parts[a_idx], parts[b_idx]
        st_a, st_b = stones.get(a_idx), stones.get(b_idx)
        hs = None
        if st_a is not None:
            hs = _nth(ham_sandwich_cuts(points, A, B, pair=(st_a.v, st_a.w)), variant)
            if hs is not None and st_b is not None:
                left_all = set(hs[1][0]) | set(hs[1][2])
                if (st_b.v in left_all) != (st_b.w in left_all):
                    hs = None
            case = "case1"
        elif st_b is not None:
            hs = _nth(ham_sandwich_cuts(points, B, A, pair=(st_b.v, st_b.w)), variant)
            case = "case1"
        else:
            hs = _nth(ham_sandwich_cuts(points, A, B), variant)
            case = "ham-sandwich"
        if hs is not None:
            line, _parts4 = hs
            left_all = {
                i
                for i in list(A) + list(B)
                if _side_positive(line, points[i])
            }
            part_cuts[a_idx] = _bisection_from_cut(line, left_all, A)
            part_cuts[b_idx] = _bisection_from_cut(line, left_all, B)
            cut_case[a_idx] = cut_case[b_idx] = case
    part_cycles: List[HamCycle] = []
    child_info = []
    for pi, part in enumerate(parts):
        st = stones.get(pi)
        cut = part_cuts[pi]
        if cut is None and st is not None:
            # separating-line fallback: split off a balanced stone-side subset
            try:
                line, grown = separating_subset_line(
                    points, part, (st.v, st.w), (len(part) + 1) // 2
                )
                grown_set = set(grown)
                cut = _bisection_from_cut(line, grown_set, part)
                cut_case[pi] = "case2"
            except NotSeparable:
                cut = None
                cut_case[pi] = "unconstrained"
        try:
            cyc, used_cut, new_stones = march_cycle(
                points, part, bisection=cut, forbidden=used
            )
        except MarchFailed:
            if cut is None:
                raise
            # the assigned cut admits no march; let the part pick its own
            cyc, used_cut, new_stones = march_cycle(
                points, part, bisection=None, forbidden=used
            )
            cut_case[pi] = "unconstrained"
        if cut is None:
            cut_case.setdefault(pi, "unconstrained")
        part_cycles.append(cyc)
        child_info.append((used_cut.left, used_cut.right, new_stones))
    # fold the per-part cycles into one cycle, greedily in ccw order
    last_err: Optional[Exception] = None
    merged = None
    moves: List[JoinMove] = []
    for seed_idx in range(len(part_cycles)):
        try:
            remaining = list(range(len(part_cycles)))
            m = part_cycles[remaining.pop(seed_idx)]
            trial_moves = []
            while remaining:
                for j, idx in enumerate(remaining):
                    try:
                        m, mv = join_cycles(m, part_cycles[idx], used, oracle)
                        trial_moves.append(mv)
                        remaining.pop(j)
                        break
                    except NoJoinFound as exc:
                        last_err = exc
                else:
                    raise NoJoinFound(f"fold stuck: {last_err}")
            merged = m
            moves = trial_moves
            break
        except NoJoinFound as exc:
            last_err = exc
    if merged is None:
        raise NoJoinFound(str(last_err))
    new_parts: List[Tuple[int, ...]] = []
    new_stones: Dict[int, Stone] = {}
    for left, right, sts in child_info:
        for half in (left, right):
            new_parts.append(tuple(sorted(half)))
            for st in sts:
                if st.v in half and st.w in half:
                    new_stones[len(new_parts) - 1] = Stone(st.v, st.w, len(new_parts) - 1)
    order = _ccw_part_order(new_parts, points)
    remap = {}
    taken = set()
    for oldi, p in enumerate(new_parts):
        for newi, q in enumerate(order):
            if p == q and newi not in taken:
                remap[oldi] = newi
                taken.add(newi)
                break
    stones_out = {remap[i]: Stone(s.v, s.w, remap[i]) for i, s in new_stones.items()}
    return merged, moves, order, stones_out, cut_case


def _side_positive(line, p: Point) -> bool:
    dx, dy = line.direction
    return dx * (p.y - line.anchor.y) - dy * (p.x - line.anchor.x) > 0


def pack_general_detailed(
    ps,
    per_level_variants: int = 8,
    budget: int = 200,
) -> GeneralPackResult:
    """At least k-1 edge-disjoint 1-plane Hamiltonian cycles on n = 2^k + h
    points.

    Levels are searched depth-first over cut variants; a level whose parts
    cannot host fresh cycles backtracks into different cuts above.  Raises
    PackingIncomplete (with the cycles found so far) if the search ends
    without reaching k-1 cycles.
    """
    points = ps.points if isinstance(ps, PointSet) else tuple(ps)
    n = len(points)
    k = n.bit_length() - 1
    if k < 2:
        raise ValueError("need n >= 4")
    oracle = coordinate_oracle(points)
    counter = [0]
    last_err: List[Optional[Exception]] = [None]
    best: List[List[HamCycle]] = [[]]

    def solve(level, parts, stones, used, cycles, levels_acc, moves_acc):
        if len(cycles) > len(best[0]):
            best[0] = list(cycles)
        if level > k - 1:
            return cycles, levels_acc, moves_acc
        for variant in range(per_level_variants):
            if counter[0] >= budget:
                return None
            counter[0] += 1
            try:
                merged, moves, parts2, stones2, cut_case = _run_level(
                    points, parts, stones, used, variant, oracle
                )
            except (MarchFailed, NoJoinFound) as exc:
                last_err[0] = exc
                continue
            lv = LevelParts(parts=list(parts2), stones=dict(stones2), cut_case=cut_case)
            res = solve(
                level + 1,
                parts2,
                stones2,
                used | set(merged.edges()),
                cycles + [merged],
                levels_acc + [lv],
                moves_acc + [moves],
            )
            if res is not None:
                return res
        return None

    for v1 in range(per_level_variants):
        cuts = _nth(bisecting_lines(points, range(n)), v1)
        if cuts is None:
            break
        try:
            cyc, cut, stones_l = march_cycle(points, range(n), bisection=cuts)
        except MarchFailed as exc:
            last_err[0] = exc
            continue
        parts = _ccw_part_order(
            [tuple(sorted(cut.left)), tuple(sorted(cut.right))], points
        )
        stones: Dict[int, Stone] = {}
        for st in stones_l:
            for pi, p in enumerate(parts):
                if st.v in p and st.w in p:
                    stones[pi] = Stone(st.v, st.w, pi)
        level1 = LevelParts(parts=list(parts), stones=dict(stones))
        res = solve(2, parts, stones, set(cyc.edges()), [cyc], [level1], [[]])
        if res is not None:
            cycles, levels_acc, moves_acc = res
            tree = PartitionTree(levels=levels_acc)
            for c in cycles:
                tree.used_edges |= set(c.edges())
            return GeneralPackResult(Packing(tuple(cycles)), tree, moves_acc)
    raise PackingIncomplete(
        f"search exhausted ({counter[0]} level attempts): {last_err[0]}",
        level=len(best[0]) + 1,
        cycles=best[0],
    )


def pack_general(ps, **kwargs) -> Packing:
    return pack_general_detailed(ps, **kwargs).packing
