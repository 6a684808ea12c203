"""Instance generation and the JSON file formats.

Files carry integer coordinates only, serialized with a fixed key order so
the content digest is stable.  Generated convex and wheel instances are
validated against the combinatorial crossing oracle before being emitted;
a failed validation retries deterministically with a fresh jitter or a
larger radius.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import DegenerateInput, InvalidN
from .geometry import (
    Config,
    Point,
    PointSet,
    convex_hull,
    coordinate_oracle,
    edge,
    in_general_position,
    oracle_for,
)

RADIUS = 10**6


@dataclass
class InstanceFile:
    points: List[Tuple[int, int]]
    config: str
    center_index: Optional[int] = None
    seed: Optional[int] = None

    def to_point_set(self) -> PointSet:
        return PointSet(
            tuple(Point(x, y) for x, y in self.points),
            Config(self.config),
            self.center_index,
        )

    def canonical_json(self) -> str:
        doc = {
            "config": self.config,
            "center_index": self.center_index,
            "seed": self.seed,
            "points": [[x, y] for x, y in self.points],
        }
        return json.dumps(doc, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.canonical_json() + "\n")

    @classmethod
    def load(cls, path: str) -> "InstanceFile":
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DegenerateInput(f"cannot read instance file {path}: {exc}") from exc
        try:
            points = [(int(x), int(y)) for x, y in doc["points"]]
            config = str(doc["config"])
            center = doc.get("center_index")
            seed = doc.get("seed")
        except (KeyError, TypeError, ValueError) as exc:
            raise DegenerateInput(f"malformed instance file {path}: {exc}") from exc
        return cls(points=points, config=config, center_index=center, seed=seed)


@dataclass
class PackingFile:
    instance_hash: str
    cycles: List[List[int]]
    removed_edges: List[List[Tuple[int, int]]] = field(default_factory=list)

    def canonical_json(self) -> str:
        doc = {
            "instance_hash": self.instance_hash,
            "cycles": self.cycles,
            "removed_edges": [
                [[a, b] for a, b in per_cycle] for per_cycle in self.removed_edges
            ],
        }
        return json.dumps(doc, separators=(",", ":"))

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.canonical_json() + "\n")

    @classmethod
    def load(cls, path: str) -> "PackingFile":
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DegenerateInput(f"cannot read packing file {path}: {exc}") from exc
        try:
            cycles = [[int(v) for v in cyc] for cyc in doc["cycles"]]
            digest = str(doc["instance_hash"])
            removed = [
                [(int(a), int(b)) for a, b in per_cycle]
                for per_cycle in doc.get("removed_edges", [])
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise DegenerateInput(f"malformed packing file {path}: {exc}") from exc
        return cls(instance_hash=digest, cycles=cycles, removed_edges=removed)


def _regular_polygon(m: int, radius: int, rotation_steps: int = 4) -> List[Tuple[int, int]]:
    pts = []
    for i in range(m):
        ang = 2 * math.pi * i / m + math.pi / (rotation_steps * m)
        pts.append((round(radius * math.cos(ang)), round(radius * math.sin(ang))))
    return pts


def _convex_points(n: int, seed: Optional[int]) -> List[Tuple[int, int]]:
    # jitter inside a guard band that keeps the ccw hull order intact
    band = max(1, int(RADIUS * (1 - math.cos(math.pi / n)) / 4))
    base = seed if seed is not None else 0
    for attempt in range(64):
        rng = random.Random(base * 1000003 + attempt)
        raw = _regular_polygon(n, RADIUS)
        pts = [
            (x + rng.randint(-band, band), y + rng.randint(-band, band))
            for x, y in raw
        ]
        candidates = [Point(x, y) for x, y in pts]
        if not in_general_position(candidates):
            continue
        try:
            hull = convex_hull(candidates)
        except DegenerateInput:
            continue
        if sorted(hull) != list(range(n)):
            continue
        k = hull.index(0)
        if hull[k:] + hull[:k] != list(range(n)):
            continue
        return pts
    raise DegenerateInput(f"could not draw a convex instance with n={n}")


def _wheel_points(n: int) -> List[Tuple[int, int]]:
    m = n - 1
    radius = RADIUS
    for _ in range(8):
        rim = _regular_polygon(m, radius)
        pts = [Point(x, y) for x, y in rim] + [Point(0, 0)]
        if in_general_position(pts):
            ps = PointSet(tuple(pts), Config.WHEEL, center_index=n - 1)
            if _wheel_agreement(ps):
                return [(p.x, p.y) for p in pts]
        radius *= 10
    raise DegenerateInput(f"could not draw a wheel instance with n={n}")


def _wheel_agreement(ps: PointSet) -> bool:
    """Rounded coordinates must reproduce every combinatorial crossing."""
    comb = oracle_for(ps)
    coords = coordinate_oracle(ps.points)
    n = len(ps)
    es = [edge(a, b) for a in range(n) for b in range(a + 1, n)]
    for i, e1 in enumerate(es):
        for e2 in es[i + 1 :]:
            if e1[0] in e2 or e1[1] in e2:
                continue
            if comb(e1, e2) != coords(e1, e2):
                return False
    return True


def _general_points(n: int, seed: Optional[int]) -> List[Tuple[int, int]]:
    rng = random.Random(seed)
    pts: List[Point] = []
    while len(pts) < n:
        cand = Point(rng.randint(-RADIUS, RADIUS), rng.randint(-RADIUS, RADIUS))
        if any(cand == p for p in pts):
            continue
        if any(
            (b.x - a.x) * (cand.y - a.y) - (b.y - a.y) * (cand.x - a.x) == 0
            for i, a in enumerate(pts)
            for b in pts[i + 1 :]
        ):
            continue
        pts.append(cand)
    return [(p.x, p.y) for p in pts]


def generate(config: Config, n: int, seed: Optional[int] = None) -> InstanceFile:
    """A fresh validated instance of the requested configuration."""
    if config is Config.CONVEX:
        if n < 3:
            raise InvalidN("convex instances need n >= 3")
        return InstanceFile(_convex_points(n, seed), config.value, None, seed)
    if config is Config.WHEEL:
        if n % 2 != 0 or n < 4:
            raise InvalidN("wheel instances need even n >= 4")
        return InstanceFile(_wheel_points(n), config.value, n - 1, seed)
    if n < 3:
        raise InvalidN("general instances need n >= 3")
    return InstanceFile(_general_points(n, seed), config.value, None, seed)
