"""Planar scene model: convex obstacles, clearance queries, hazard envelopes.

The workspace is an 800x800 field holding 12 convex obstacles.  A legal robot
path must stay at least ``clearance`` units (default 10) away from every
obstacle, so each obstacle is surrounded by a "hazard envelope": its edges
offset outward by the clearance plus a circular arc of radius = clearance
around each vertex.  Taut shortest paths run along these envelopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Union

CLEARANCE_EPS = 1e-9  # tolerance when comparing distances against the clearance


class Point(NamedTuple):
    x: float
    y: float


class ShapeKindError(TypeError):
    """An operation was applied to an obstacle shape it does not support."""


@dataclass(frozen=True)
class AxisRect:
    anchor: Point  # lower-left corner
    width: float
    height: float


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float


@dataclass(frozen=True)
class Triangle:
    v1: Point
    v2: Point
    v3: Point


@dataclass(frozen=True)
class Parallelogram:
    # vertices in CCW order; closure invariant v1 + v3 == v2 + v4
    v1: Point
    v2: Point
    v3: Point
    v4: Point


Shape = Union[AxisRect, Circle, Triangle, Parallelogram]


@dataclass(frozen=True)
class ObstacleSpec:
    id: int
    shape: Shape


@dataclass(frozen=True)
class Scene:
    bounds: tuple[float, float] = (800.0, 800.0)
    obstacles: tuple[ObstacleSpec, ...] = ()
    clearance: float = 10.0

    def contains(self, p: Point) -> bool:
        w, h = self.bounds
        return 0.0 <= p[0] <= w and 0.0 <= p[1] <= h


@dataclass(frozen=True)
class CornerArc:
    """Arc of the envelope around one obstacle vertex; sweeps CCW start->end."""

    center: Point
    radius: float
    start_angle: float
    end_angle: float


@dataclass(frozen=True)
class EnvelopeRegion:
    source: int
    offset_edges: tuple[tuple[Point, Point], ...] = ()
    corner_arcs: tuple[CornerArc, ...] = ()
    inflated_circle: Optional[Circle] = None


def parallelogram_from(anchor: Point, base: float, top_left: Point) -> Parallelogram:
    """Complete a parallelogram from its lower-left vertex, base length and
    top-left vertex (the top edge is parallel to the base)."""
    v1 = Point(*anchor)
    v2 = Point(v1.x + base, v1.y)
    v4 = Point(*top_left)
    v3 = Point(v2.x + (v4.x - v1.x), v4.y)
    return Parallelogram(v1, v2, v3, v4)


def builtin_scene() -> Scene:
    """The built-in 12-obstacle benchmark scene (800x800, clearance 10)."""
    obstacles = (
        ObstacleSpec(1, AxisRect(Point(300, 400), 200, 200)),
        ObstacleSpec(2, Circle(Point(550, 450), 70)),
        ObstacleSpec(3, parallelogram_from(Point(360, 240), 140, Point(400, 330))),
        ObstacleSpec(4, Triangle(Point(280, 100), Point(410, 100), Point(345, 210))),
        ObstacleSpec(5, AxisRect(Point(80, 60), 150, 150)),
        ObstacleSpec(6, Triangle(Point(60, 300), Point(235, 300), Point(150, 435))),
        ObstacleSpec(7, AxisRect(Point(0, 470), 220, 60)),
        ObstacleSpec(8, parallelogram_from(Point(150, 600), 90, Point(180, 680))),
        ObstacleSpec(9, AxisRect(Point(370, 680), 60, 120)),
        ObstacleSpec(10, AxisRect(Point(540, 600), 130, 130)),
        ObstacleSpec(11, AxisRect(Point(640, 520), 80, 80)),
        ObstacleSpec(12, AxisRect(Point(500, 140), 300, 60)),
    )
    return Scene(bounds=(800.0, 800.0), obstacles=obstacles, clearance=10.0)


def obstacle_vertices(spec: ObstacleSpec) -> tuple[Point, ...]:
    """CCW convex vertex list of a polygonal obstacle."""
    s = spec.shape
    if isinstance(s, AxisRect):
        a = s.anchor
        return (
            Point(a.x, a.y),
            Point(a.x + s.width, a.y),
            Point(a.x + s.width, a.y + s.height),
            Point(a.x, a.y + s.height),
        )
    if isinstance(s, Triangle):
        return (s.v1, s.v2, s.v3)
    if isinstance(s, Parallelogram):
        return (s.v1, s.v2, s.v3, s.v4)
    raise ShapeKindError(f"obstacle {spec.id} has no polygon vertices ({type(s).__name__})")


# ---------------------------------------------------------------------------
# low-level planar primitives


def _pt_seg_dist(px: float, py: float, ax: float, ay: float, bx: float, by: float) -> float:
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / L2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _orient(ax, ay, bx, by, cx, cy) -> float:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _on_seg(ax, ay, bx, by, px, py) -> bool:
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def _segments_intersect(p1, p2, q1, q2) -> bool:
    d1 = _orient(q1[0], q1[1], q2[0], q2[1], p1[0], p1[1])
    d2 = _orient(q1[0], q1[1], q2[0], q2[1], p2[0], p2[1])
    d3 = _orient(p1[0], p1[1], p2[0], p2[1], q1[0], q1[1])
    d4 = _orient(p1[0], p1[1], p2[0], p2[1], q2[0], q2[1])
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _on_seg(q1[0], q1[1], q2[0], q2[1], p1[0], p1[1]):
        return True
    if d2 == 0 and _on_seg(q1[0], q1[1], q2[0], q2[1], p2[0], p2[1]):
        return True
    if d3 == 0 and _on_seg(p1[0], p1[1], p2[0], p2[1], q1[0], q1[1]):
        return True
    if d4 == 0 and _on_seg(p1[0], p1[1], p2[0], p2[1], q2[0], q2[1]):
        return True
    return False


def _seg_seg_dist(p1, p2, q1, q2) -> float:
    # Exact for 2D segments: zero when they intersect, otherwise the minimum
    # is attained at an endpoint of one of them.
    if _segments_intersect(p1, p2, q1, q2):
        return 0.0
    return min(
        _pt_seg_dist(p1[0], p1[1], q1[0], q1[1], q2[0], q2[1]),
        _pt_seg_dist(p2[0], p2[1], q1[0], q1[1], q2[0], q2[1]),
        _pt_seg_dist(q1[0], q1[1], p1[0], p1[1], p2[0], p2[1]),
        _pt_seg_dist(q2[0], q2[1], p1[0], p1[1], p2[0], p2[1]),
    )


def _point_in_convex(px: float, py: float, verts) -> bool:
    # CCW polygon: inside (or on boundary) iff the point is left of every edge
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) < 0.0:
            return False
    return True


@lru_cache(maxsize=None)
def _obstacle_geom(spec: ObstacleSpec):
    """(kind, payload, bbox) cache; bbox = (minx, miny, maxx, maxy)."""
    s = spec.shape
    if isinstance(s, Circle):
        c, r = s.center, s.radius
        return "circle", (c.x, c.y, r), (c.x - r, c.y - r, c.x + r, c.y + r)
    verts = obstacle_vertices(spec)
    xs = [v.x for v in verts]
    ys = [v.y for v in verts]
    return "poly", verts, (min(xs), min(ys), max(xs), max(ys))


def _bbox_pt_gap(bbox, px, py) -> float:
    dx = max(bbox[0] - px, 0.0, px - bbox[2])
    dy = max(bbox[1] - py, 0.0, py - bbox[3])
    return math.hypot(dx, dy)


def _bbox_seg_gap(bbox, a, b) -> float:
    sx0, sx1 = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
    sy0, sy1 = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
    dx = max(bbox[0] - sx1, 0.0, sx0 - bbox[2])
    dy = max(bbox[1] - sy1, 0.0, sy0 - bbox[3])
    return math.hypot(dx, dy)


def obstacle_distance(p: Point, spec: ObstacleSpec) -> float:
    """Euclidean distance from a point to one obstacle (0 inside)."""
    kind, payload, _ = _obstacle_geom(spec)
    if kind == "circle":
        cx, cy, r = payload
        return max(0.0, math.hypot(p[0] - cx, p[1] - cy) - r)
    verts = payload
    if _point_in_convex(p[0], p[1], verts):
        return 0.0
    n = len(verts)
    return min(
        _pt_seg_dist(p[0], p[1], verts[i][0], verts[i][1], verts[(i + 1) % n][0], verts[(i + 1) % n][1])
        for i in range(n)
    )


def segment_obstacle_distance(a: Point, b: Point, spec: ObstacleSpec) -> float:
    """Minimum distance from segment ab to one obstacle (0 on overlap)."""
    kind, payload, _ = _obstacle_geom(spec)
    if kind == "circle":
        cx, cy, r = payload
        return max(0.0, _pt_seg_dist(cx, cy, a[0], a[1], b[0], b[1]) - r)
    verts = payload
    if _point_in_convex(a[0], a[1], verts) or _point_in_convex(b[0], b[1], verts):
        return 0.0
    n = len(verts)
    return min(_seg_seg_dist(a, b, verts[i], verts[(i + 1) % n]) for i in range(n))


def min_clearance(p: Point, scene: Scene) -> float:
    """Minimum distance from p to any obstacle boundary/interior (0 inside)."""
    best = math.inf
    for spec in scene.obstacles:
        _, _, bbox = _obstacle_geom(spec)
        if _bbox_pt_gap(bbox, p[0], p[1]) >= best:
            continue
        d = obstacle_distance(p, spec)
        if d < best:
            best = d
    return best


def segment_min_clearance(a: Point, b: Point, scene: Scene) -> float:
    best = math.inf
    for spec in scene.obstacles:
        _, _, bbox = _obstacle_geom(spec)
        if _bbox_seg_gap(bbox, a, b) >= best:
            continue
        d = segment_obstacle_distance(a, b, spec)
        if d < best:
            best = d
    return best


def segment_clear(p: Point, q: Point, scene: Scene) -> bool:
    """True iff every point of segment pq keeps at least the scene clearance
    (within CLEARANCE_EPS) from every obstacle."""
    limit = scene.clearance - CLEARANCE_EPS
    for spec in scene.obstacles:
        _, _, bbox = _obstacle_geom(spec)
        if _bbox_seg_gap(bbox, p, q) >= limit:
            continue
        if segment_obstacle_distance(p, q, spec) < limit:
            return False
    return True


def blocking_obstacles(p: Point, q: Point, scene: Scene) -> tuple[int, ...]:
    """Ids of obstacles that put segment pq below the required clearance."""
    limit = scene.clearance - CLEARANCE_EPS
    return tuple(
        spec.id for spec in scene.obstacles if segment_obstacle_distance(p, q, spec) < limit
    )


def inflate_scene(scene: Scene) -> tuple[EnvelopeRegion, ...]:
    """Hazard envelope of every obstacle: edges offset outward by the
    clearance, vertices rounded with arcs of radius = clearance."""
    c = scene.clearance
    regions = []
    for spec in scene.obstacles:
        if isinstance(spec.shape, Circle):
            cc = spec.shape
            regions.append(
                EnvelopeRegion(spec.id, inflated_circle=Circle(cc.center, cc.radius + c))
            )
            continue
        verts = obstacle_vertices(spec)
        n = len(verts)
        edges = []
        normals = []
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            dx, dy = b.x - a.x, b.y - a.y
            L = math.hypot(dx, dy)
            # CCW polygon: interior lies left of each edge, so outward is right
            nx, ny = dy / L, -dx / L
            normals.append((nx, ny))
            edges.append((Point(a.x + c * nx, a.y + c * ny), Point(b.x + c * nx, b.y + c * ny)))
        arcs = []
        for i in range(n):
            prev = normals[i - 1]
            nxt = normals[i]
            start = math.atan2(prev[1], prev[0])
            end = math.atan2(nxt[1], nxt[0])
            if end < start:
                end += 2 * math.pi  # arc sweeps CCW by the exterior angle
            arcs.append(CornerArc(verts[i], c, start, end))
        regions.append(EnvelopeRegion(spec.id, tuple(edges), tuple(arcs)))
    return tuple(regions)
