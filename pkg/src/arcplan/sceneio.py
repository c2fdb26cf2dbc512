"""File formats and rendering: JSON scenes and graphs, run reports,
convergence curves, SVG drawings.

Scene files carry the obstacle parameters verbatim (anchor + dimensions, not
derived vertex lists) so they stay human-editable; shapes are completed on
load.  All report output is deterministic: identical inputs and seeds yield
byte-identical text.
"""

from __future__ import annotations

import json
import math
import os
from importlib import resources
from typing import Optional

from .aco import AcoResult, WeightedGraph, graph_from_edges
from .geometry import (
    AxisRect,
    Circle,
    EnvelopeRegion,
    ObstacleSpec,
    Parallelogram,
    Point,
    Scene,
    Triangle,
    inflate_scene,
    parallelogram_from,
)
from .paths import Arc, Line, SmoothPath, Turn

FIXTURE_ENV = "ARCPLAN_FIXTURES"


class SceneFormatError(ValueError):
    pass


def _pt(v) -> Point:
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise SceneFormatError(f"expected [x, y] pair, got {v!r}")
    return Point(float(v[0]), float(v[1]))


def scene_from_dict(d: dict) -> Scene:
    try:
        bounds = tuple(float(b) for b in d.get("bounds", (800.0, 800.0)))
        clearance = float(d.get("clearance", 10.0))
        obstacles = []
        for entry in d.get("obstacles", ()):
            oid = int(entry["id"])
            kind = entry["kind"]
            if kind == "rect":
                shape = AxisRect(_pt(entry["anchor"]), float(entry["width"]), float(entry["height"]))
            elif kind == "circle":
                shape = Circle(_pt(entry["center"]), float(entry["radius"]))
            elif kind == "triangle":
                # stored CCW as (left, lower-right, top)
                shape = Triangle(_pt(entry["left"]), _pt(entry["lower_right"]), _pt(entry["top"]))
            elif kind == "parallelogram":
                shape = parallelogram_from(_pt(entry["anchor"]), float(entry["base"]), _pt(entry["top_left"]))
            else:
                raise SceneFormatError(f"obstacle {oid}: unknown kind {kind!r}")
            obstacles.append(ObstacleSpec(oid, shape))
    except KeyError as e:
        raise SceneFormatError(f"scene entry missing field {e}") from None
    except (TypeError, ValueError) as e:
        if isinstance(e, SceneFormatError):
            raise
        raise SceneFormatError(f"bad scene value: {e}") from None
    return Scene(bounds=(bounds[0], bounds[1]), obstacles=tuple(obstacles), clearance=clearance)


def scene_to_dict(scene: Scene) -> dict:
    obstacles = []
    for spec in scene.obstacles:
        s = spec.shape
        if isinstance(s, AxisRect):
            entry = {"id": spec.id, "kind": "rect", "anchor": list(s.anchor), "width": s.width, "height": s.height}
        elif isinstance(s, Circle):
            entry = {"id": spec.id, "kind": "circle", "center": list(s.center), "radius": s.radius}
        elif isinstance(s, Triangle):
            entry = {"id": spec.id, "kind": "triangle", "left": list(s.v1), "lower_right": list(s.v2), "top": list(s.v3)}
        elif isinstance(s, Parallelogram):
            entry = {
                "id": spec.id,
                "kind": "parallelogram",
                "anchor": list(s.v1),
                "base": s.v2.x - s.v1.x,
                "top_left": list(s.v4),
            }
        else:
            raise SceneFormatError(f"obstacle {spec.id}: unserializable shape {type(s).__name__}")
        obstacles.append(entry)
    return {"bounds": list(scene.bounds), "clearance": scene.clearance, "obstacles": obstacles}


def load_scene(path: str) -> Scene:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SceneFormatError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return scene_from_dict(data)


def dump_scene(scene: Scene, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scene_to_dict(scene), fh, indent=2)
        fh.write("\n")


def graph_from_dict(d: dict) -> WeightedGraph:
    n = int(d["nodes"])
    no_edge = float(d.get("no_edge", 1000.0))
    edges = [(int(i), int(j), float(w)) for i, j, w in d["edges"]]
    return graph_from_edges(n, edges, no_edge=no_edge)


def graph_to_dict(g: WeightedGraph) -> dict:
    edges = []
    n = g.node_count
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if g.has_edge(i, j):
                edges.append([i, j, g.weight(i, j)])
    return {"nodes": n, "no_edge": g.no_edge, "edges": edges}


def load_graph(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise SceneFormatError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return graph_from_dict(data)


def fixture_dir() -> str:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return override
    return str(resources.files("arcplan").joinpath("fixtures"))


def fixture_path(name: str) -> str:
    return os.path.join(fixture_dir(), name)


def load_fixture_scene() -> Scene:
    return load_scene(fixture_path("scene.json"))


def load_expected() -> dict:
    with open(fixture_path("expected.json"), "r", encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# reports


def format_point(p: Point) -> str:
    return f"({p.x:.4f}, {p.y:.4f})"


def _segment_kind(seg) -> str:
    if isinstance(seg, Line):
        return "line"
    c = seg.circle
    return f"arc center ({c.center.x:g}, {c.center.y:g}) {c.turn.value}"


def segment_rows(path: SmoothPath) -> list[dict]:
    rows = []
    for i, seg in enumerate(path.segments, start=1):
        rows.append(
            {
                "no": i,
                "start": seg.start,
                "end": seg.end,
                "kind": _segment_kind(seg),
                "length": seg.length,
            }
        )
    return rows


def format_segment_table(path: SmoothPath) -> str:
    lines = [f"  {'no':>2}  {'start':<24} {'end':<24} {'type':<34} {'length':>12}"]
    for row in segment_rows(path):
        lines.append(
            f"  {row['no']:>2}  {format_point(row['start']):<24} {format_point(row['end']):<24} "
            f"{row['kind']:<34} {row['length']:>12.4f}"
        )
    return "\n".join(lines)


def format_plan_report(label: str, plan) -> str:
    out = [f"route {label}  (engine {plan.engine})"]
    if plan.corners:
        corners = ", ".join(
            f"({c.center.x:g}, {c.center.y:g}) {c.turn.value}" for c in plan.corners
        )
        out.append(f"  corners: {corners}")
    else:
        out.append("  corners: none (straight segment)" if plan.path.segments else "  corners: none")
    out.append("segments:")
    if plan.path.segments:
        out.append(format_segment_table(plan.path))
    else:
        out.append("  (empty path)")
    out.append(f"total length {plan.length:.4f}")
    out.append(f"travel time  {plan.travel_time:.4f}")
    if plan.aco is not None:
        out.append(f"colony cost  {plan.aco.cost:.4f}  chromosome {plan.aco.chromosome}")
    return "\n".join(out) + "\n"


def plan_to_dict(label: str, plan) -> dict:
    """Full-precision machine-readable result."""
    segs = []
    for seg in plan.path.segments:
        if isinstance(seg, Line):
            segs.append({"type": "line", "start": list(seg.a), "end": list(seg.b), "length": seg.length})
        else:
            segs.append(
                {
                    "type": "arc",
                    "center": list(seg.circle.center),
                    "radius": seg.circle.radius,
                    "turn": seg.circle.turn.value,
                    "start": list(seg.start),
                    "end": list(seg.end),
                    "start_angle": seg.start_angle,
                    "end_angle": seg.end_angle,
                    "length": seg.length,
                }
            )
    return {
        "route": label,
        "engine": plan.engine,
        "length": plan.length,
        "travel_time": plan.travel_time,
        "roadmap_cost": plan.roadmap_cost,
        "segments": segs,
    }


def write_curve(result: AcoResult, path: str) -> None:
    """Convergence curves as text: generation, best-so-far, colony mean."""
    with open(path, "w", encoding="utf-8") as fh:
        for gen, (best, mean) in enumerate(zip(result.best_curve, result.mean_curve), start=1):
            fh.write(f"{gen} {best:.6f} {mean:.6f}\n")


# ---------------------------------------------------------------------------
# SVG


def _svg_obstacle(spec: ObstacleSpec) -> str:
    s = spec.shape
    if isinstance(s, Circle):
        return f'<circle cx="{s.center.x:g}" cy="{s.center.y:g}" r="{s.radius:g}" class="obstacle"/>'
    if isinstance(s, AxisRect):
        return (
            f'<rect x="{s.anchor.x:g}" y="{s.anchor.y:g}" width="{s.width:g}" '
            f'height="{s.height:g}" class="obstacle"/>'
        )
    pts = " ".join(f"{v.x:g},{v.y:g}" for v in (s.v1, s.v2, s.v3) + ((s.v4,) if isinstance(s, Parallelogram) else ()))
    return f'<polygon points="{pts}" class="obstacle"/>'


def _svg_envelope(region: EnvelopeRegion) -> str:
    if region.inflated_circle is not None:
        c = region.inflated_circle
        return f'<circle cx="{c.center.x:g}" cy="{c.center.y:g}" r="{c.radius:g}" class="envelope"/>'
    edges, arcs = region.offset_edges, region.corner_arcs
    n = len(edges)
    d = [f"M {edges[0][0].x:.3f} {edges[0][0].y:.3f}"]
    for i in range(n):
        d.append(f"L {edges[i][1].x:.3f} {edges[i][1].y:.3f}")
        nxt = edges[(i + 1) % n][0]
        r = arcs[(i + 1) % n].radius
        d.append(f"A {r:.3f} {r:.3f} 0 0 1 {nxt.x:.3f} {nxt.y:.3f}")
    d.append("Z")
    return f'<path d="{" ".join(d)}" class="envelope"/>'


def _svg_segment(seg) -> str:
    if isinstance(seg, Line):
        return (
            f'<path d="M {seg.a.x:.3f} {seg.a.y:.3f} L {seg.b.x:.3f} {seg.b.y:.3f}" class="route"/>'
        )
    r = seg.circle.radius
    large = 1 if seg.sweep > math.pi else 0
    sweep = 1 if seg.circle.turn is Turn.CCW else 0
    a, b = seg.start, seg.end
    return (
        f'<path d="M {a.x:.3f} {a.y:.3f} A {r:.3f} {r:.3f} 0 {large} {sweep} '
        f'{b.x:.3f} {b.y:.3f}" class="route"/>'
    )


SVG_STYLE = (
    ".obstacle{fill:#c8c8c8;stroke:#555;stroke-width:1}"
    ".envelope{fill:none;stroke:#d08080;stroke-width:0.8;stroke-dasharray:4 3}"
    ".route{fill:none;stroke:#1050c0;stroke-width:2}"
    ".mark{fill:#1050c0}"
)


def render_svg(scene: Scene, path: Optional[SmoothPath] = None, include_envelope: bool = True) -> str:
    """Scene + hazard envelope + route drawing (y axis flipped to screen)."""
    w, h = scene.bounds
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:g} {h:g}" '
        f'width="{w:g}" height="{h:g}">',
        f"<style>{SVG_STYLE}</style>",
        f'<g transform="translate(0,{h:g}) scale(1,-1)">',
        f'<rect x="0" y="0" width="{w:g}" height="{h:g}" fill="#fdfdf8" stroke="#999"/>',
        '<g id="obstacles">',
    ]
    for spec in scene.obstacles:
        parts.append(_svg_obstacle(spec))
    parts.append("</g>")
    if include_envelope:
        parts.append('<g id="envelope">')
        for region in inflate_scene(scene):
            parts.append(_svg_envelope(region))
        parts.append("</g>")
    if path is not None and path.segments:
        parts.append('<g id="route">')
        for seg in path.segments:
            parts.append(_svg_segment(seg))
        parts.append("</g>")
        s, e = path.start, path.end
        parts.append(f'<circle cx="{s.x:.3f}" cy="{s.y:.3f}" r="4" class="mark"/>')
        parts.append(f'<circle cx="{e.x:.3f}" cy="{e.y:.3f}" r="4" class="mark"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(scene: Scene, path: Optional[SmoothPath], out_path: str, include_envelope: bool = True) -> None:
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(scene, path, include_envelope))
