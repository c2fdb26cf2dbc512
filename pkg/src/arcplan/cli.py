"""Command-line front end.

Commands:
  plan        shortest route between two points (report + optional SVG/JSON)
  aco         seeded colony run on the builtin 15-node graph
  verify      check the build against the stored benchmark results
  export-svg  draw scene, hazard envelope and route
  enumerate   ranked alternative routes
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from .aco import AcoParams, aco_run, bits_from_string, builtin_graph, decode_and_cost, dijkstra_shortest
from .geometry import Point, Scene, builtin_scene
from .paths import CornerProblem, Turn, TurningCircle, chain_path, solve_corner
from .planner import (
    KNOWN_TARGETS,
    RequestError,
    RouteInfeasible,
    RouteRequest,
    enumerate_candidates,
    plan_route,
)
from . import sceneio


def _parse_point(text: str) -> Point:
    name = text.strip()
    if name.upper() in KNOWN_TARGETS:
        return KNOWN_TARGETS[name.upper()]
    try:
        x, y = (float(v) for v in name.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a named point ({'/'.join(KNOWN_TARGETS)}) or 'x,y', got {text!r}"
        ) from None
    return Point(x, y)


def _load_scene(arg: Optional[str]) -> Scene:
    if arg is None:
        return builtin_scene()
    return sceneio.load_scene(arg)


def _add_route_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scene", metavar="FILE", help="scene file (default: builtin 12-obstacle scene)")
    p.add_argument("--from", dest="src", type=_parse_point, default=KNOWN_TARGETS["O"],
                   metavar="NAME|X,Y", help="start point (default O)")
    p.add_argument("--to", dest="dst", type=_parse_point, default=KNOWN_TARGETS["A"],
                   metavar="NAME|X,Y", help="goal point (default A)")


def _label(args) -> str:
    def name(p: Point) -> str:
        for k, v in KNOWN_TARGETS.items():
            if v == p:
                return k
        return f"({p.x:g},{p.y:g})"

    return f"{name(args.src)} -> {name(args.dst)}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcplan",
        description="Shortest line-and-arc paths for a point robot among fixed obstacles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_plan = sub.add_parser("plan", help="compute the shortest route")
    _add_route_args(p_plan)
    p_plan.add_argument("--engine", choices=("exact", "aco"), default="exact")
    p_plan.add_argument("--seed", type=int, default=1)
    p_plan.add_argument("--ants", type=int, default=50)
    p_plan.add_argument("--gens", type=int, default=100)
    p_plan.add_argument("--out", metavar="FILE", help="write full-precision JSON result")
    p_plan.add_argument("--svg", metavar="FILE", help="write an SVG drawing")

    p_aco = sub.add_parser("aco", help="run the colony on the builtin 15-node graph")
    p_aco.add_argument("--seed", type=int, default=1)
    p_aco.add_argument("--ants", type=int, default=50)
    p_aco.add_argument("--gens", type=int, default=100)
    p_aco.add_argument("--out", metavar="FILE", help="write the convergence curve (gen best mean)")

    p_ver = sub.add_parser("verify", help="check this build against stored benchmark results")
    p_ver.add_argument("--tolerance", type=float, default=None,
                       help="override every check tolerance (units)")

    p_svg = sub.add_parser("export-svg", help="draw scene + envelope + route")
    _add_route_args(p_svg)
    p_svg.add_argument("--engine", choices=("exact", "aco"), default="exact")
    p_svg.add_argument("--seed", type=int, default=1)
    p_svg.add_argument("--ants", type=int, default=50)
    p_svg.add_argument("--gens", type=int, default=100)
    p_svg.add_argument("--out", metavar="FILE", required=True)

    p_enum = sub.add_parser("enumerate", help="ranked alternative routes")
    _add_route_args(p_enum)
    p_enum.add_argument("--top", type=int, default=3, metavar="K")

    return parser


def _make_request(args) -> RouteRequest:
    scene = _load_scene(args.scene)
    params = AcoParams(ants=args.ants, generations=args.gens, seed=args.seed)
    return RouteRequest(args.src, args.dst, scene, engine=args.engine, aco_params=params)


def _cmd_plan(args, stdout) -> int:
    req = _make_request(args)
    plan = plan_route(req)
    stdout.write(sceneio.format_plan_report(_label(args), plan))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(sceneio.plan_to_dict(_label(args), plan), fh, indent=2)
            fh.write("\n")
    if args.svg:
        sceneio.write_svg(req.scene, plan.path, args.svg)
    return 0


def _cmd_aco(args, stdout) -> int:
    g = builtin_graph()
    res = aco_run(g, AcoParams(ants=args.ants, generations=args.gens, seed=args.seed))
    route = " -> ".join(str(n) for n in res.nodes)
    stdout.write(f"colony result (seed {args.seed}, {args.ants} ants, {args.gens} generations)\n")
    stdout.write(f"  chromosome: {res.chromosome}\n")
    stdout.write(f"  route: {route}\n")
    stdout.write(f"  cost: {res.cost:.4f}\n")
    if args.out:
        sceneio.write_curve(res, args.out)
        stdout.write(f"  curve written to {args.out}\n")
    return 0


def _cmd_export_svg(args, stdout) -> int:
    req = _make_request(args)
    plan = plan_route(req)
    sceneio.write_svg(req.scene, plan.path, args.out)
    stdout.write(f"wrote {args.out} ({_label(args)}, length {plan.length:.4f})\n")
    return 0


def _cmd_enumerate(args, stdout) -> int:
    scene = _load_scene(args.scene)
    plans = enumerate_candidates(scene, args.src, args.dst, k=args.top)
    if not plans:
        stdout.write("no feasible routes found\n")
        return 1
    stdout.write(f"{len(plans)} route(s) {_label(args)}, shortest first:\n")
    for rank, plan in enumerate(plans, start=1):
        corners = ", ".join(f"({c.center.x:g},{c.center.y:g}){c.turn.value}" for c in plan.corners)
        stdout.write(f"  {rank}. length {plan.length:.4f}  time {plan.travel_time:.4f}  corners [{corners}]\n")
    return 0


def _cmd_verify(args, stdout) -> int:
    exp = sceneio.load_expected()
    scene = sceneio.load_fixture_scene()
    failures = 0

    def check(name: str, ok: bool, detail: str) -> None:
        nonlocal failures
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        stdout.write(f"{status} {name}: {detail}\n")

    def tol(default: float) -> float:
        return args.tolerance if args.tolerance is not None else default

    # corner benchmarks
    for key in ("corner_oa", "corner_ob3"):
        e = exp[key]
        sol = solve_corner(CornerProblem(Point(*e["start"]), Point(*e["end"]), Point(*e["center"]), e["radius"]))
        t = tol(e["total_tol"])
        check(
            f"{key} total",
            abs(sol.total_length - e["total"]) <= t,
            f"{sol.total_length:.4f} vs {e['total']} (tol {t:g})",
        )
        te = tol(e["exact_tol"])
        check(
            f"{key} exact total",
            abs(sol.total_length - e["exact_total"]) <= te,
            f"{sol.total_length:.9f} vs {e['exact_total']} (tol {te:g})",
        )
        if "oracle_total" in e:
            to = tol(e["oracle_tol"])
            check(f"{key} oracle band", abs(sol.total_length - e["oracle_total"]) <= to,
                  f"{sol.total_length:.4f} vs {e['oracle_total']} (tol {to:g})")
        if "entry" in e:
            pt = tol(e["point_tol"])
            d1 = math.dist(sol.entry_tangent_point, e["entry"])
            d2 = math.dist(sol.exit_tangent_point, e["exit"])
            check(f"{key} tangent points", max(d1, d2) <= pt, f"offsets {d1:.5f}, {d2:.5f} (tol {pt:g})")
        if "first_line" in e:
            ft = tol(e["first_line_tol"])
            first = sol.path.segments[0].length
            check(f"{key} first line", abs(first - e["first_line"]) <= ft,
                  f"{first:.4f} vs {e['first_line']} (tol {ft:g})")

    # chained route benchmark
    e = exp["chain_ob"]
    circles = tuple(
        TurningCircle(Point(*c), 10.0, Turn(t)) for c, t in zip(e["centers"], e["turns"])
    )
    path = chain_path(Point(*e["start"]), circles, Point(*e["end"]))
    t = tol(e["total_tol"])
    check("chain_ob total", abs(path.length - e["total"]) <= t,
          f"{path.length:.4f} vs {e['total']} (tol {t:g})")
    te = tol(e["exact_tol"])
    check("chain_ob exact total", abs(path.length - e["exact_total"]) <= te,
          f"{path.length:.9f} vs {e['exact_total']} (tol {te:g})")
    plan = plan_route(RouteRequest(Point(*e["start"]), Point(*e["end"]), scene))
    got_centers = [list(c.center) for c in plan.corners]
    check("chain_ob corner centers", got_centers == e["centers"], f"{got_centers}")

    # planner benchmark: full O->A pipeline
    e = exp["corner_oa"]
    plan = plan_route(RouteRequest(Point(*e["start"]), Point(*e["end"]), scene))
    t = tol(e["total_tol"])
    check("plan O->A total", abs(plan.length - e["total"]) <= t,
          f"{plan.length:.4f} vs {e['total']} (tol {t:g})")

    # graph benchmarks
    e = exp["graph_optimum"]
    g = builtin_graph()
    nodes, cost = dijkstra_shortest(g, 1, 15)
    check("graph optimum", list(nodes) == e["path"] and cost == e["cost"],
          f"{'-'.join(map(str, nodes))} cost {cost:g}")
    dn, dc = decode_and_cost(bits_from_string(e["chromosome"]), g)
    check("chromosome decode", list(dn) == e["path"] and dc == e["cost"],
          f"{e['chromosome']} -> {'-'.join(map(str, dn))} cost {dc:g}")

    stdout.write(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failure(s)\n")
    return 0 if failures == 0 else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stdout = sys.stdout
    try:
        if args.command == "plan":
            return _cmd_plan(args, stdout)
        if args.command == "aco":
            return _cmd_aco(args, stdout)
        if args.command == "verify":
            return _cmd_verify(args, stdout)
        if args.command == "export-svg":
            return _cmd_export_svg(args, stdout)
        if args.command == "enumerate":
            return _cmd_enumerate(args, stdout)
    except (RequestError, sceneio.SceneFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RouteInfeasible as e:
        blockers = f" (blocking obstacles: {', '.join(map(str, e.blockers))})" if e.blockers else ""
        print(f"infeasible: {e}{blockers}", file=sys.stderr)
        return 3
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
