"""Command-line front end.

Four subcommands over one JSON game file format:

* ``solve``          — equilibrium sets (shared / intersection / union /
                       generalized modes)
* ``best-response``  — one player's best-response graph as efficient faces
* ``oracle``         — brute-force grid search, any cost expressions
* ``check``          — test a single point (exact LP route for linear
                       games, grid deviations otherwise)

Exit codes: 0 success / equilibrium, 2 usage or validation problem,
3 check verdict "not an equilibrium", 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from . import engine, gamefile, oracle
from .cones import scalarized_objective
from .costexpr import linear_expression
from .errors import InfeasiblePoint, NashvopError
from .games import Diagnostic, feasible_set, validate
from .molp import pareto_decision_set
from .rationals import as_rational, rational_str

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_REJECTED = 3


def _print_diagnostics(diags) -> None:
    for d in diags:
        print("diagnostic [%s] %s" % (d.code, d.message), file=sys.stderr)


def _emit(payload: dict, out_path, verbose: bool) -> None:
    if out_path:
        gamefile.save_result(payload, out_path)
        print("result written to %s" % out_path)
    if verbose:
        sys.stdout.write(gamefile.dumps_result(payload))


def _point_str(v) -> str:
    return "(" + ", ".join(rational_str(x) for x in v) + ")"


def _summarize_components(components) -> None:
    print("components: %d" % len(components))
    for idx, comp in enumerate(components):
        verts = ", ".join(_point_str(v) for v in comp.vertices)
        print("  [%d] dim %d: %s" % (idx, comp.dim, verts))


def _load_linear_game(path):
    """Shared load/validate path for the exact-engine commands."""
    doc, diags = gamefile.load_game(path)
    if doc is None:
        _print_diagnostics(diags)
        return None, EXIT_INVALID
    if doc.game is None:
        _print_diagnostics([Diagnostic(
            "no-objective",
            "some player has no objective rows; only 'oracle' and 'check --step' "
            "work for this game file",
        )])
        return None, EXIT_INVALID
    problems = validate(doc.game)
    if problems:
        _print_diagnostics(problems)
        return None, EXIT_INVALID
    return doc, EXIT_OK


def cmd_solve(args) -> int:
    doc, rc = _load_linear_game(args.game)
    if doc is None:
        return rc
    game = doc.game
    mode = args.mode
    notes = []

    if mode == "shared":
        if not game.is_shared:
            _print_diagnostics([Diagnostic(
                "not-shared", "game has per-player constraints; "
                "use --mode intersection, union, or generalized")])
            return EXIT_INVALID
        ne = engine.shared_constraint_ne(game)
        payload = gamefile.nash_payload(mode, ne.exactness.value, ne.components)
    elif mode == "intersection":
        ne = engine.intersection_superset(game)
        payload = gamefile.nash_payload(mode, ne.exactness.value, ne.components)
    elif mode == "union":
        ne = engine.union_subset(game)
        payload = gamefile.nash_payload(mode, ne.exactness.value, ne.components)
    else:  # generalized
        if game.is_shared:
            ne = engine.shared_constraint_ne(game)
            notes.append(Diagnostic(
                "shared-constraints",
                "all players share one constraint set, so the shared-game "
                "solution is already exact"))
            payload = gamefile.nash_payload(
                mode, ne.exactness.value, ne.components, diagnostics=notes)
        elif not game.is_scalar:
            sup = engine.intersection_superset(game)
            sub = engine.union_subset(game)
            notes.append(Diagnostic(
                "vector-filter-unavailable",
                "the improvement filter needs scalar costs; reporting the "
                "superset with the union-game subset alongside"))
            payload = gamefile.nash_payload(
                mode, sup.exactness.value, sup.components,
                subset_components=sub.components, diagnostics=notes)
            ne = sup
        else:
            ne, report = engine.generalized_ne(game)
            payload = gamefile.nash_payload(
                mode, ne.exactness.value, ne.components, filter_report=report)
            if report.removed:
                print("filter removed %d piece(s)" % len(report.removed))

    print("mode: %s" % mode)
    print("exactness: %s" % payload["exactness"])
    _summarize_components(ne.components)
    if "subset_components" in payload:
        sub_count = len(payload["subset_components"])
        print("subset bound components: %d" % sub_count)
    for note in notes:
        print("note [%s] %s" % (note.code, note.message))
    _emit(payload, args.out, args.verbose)
    return EXIT_OK


def cmd_best_response(args) -> int:
    doc, rc = _load_linear_game(args.game)
    if doc is None:
        return rc
    game = doc.game
    if not (1 <= args.player <= len(game.players)):
        print("error: --player must be between 1 and %d" % len(game.players),
              file=sys.stderr)
        return EXIT_INVALID
    if args.set == "shared" and not game.is_shared:
        _print_diagnostics([Diagnostic(
            "not-shared", "game has per-player constraints; use --set intersection")])
        return EXIT_INVALID
    i = args.player - 1
    region = feasible_set(game, "intersection")
    graph = pareto_decision_set(scalarized_objective(game, i), region)
    payload = gamefile.decision_payload(i, graph.faces)
    print("player %d best-response graph over the %s set" % (args.player, args.set))
    print("faces: %d   extremal points: %d"
          % (len(graph.faces), len(graph.extremal_points)))
    _summarize_components(graph.faces)
    _emit(payload, args.out, args.verbose)
    return EXIT_OK


def _oracle_costs(doc) -> tuple:
    """Expressions from the file, or built from linear objective rows."""
    if doc.oracle_costs is not None:
        return doc.oracle_costs
    if doc.game is None or not doc.game.is_scalar:
        raise NashvopError(
            "this game has no oracle_costs and no scalar objective rows")
    return tuple(linear_expression(p.cost[0], doc.dims) for p in doc.game.players)


def _parse_step(text: str):
    step = as_rational(text)
    if step <= 0:
        raise ValueError("--step must be a positive rational, got %s" % text)
    return step


def cmd_oracle(args) -> int:
    doc, diags = gamefile.load_game(args.game)
    if doc is None:
        _print_diagnostics(diags)
        return EXIT_INVALID
    try:
        step = _parse_step(args.step)
    except (ValueError, TypeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    costs = _oracle_costs(doc)
    grid = oracle.GridSpec.uniform(step, doc.n)
    points = oracle.grid_nash_oracle(costs, doc.dims, doc.boxes, grid,
                                     constraints=doc.regions())
    payload = gamefile.oracle_payload(step, points)
    print("grid step: %s" % rational_str(step))
    print("accepted points: %d" % len(points))
    for p in points:
        print("  %s" % _point_str(p))
    _emit(payload, args.out, args.verbose)
    return EXIT_OK


def cmd_check(args) -> int:
    doc, diags = gamefile.load_game(args.game)
    if doc is None:
        _print_diagnostics(diags)
        return EXIT_INVALID
    try:
        point = gamefile.parse_point(args.point, doc.n)
    except (ValueError, TypeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INVALID

    if doc.game is not None:
        # exact route: per-player slice LPs, works for vector payoffs too
        try:
            details = engine.point_check_details(doc.game, point)
        except InfeasiblePoint as e:
            print("INFEASIBLE: %s" % e)
            return EXIT_REJECTED
        bad = [(i, w) for i, (ok, w) in enumerate(details) if not ok]
        if not bad:
            print("EQUILIBRIUM")
            return EXIT_OK
        player, deviation = bad[0]
        print("NOT an equilibrium: player %d improves by moving to %s"
              % (player + 1, _point_str(deviation)))
        return EXIT_REJECTED

    if args.step is None:
        print("error: this game needs --step for a grid-based check",
              file=sys.stderr)
        return EXIT_INVALID
    try:
        step = _parse_step(args.step)
    except (ValueError, TypeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    costs = _oracle_costs(doc)
    grid = oracle.GridSpec.uniform(step, doc.n)
    try:
        ok, player, deviation = oracle.check_point_detail(
            costs, doc.dims, doc.boxes, grid, point, constraints=doc.regions())
    except InfeasiblePoint as e:
        print("INFEASIBLE: %s" % e)
        return EXIT_REJECTED
    if ok:
        print("EQUILIBRIUM")
        return EXIT_OK
    print("NOT an equilibrium: player %d improves by moving to %s"
          % (player + 1, _point_str(deviation)))
    return EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nashvop",
        description="Exact equilibrium sets of linear games on polyhedra.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true",
                        help="print the full result JSON to stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="compute an equilibrium set")
    p.add_argument("--game", required=True, help="game file (JSON)")
    p.add_argument("--mode", required=True,
                   choices=["shared", "intersection", "union", "generalized"])
    p.add_argument("--out", help="write the result JSON here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("best-response", parents=[common],
                       help="one player's best-response graph")
    p.add_argument("--game", required=True)
    p.add_argument("--player", type=int, required=True, help="1-based player index")
    p.add_argument("--set", default="intersection",
                   choices=["shared", "intersection"],
                   help="feasible set to optimize over")
    p.add_argument("--out")
    p.set_defaults(func=cmd_best_response)

    p = sub.add_parser("oracle", parents=[common],
                       help="grid brute-force equilibrium search")
    p.add_argument("--game", required=True)
    p.add_argument("--step", required=True, help="grid step as p/q")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", parents=[common],
                       help="test whether one point is an equilibrium")
    p.add_argument("--game", required=True)
    p.add_argument("--point", required=True,
                   help="comma-separated rational coordinates")
    p.add_argument("--step", help="deviation grid step for non-linear games")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NashvopError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    except Exception as e:  # pragma: no cover - bug trap
        print("internal error: %r" % e, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
