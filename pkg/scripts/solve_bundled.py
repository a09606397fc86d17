#!/usr/bin/env python3
"""Solve every bundled game and print a compact summary of each.

For coupled-constraint scalar games this shows all three set-valued
answers side by side — the subset bound from the union-hull game, the
intersection-game superset, and the exact filtered set — together with
which player's improvement removed each discarded piece.
"""

import argparse
from pathlib import Path

from nashvop import gamefile
from nashvop.engine import (
    generalized_ne,
    intersection_superset,
    shared_constraint_ne,
    union_subset,
)
from nashvop.oracle import GridSpec, grid_nash_oracle
from nashvop.rationals import Q, rational_str

GAMES = Path(__file__).resolve().parent.parent / "games"


def pt(v):
    return "(" + ", ".join(rational_str(c) for c in v) + ")"


def comp(c):
    if len(c.vertices) == 1:
        return pt(c.vertices[0])
    return "hull{" + "; ".join(pt(v) for v in c.vertices) + "}"


def show(label, comps):
    print("  %s: %d component(s)" % (label, len(comps)))
    for c in comps:
        print("    %s" % comp(c))


def summarize(path: Path) -> None:
    doc, diags = gamefile.load_game(str(path))
    if doc is None:
        for d in diags:
            print("  [%s] %s" % (d.code, d.message))
        return
    print("%s  (%d players, %d joint coordinates)"
          % (path.name, len(doc.dims), doc.n))
    game = doc.game
    if game is None:
        out = grid_nash_oracle(doc.oracle_costs, doc.dims, doc.boxes,
                               GridSpec.uniform(Q(1, 4), doc.n),
                               constraints=doc.regions())
        print("  no linear objective rows; grid oracle at step 1/4")
        print("  accepted grid points: %s"
              % (", ".join(pt(p) for p in out) or "none"))
        return
    if game.is_shared:
        ne = shared_constraint_ne(game)
        show("equilibrium set (exact)", ne.components)
        return
    show("union-game subset", union_subset(game).components)
    show("intersection-game superset", intersection_superset(game).components)
    if game.is_scalar:
        ne, report = generalized_ne(game)
        show("exact set after filtering", ne.components)
        for piece in report.removed:
            print("    removed %s  (player %d improves)"
                  % (comp(piece.polytope), piece.player + 1))
    else:
        print("  (vector costs: no scalar filter; "
              "the bounds above bracket the exact set)")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("games", nargs="*", type=Path,
                    help="game files (default: the bundled set)")
    args = ap.parse_args(argv)
    paths = args.games or sorted(GAMES.glob("*.json"))
    for k, path in enumerate(paths):
        if k:
            print()
        summarize(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
