#!/usr/bin/env python3
"""Sweep the brute-force grid step on one game.

The grid oracle only compares grid-aligned deviations, so a coarse grid
can accept points no exact method would; halving the step repeatedly
shows the accepted set settling onto the true equilibria.
"""

import argparse
from pathlib import Path

from nashvop import gamefile
from nashvop.costexpr import linear_expression
from nashvop.oracle import GridSpec, grid_nash_oracle
from nashvop.rationals import Q, rational_str

GAMES = Path(__file__).resolve().parent.parent / "games"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--game", default=str(GAMES / "odds_evens.json"))
    ap.add_argument("--max-denominator", type=int, default=16,
                    help="finest step swept is 1/MAX_DENOMINATOR (default 16)")
    args = ap.parse_args(argv)

    doc, diags = gamefile.load_game(args.game)
    if doc is None:
        for d in diags:
            print("[%s] %s" % (d.code, d.message))
        return 2
    costs = doc.oracle_costs
    if costs is None:
        costs = tuple(linear_expression(p.cost[0], doc.dims)
                      for p in doc.game.players)

    den = 1
    while den <= args.max_denominator:
        out = grid_nash_oracle(costs, doc.dims, doc.boxes,
                               GridSpec.uniform(Q(1, den), doc.n),
                               constraints=doc.regions())
        pts = ", ".join(
            "(" + ", ".join(rational_str(c) for c in p) + ")" for p in out)
        print("step 1/%-3d accepted %2d point(s)%s"
              % (den, len(out), "  " + pts if pts else ""))
        den *= 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
