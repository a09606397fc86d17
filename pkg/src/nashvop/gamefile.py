"""Game-file ingestion and result serialization (schema ``nashvop-1``).

A game file is JSON.  Every number that means a rational is either an
integer or a string ``"p/q"``; floats are rejected outright so nothing is
ever rounded on the way in.  Shape::

    {
      "schema": "nashvop-1",
      "players": [
        {"dim": 2,
         "payoff_dim": 1,                  // optional, default 1
         "objective": [[-2, -1, 0, 0]],    // payoff_dim rows over ALL joint vars
         "sense": "min",                   // optional; "max" negates the rows
         "dual_cone_generators": [[1]]},   // optional, default identity
        ...
      ],
      "constraints": {"shared": {"A": [...], "b": [...]}}
                   | {"per_player": [{"A": ..., "b": ...}, ...]},
      "boxes": [[0, 5], [0, "5/2"], ...],
      "oracle_costs": ["-1 + 2*x[1][1] + ...", ...]   // optional
    }

``objective`` may be omitted for a player when ``oracle_costs`` carries
the game (non-polyhedral costs); such files only support the grid-oracle
commands.  Result files are emitted with the same rational-string
discipline and a stable key order, so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Tuple

from .costexpr import Expr, parse_cost
from .errors import CostSyntaxError, NashvopError, UnknownVariable
from .games import (
    Constraints,
    Diagnostic,
    LinearGame,
    PerPlayerConstraints,
    Player,
    SharedConstraints,
    make_game,
)
from .polyhedra import HPolyhedron, Polytope
from .rationals import Rational, as_rational, rational_str

SCHEMA = "nashvop-1"


@dataclass(frozen=True)
class GameDocument:
    """A loaded game file: always enough for the oracle, and a full
    :class:`LinearGame` when every player supplied objective rows."""

    dims: Tuple[int, ...]
    boxes: tuple
    constraints: Constraints
    game: Optional[LinearGame]
    oracle_costs: Optional[Tuple[Expr, ...]]

    @property
    def n(self) -> int:
        return sum(self.dims)

    def regions(self):
        """Constraint regions in the oracle's convention: one shared
        H-polyhedron, or a list with one region per player."""
        if isinstance(self.constraints, SharedConstraints):
            return self.constraints.region
        return list(self.constraints.regions)


class _LoadError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.diagnostic = Diagnostic(code, message)


def _reject_float(text: str):
    raise _LoadError(
        "float-literal",
        "float literal %s: write rationals as integers or 'p/q' strings" % text,
    )


def _rat(value, where: str) -> Rational:
    try:
        return as_rational(value)
    except (TypeError, ValueError) as e:
        raise _LoadError("bad-rational", "%s: %s" % (where, e)) from None


def _matrix(value, rows: Optional[int], cols: int, where: str):
    if not isinstance(value, list) or (rows is not None and len(value) != rows):
        raise _LoadError(
            "dimension-mismatch",
            "%s: expected %s rows, got %r"
            % (where, "some" if rows is None else rows,
               len(value) if isinstance(value, list) else type(value).__name__),
        )
    out = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise _LoadError(
                "dimension-mismatch",
                "%s[%d]: expected %d entries" % (where, r, cols),
            )
        out.append(tuple(_rat(v, "%s[%d][%d]" % (where, r, c))
                         for c, v in enumerate(row)))
    return tuple(out)


def _hpoly(obj, n: int, where: str) -> HPolyhedron:
    if not isinstance(obj, dict) or "A" not in obj or "b" not in obj:
        raise _LoadError("bad-constraints", "%s must be {A, b}" % where)
    a = _matrix(obj["A"], None, n, where + ".A")
    if not isinstance(obj["b"], list) or len(obj["b"]) != len(a):
        raise _LoadError(
            "dimension-mismatch", "%s.b must have one entry per row of A" % where
        )
    b = tuple(_rat(v, "%s.b[%d]" % (where, k)) for k, v in enumerate(obj["b"]))
    eq = None
    if "eq" in obj:
        if (not isinstance(obj["eq"], list) or len(obj["eq"]) != len(a)
                or not all(isinstance(f, bool) for f in obj["eq"])):
            raise _LoadError(
                "bad-constraints", "%s.eq must be one boolean per row" % where
            )
        eq = tuple(obj["eq"])
    return HPolyhedron.from_rows(a, b, eq=eq, n=n)


def _load(doc) -> GameDocument:
    if not isinstance(doc, dict):
        raise _LoadError("bad-game-file", "top level must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise _LoadError(
            "unsupported-schema",
            "expected schema %r, got %r" % (SCHEMA, doc.get("schema")),
        )

    raw_players = doc.get("players")
    if not isinstance(raw_players, list) or not raw_players:
        raise _LoadError("bad-game-file", "'players' must be a non-empty list")
    dims = []
    for i, p in enumerate(raw_players):
        d = p.get("dim") if isinstance(p, dict) else None
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise _LoadError(
                "bad-game-file", "players[%d].dim must be a positive integer" % i
            )
        dims.append(d)
    n = sum(dims)

    players = []
    have_all_objectives = True
    for i, p in enumerate(raw_players):
        where = "players[%d]" % i
        payoff_dim = p.get("payoff_dim", 1)
        if not isinstance(payoff_dim, int) or isinstance(payoff_dim, bool) or payoff_dim < 1:
            raise _LoadError(
                "bad-game-file", "%s.payoff_dim must be a positive integer" % where
            )
        sense = p.get("sense", "min")
        if sense not in ("min", "max"):
            raise _LoadError("bad-game-file", "%s.sense must be 'min' or 'max'" % where)
        gens = None
        if "dual_cone_generators" in p:
            gens = _matrix(p["dual_cone_generators"], None, payoff_dim,
                           where + ".dual_cone_generators")
            if not gens:
                raise _LoadError(
                    "bad-game-file",
                    "%s.dual_cone_generators must have at least one row" % where,
                )
        if "objective" in p:
            rows = _matrix(p["objective"], payoff_dim, n, where + ".objective")
            if sense == "max":
                rows = tuple(tuple(-v for v in row) for row in rows)
            players.append(Player.make(dims[i], rows, gens))
        else:
            have_all_objectives = False
            players.append(None)

    raw_cons = doc.get("constraints")
    if raw_cons is None:
        constraints: Constraints = SharedConstraints(
            HPolyhedron.from_rows((), (), n=n)
        )
    elif isinstance(raw_cons, dict) and "shared" in raw_cons:
        constraints = SharedConstraints(_hpoly(raw_cons["shared"], n, "constraints.shared"))
    elif isinstance(raw_cons, dict) and "per_player" in raw_cons:
        lst = raw_cons["per_player"]
        if not isinstance(lst, list) or len(lst) != len(dims):
            raise _LoadError(
                "bad-constraints",
                "constraints.per_player needs exactly one entry per player",
            )
        constraints = PerPlayerConstraints(tuple(
            _hpoly(obj, n, "constraints.per_player[%d]" % i)
            for i, obj in enumerate(lst)
        ))
    else:
        raise _LoadError(
            "bad-constraints", "constraints must contain 'shared' or 'per_player'"
        )

    raw_boxes = doc.get("boxes")
    if not isinstance(raw_boxes, list) or len(raw_boxes) != n:
        raise _LoadError("missing-box", "'boxes' must list one [lo, hi] pair "
                                        "per joint coordinate (%d)" % n)
    boxes = []
    for k, pair in enumerate(raw_boxes):
        if not isinstance(pair, list) or len(pair) != 2:
            raise _LoadError("missing-box", "boxes[%d] must be [lo, hi]" % k)
        lo = _rat(pair[0], "boxes[%d][0]" % k)
        hi = _rat(pair[1], "boxes[%d][1]" % k)
        if hi < lo:
            raise _LoadError("missing-box", "boxes[%d] is empty (lo > hi)" % k)
        boxes.append((lo, hi))

    oracle_costs = None
    if "oracle_costs" in doc:
        raw = doc["oracle_costs"]
        if not isinstance(raw, list) or len(raw) != len(dims):
            raise _LoadError(
                "bad-cost", "'oracle_costs' needs exactly one expression per player"
            )
        parsed = []
        for i, src in enumerate(raw):
            if not isinstance(src, str):
                raise _LoadError("bad-cost", "oracle_costs[%d] must be a string" % i)
            try:
                parsed.append(parse_cost(src))
            except CostSyntaxError as e:
                raise _LoadError(
                    "bad-cost", "oracle_costs[%d]: %s" % (i, e)
                ) from None
            except UnknownVariable as e:
                raise _LoadError("bad-cost", "oracle_costs[%d]: %s" % (i, e)) from None
        oracle_costs = tuple(parsed)

    game = None
    if have_all_objectives:
        game = make_game(players, constraints, boxes)
    return GameDocument(
        dims=tuple(dims),
        boxes=tuple(boxes),
        constraints=constraints,
        game=game,
        oracle_costs=oracle_costs,
    )


def load_game(path: str):
    """Read a game file.  Returns ``(GameDocument, [])`` on success or
    ``(None, [Diagnostic, ...])`` when the file is unusable."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh, parse_float=_reject_float)
    except _LoadError as e:
        return None, [e.diagnostic]
    except (OSError, json.JSONDecodeError) as e:
        return None, [Diagnostic("bad-game-file", str(e))]
    try:
        return _load(doc), []
    except _LoadError as e:
        return None, [e.diagnostic]
    except NashvopError as e:
        return None, [Diagnostic("bad-game-file", str(e))]


# --------------------------------------------------------------------------
# result payloads


def _vec_payload(v) -> list:
    return [rational_str(x) for x in v]


def polytope_payload(p: Polytope) -> dict:
    """Vertices, an inequality-only H-representation (equality rows are
    expanded into opposite inequality pairs), and the affine dimension."""
    a_rows = []
    b_vals = []
    h = p.hrep
    for (row, rhs, is_eq) in zip(h.a, h.b, h.eq):
        a_rows.append(_vec_payload(row))
        b_vals.append(rational_str(rhs))
        if is_eq:
            a_rows.append(_vec_payload(tuple(-v for v in row)))
            b_vals.append(rational_str(-rhs))
    return {
        "vertices": [_vec_payload(v) for v in p.vertices],
        "hrep": {"A": a_rows, "b": b_vals},
        "dim": p.dim,
    }


def point_payload(v) -> dict:
    """A single point as a 0-dimensional component."""
    a_rows = []
    b_vals = []
    for k, x in enumerate(v):
        row = [rational_str(0)] * len(v)
        row[k] = rational_str(1)
        a_rows.append(row)
        b_vals.append(rational_str(x))
        row = [rational_str(0)] * len(v)
        row[k] = rational_str(-1)
        a_rows.append(row)
        b_vals.append(rational_str(-x))
    return {"vertices": [_vec_payload(v)], "hrep": {"A": a_rows, "b": b_vals}, "dim": 0}


def diagnostics_payload(diags) -> list:
    return [{"code": d.code, "message": d.message} for d in diags]


def nash_payload(mode, exactness, components, *, subset_components=None,
                 filter_report=None, diagnostics=()) -> dict:
    out = {
        "schema": SCHEMA,
        "mode": mode,
        # accept either the engine's exactness enum or its string value
        "exactness": getattr(exactness, "value", exactness),
        "components": [polytope_payload(c) for c in components],
    }
    if subset_components is not None:
        out["subset_components"] = [polytope_payload(c) for c in subset_components]
    if filter_report is not None:
        out["filter_report"] = {
            "removed": [
                {
                    "player": piece.player + 1,
                    "vertices": [_vec_payload(v) for v in piece.polytope.vertices],
                    "witness": _vec_payload(piece.witness),
                }
                for piece in filter_report.removed
            ],
        }
    out["diagnostics"] = diagnostics_payload(diagnostics)
    return out


def decision_payload(player: int, faces, diagnostics=()) -> dict:
    """Best-response graph of one player (1-based in the payload);
    ``faces`` are the maximal efficient faces as polytopes."""
    return {
        "schema": SCHEMA,
        "mode": "best-response",
        "player": player + 1,
        "exactness": "exact",
        "components": [polytope_payload(f) for f in faces],
        "diagnostics": diagnostics_payload(diagnostics),
    }


def oracle_payload(step, points, diagnostics=()) -> dict:
    return {
        "schema": SCHEMA,
        "mode": "oracle",
        "step": rational_str(as_rational(step)),
        "exactness": "grid",
        "components": [point_payload(p) for p in points],
        "diagnostics": diagnostics_payload(diagnostics),
    }


def dumps_result(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def save_result(payload: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_result(payload))


def load_result(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def parse_point(text: str, n: int):
    """Parse ``"p/q,p/q,…"`` into an n-tuple of rationals."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != n:
        raise ValueError("expected %d comma-separated coordinates, got %d"
                         % (n, len(parts)))
    return tuple(as_rational(s) for s in parts)
