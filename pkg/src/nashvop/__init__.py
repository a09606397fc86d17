"""Exact equilibrium sets of N-player linear games on polyhedra.

Strategies live in boxes intersected with H-polyhedra, costs are linear
(scalar- or vector-valued with polyhedral ordering cones), and every
computation runs in exact rational arithmetic.  Equilibrium sets come out
as finite unions of polytopes with exact vertices.

The pipeline: each player's best responses form the Pareto set of a
multi-objective LP (their cost against everyone's strategy coordinates);
intersecting those graphs yields the equilibrium set.  Games where each
player carries her own constraint set get a superset bound (intersection
game), a subset bound (convex-hull union game), and — for scalar costs —
the exact set via an LP-based improvement filter in between.
"""

from .cones import dual_generators, scalarized_objective
from .costexpr import (
    cost_variables,
    evaluate_cost,
    format_cost,
    linear_expression,
    parse_cost,
)
from .engine import (
    Exactness,
    FilterReport,
    NashSet,
    RemovedPiece,
    best_response_graph,
    filter_set_M,
    generalized_ne,
    intersection_superset,
    point_check_details,
    shared_constraint_ne,
    union_subset,
    vector_point_check,
)
from .errors import (
    CostSyntaxError,
    DimensionMismatch,
    EmptyDomain,
    EmptyGrid,
    EmptyInput,
    EmptySet,
    InfeasibleCandidate,
    InfeasiblePoint,
    NashvopError,
    UnboundedInput,
    UnknownVariable,
)
from .gamefile import GameDocument, load_game, load_result, save_result
from .games import (
    Diagnostic,
    GameKind,
    LinearGame,
    PerPlayerConstraints,
    Player,
    SharedConstraints,
    feasible_set,
    make_game,
    stacked_objective,
    validate,
)
from .molp import (
    EfficientFace,
    ParetoDecisionSet,
    efficient_vertices,
    maximal_efficient_faces,
    pareto_decision_set,
)
from .oracle import GridSpec, check_point, check_point_detail, grid_nash_oracle
from .parametric import CriticalRegion, best_response_pieces, parametric_best_response
from .polyhedra import (
    HPolyhedron,
    Polytope,
    VPolytope,
    intersect,
    irredundant_union,
    polytope_from_hrep,
    polytope_from_points,
)
from .rationals import Q, Rational, as_rational, rational_str
from .simplex import LpProblem, LpSolution, LpStatus, efficiency_test, solve_lp

__all__ = [name for name in dir() if not name.startswith("_")]
