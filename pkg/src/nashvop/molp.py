"""Complete solution of multi-objective linear programs over polytopes.

The Pareto-optimal set of ``min G x`` over a polytope is a union of faces.
We find it exactly:

1. classify every extreme point by the LP efficiency test;
2. close the active sets of the efficient vertices under pairwise
   intersection — every efficient face is recovered from the common active
   set of its own vertices, so this candidate list is complete;
3. a candidate face (all of whose vertices are efficient) is efficient iff
   its barycenter is, because efficiency at a relative-interior point
   forces efficiency of the whole face;
4. keep the faces maximal under vertex-set inclusion.

A face lying in several maximal efficient faces is thereby accounted to
all of them — enumeration works on faces, not on a partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polyhedra import Polytope, polytope_from_points, vertex_active_sets
from .rationals import ZERO
from .simplex import efficiency_test


@dataclass(frozen=True)
class EfficientFace:
    polytope: Polytope
    spanning_vertices: tuple
    maximal: bool


@dataclass(frozen=True)
class ParetoDecisionSet:
    faces: tuple
    """Maximal efficient faces as polytopes, canonically ordered."""

    @property
    def extremal_points(self) -> tuple:
        out = set()
        for f in self.faces:
            out.update(f.vertices)
        return tuple(sorted(out))


def efficient_vertices(objective: Sequence[Sequence], x: Polytope) -> tuple:
    """Extreme points of ``x`` that are Pareto-optimal for ``min objective``."""
    return tuple(v for v in x.vrep.vertices
                 if efficiency_test(v, objective, x.hrep).efficient)


def maximal_efficient_faces(objective: Sequence[Sequence], x: Polytope,
                            efficient: Sequence) -> tuple:
    eff = set(efficient)
    if not eff:
        return ()
    acts = vertex_active_sets(x)

    closure = {acts[v] for v in efficient}
    frontier = list(closure)
    while frontier:
        fresh = []
        for j in frontier:
            for k in list(closure):
                meet = j & k
                if meet not in closure:
                    closure.add(meet)
                    fresh.append(meet)
        frontier = fresh

    candidates: dict[tuple, frozenset] = {}
    for j in sorted(closure, key=lambda s: (len(s), sorted(s))):
        spanned = tuple(v for v in x.vrep.vertices if acts[v] >= j)
        if spanned and spanned not in candidates:
            candidates[spanned] = j

    efficient_faces = []
    for spanned in candidates:
        if any(v not in eff for v in spanned):
            continue
        if len(spanned) > 1:
            k = len(spanned)
            bary = tuple(sum(col, ZERO) / k for col in zip(*spanned))
            if not efficiency_test(bary, objective, x.hrep).efficient:
                continue
        efficient_faces.append(spanned)

    vertex_sets = [set(f) for f in efficient_faces]
    out = []
    for f, fs in zip(efficient_faces, vertex_sets):
        if any(fs < other for other in vertex_sets):
            continue
        out.append(EfficientFace(polytope_from_points(f), tuple(sorted(f)), True))
    out.sort(key=lambda face: face.polytope.vrep.vertices)
    return tuple(out)


def pareto_decision_set(objective: Sequence[Sequence], x: Polytope) -> ParetoDecisionSet:
    eff = efficient_vertices(objective, x)
    faces = maximal_efficient_faces(objective, x, eff)
    return ParetoDecisionSet(tuple(f.polytope for f in faces))
