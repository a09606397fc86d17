"""Exact polyhedral geometry: representations, conversions, set algebra.

Everything here is a bounded polytope over exact rationals.  The two
workhorse conversions are

* ``dd_hrep_to_vrep`` — incremental double description: start from the
  bounding box, insert halfspaces one by one, splitting vertices by sign
  and generating cut points on edges between strictly-separated adjacent
  vertices.  Adjacency of two vertices is decided exactly: the rank of
  their common active rows equals n-1.

* ``hull_vrep_to_hrep`` — convex hull by polarity: reduce to a
  full-dimensional chart of the affine hull (pivot coordinates of the
  reduced difference matrix), translate the barycenter to the origin, and
  run double description on the polar dual, whose vertices are exactly the
  facet normals.

Both directions are deterministic; canonical form for a polytope is its
lexicographically sorted tuple of extreme points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, EmptyInput, UnboundedInput
from .linalg import (
    QMatrix,
    QVector,
    dot,
    kernel_basis,
    primitive,
    rank,
    rref,
    unit,
    vec,
    vec_sub,
    zeros,
)
from .rationals import Q, Rational, ZERO


@dataclass(frozen=True)
class HPolyhedron:
    """Finite system ``a_i . x <= b_i`` (or ``= b_i`` where flagged).

    ``n`` is the ambient dimension; it is stored explicitly so that systems
    with no rows (the whole space) are representable.
    """

    n: int
    a: QMatrix
    b: QVector
    eq: tuple

    @staticmethod
    def from_rows(a: Iterable[Iterable], b: Iterable, eq: Iterable[bool] | None = None,
                  n: int | None = None) -> "HPolyhedron":
        rows = tuple(vec(r) for r in a)
        rhs = vec(b)
        if n is None:
            if not rows:
                raise ValueError("ambient dimension required for an empty system")
            n = len(rows[0])
        flags = tuple(bool(f) for f in eq) if eq is not None else (False,) * len(rows)
        h = HPolyhedron(n, rows, rhs, flags)
        h._validate()
        return h

    def _validate(self) -> None:
        if not (len(self.a) == len(self.b) == len(self.eq)):
            raise DimensionMismatch("row/rhs/flag counts differ")
        for row in self.a:
            if len(row) != self.n:
                raise DimensionMismatch(
                    f"row of width {len(row)} in a {self.n}-dimensional system")

    @property
    def m(self) -> int:
        return len(self.a)

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.n:
            raise DimensionMismatch("point/system dimension mismatch")
        for row, rhs, is_eq in zip(self.a, self.b, self.eq):
            v = dot(row, x)
            if (v != rhs) if is_eq else (v > rhs):
                return False
        return True

    def with_rows(self, a: Iterable[Iterable], b: Iterable,
                  eq: Iterable[bool] | None = None) -> "HPolyhedron":
        """A new system with extra rows appended."""
        extra = HPolyhedron.from_rows(a, b, eq, n=self.n)
        return HPolyhedron(self.n, self.a + extra.a, self.b + extra.b,
                           self.eq + extra.eq)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of finitely many points, stored lex-sorted."""

    vertices: tuple

    @staticmethod
    def from_points(points: Iterable[Sequence]) -> "VPolytope":
        return VPolytope(tuple(sorted(set(vec(p) for p in points))))

    @property
    def is_empty(self) -> bool:
        return not self.vertices


@dataclass(frozen=True, eq=False)
class Polytope:
    """A nonempty bounded polytope carrying both representations.

    Identity is the canonical one: two polytopes are equal iff their sorted
    extreme-point tuples coincide.
    """

    hrep: HPolyhedron
    vrep: VPolytope
    dim: int

    @property
    def vertices(self) -> tuple:
        return self.vrep.vertices

    @property
    def n(self) -> int:
        return self.hrep.n

    def contains(self, x: Sequence) -> bool:
        return self.hrep.contains(x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.vrep.vertices == other.vrep.vertices

    def __hash__(self) -> int:
        return hash(self.vrep.vertices)

    def __repr__(self) -> str:  # compact: vertices carry the identity
        return f"Polytope(dim={self.dim}, vertices={list(self.vrep.vertices)!r})"


# ---------------------------------------------------------------------------
# row canonicalization


def canonical_ineq(a: Sequence, b) -> tuple:
    """Canonical integer form of ``a.x <= b`` (primitive, orientation kept)."""
    ints = primitive(tuple(a) + (b,))
    return (tuple(Q(x) for x in ints[:-1]), Q(ints[-1]))


def canonical_eq(a: Sequence, b) -> tuple:
    """Canonical integer form of ``a.x = b`` (first nonzero coefficient > 0)."""
    row, rhs = canonical_ineq(a, b)
    lead = next((x for x in row if x != 0), None)
    if lead is not None and lead < 0:
        row, rhs = tuple(-x for x in row), -rhs
    return (row, rhs)


def expand_to_inequalities(h: HPolyhedron):
    """All rows as inequalities (equalities become a <=/>= pair).

    Returns (rows, infeasible) where rows is a deduped, canonically sorted
    list of (a, b) pairs with a != 0, and infeasible is True when a trivial
    row (0 <= b with b < 0) already shows the system is empty.
    """
    out = set()
    for a, b, is_eq in zip(h.a, h.b, h.eq):
        if all(x == 0 for x in a):
            if b < 0 or (is_eq and b != 0):
                return [], True
            continue
        out.add(canonical_ineq(a, b))
        if is_eq:
            out.add(canonical_ineq(tuple(-x for x in a), -b))
    return sorted(out), False


def _coordinate_bounds(h: HPolyhedron, ineqs):
    """Exact per-coordinate bounds; LP fallback for coordinates no singleton
    row bounds.  Returns (lo, hi) vectors, or None when the system is empty.
    Raises UnboundedInput when some coordinate is unbounded."""
    n = h.n
    lo = [None] * n
    hi = [None] * n
    for a, b in ineqs:
        nz = [j for j, x in enumerate(a) if x != 0]
        if len(nz) != 1:
            continue
        j = nz[0]
        bound = b / a[j]
        if a[j] > 0:
            hi[j] = bound if hi[j] is None else min(hi[j], bound)
        else:
            lo[j] = bound if lo[j] is None else max(lo[j], bound)
    missing = [j for j in range(n) if lo[j] is None or hi[j] is None]
    if missing:
        from . import simplex  # local import; simplex depends on these types

        for j in missing:
            for sense, store in ((1, hi), (-1, lo)):
                if store[j] is not None:
                    continue
                obj = tuple(Q(-sense) if k == j else ZERO for k in range(n))
                sol = simplex.solve_lp(simplex.LpProblem(obj, h))
                if sol.status is simplex.LpStatus.INFEASIBLE:
                    return None
                if sol.status is simplex.LpStatus.UNBOUNDED:
                    raise UnboundedInput(
                        f"coordinate {j} is unbounded {'above' if sense > 0 else 'below'}")
                store[j] = sol.point[j]
    for j in range(n):
        if lo[j] > hi[j]:
            return None
    return lo, hi


def dd_hrep_to_vrep(h: HPolyhedron) -> VPolytope:
    """Vertex enumeration of a bounded H-polyhedron.

    Empty input yields an empty VPolytope; an unbounded input raises
    UnboundedInput.
    """
    n = h.n
    ineqs, infeasible = expand_to_inequalities(h)
    if infeasible:
        return VPolytope(())
    bounds = _coordinate_bounds(h, ineqs)
    if bounds is None:
        return VPolytope(())
    lo, hi = bounds

    # Working rows: 2n box rows, then every non-singleton constraint row.
    # Singleton rows are subsumed by the box.
    work: list[tuple] = []
    for j in range(n):
        work.append((tuple(-x for x in unit(n, j)), -lo[j]))
        work.append((unit(n, j), hi[j]))
    inserts = [(a, b) for a, b in ineqs
               if sum(1 for x in a if x != 0) > 1]
    work.extend(inserts)

    # Initial vertex set: box corners with their active box rows.
    axes = []
    for j in range(n):
        axes.append((lo[j],) if lo[j] == hi[j] else (lo[j], hi[j]))
    verts: dict[tuple, frozenset] = {}
    for corner in product(*axes):
        active = set()
        for j, x in enumerate(corner):
            if x == lo[j]:
                active.add(2 * j)
            if x == hi[j]:
                active.add(2 * j + 1)
        verts[corner] = frozenset(active)

    def tight_rows(point: tuple, upto: int) -> frozenset:
        return frozenset(i for i in range(upto)
                         if dot(work[i][0], point) == work[i][1])

    for k in range(2 * n, len(work)):
        a, b = work[k]
        neg, zer, pos = [], [], []
        vals = {}
        for v in verts:
            t = dot(a, v) - b
            vals[v] = t
            (neg if t < 0 else zer if t == 0 else pos).append(v)
        if not pos:
            for v in zer:
                verts[v] = verts[v] | {k}
            continue
        if not neg and not zer:
            return VPolytope(())
        nxt: dict[tuple, frozenset] = {}
        for v in neg:
            nxt[v] = verts[v]
        for v in zer:
            nxt[v] = verts[v] | {k}
        for u in neg:
            au = verts[u]
            for w in pos:
                common = au & verts[w]
                if len(common) < n - 1:
                    continue
                if rank([work[i][0] for i in sorted(common)]) != n - 1:
                    continue
                t = (-vals[u]) / (vals[w] - vals[u])
                cut = tuple(xu + t * (xw - xu) for xu, xw in zip(u, w))
                if cut not in nxt:
                    nxt[cut] = tight_rows(cut, k + 1)
        verts = nxt
    return VPolytope.from_points(verts)


def hull_vrep_to_hrep(points: Iterable[Sequence]) -> Polytope:
    """Convex hull: canonical facet/equality system plus extreme points."""
    pts = sorted(set(vec(p) for p in points))
    if not pts:
        raise EmptyInput("convex hull of no points")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("hull points of mixed dimension")
    p0 = pts[0]
    reduced, piv = rref([vec_sub(p, p0) for p in pts[1:]])
    d = len(piv)

    eq_rows = [canonical_eq(v, dot(v, p0))
               for v in kernel_basis(reduced, n)] if d < n else []
    eq_rows.sort()

    if d == 0:
        hrep = HPolyhedron(n, tuple(r for r, _ in eq_rows),
                           tuple(r for _, r in eq_rows),
                           (True,) * len(eq_rows))
        return Polytope(hrep, VPolytope((p0,)), 0)

    # Chart: reduced is in RREF, so its pivot columns form an identity and
    # the chart coordinates of x are simply (x - p0) restricted to piv.
    chart = [tuple(p[j] - p0[j] for j in piv) for p in pts]
    bary = tuple(sum(col, ZERO) / len(chart) for col in zip(*chart))
    shifted = [vec_sub(t, bary) for t in chart]
    dual_rows = sorted(set(canonical_ineq(s, Q(1)) for s in shifted
                           if any(x != 0 for x in s)))
    dual = HPolyhedron(d, tuple(r for r, _ in dual_rows),
                       tuple(b for _, b in dual_rows),
                       (False,) * len(dual_rows))
    facets = set()
    for y in dd_hrep_to_vrep(dual).vertices:
        offset = Q(1) + dot(y, bary)            # y.t <= offset in the chart
        a = [ZERO] * n
        for yj, j in zip(y, piv):
            a[j] = yj
        facets.add(canonical_ineq(a, offset + dot(y, tuple(p0[j] for j in piv))))
    ineq_rows = sorted(facets)

    rows = tuple(r for r, _ in eq_rows) + tuple(r for r, _ in ineq_rows)
    rhs = tuple(b for _, b in eq_rows) + tuple(b for _, b in ineq_rows)
    flags = (True,) * len(eq_rows) + (False,) * len(ineq_rows)
    hrep = HPolyhedron(n, rows, rhs, flags)

    base = len(eq_rows)
    extreme = []
    for p in pts:
        active = [rows[i] for i in range(base)]  # equalities are always tight
        for i, (a, b) in enumerate(ineq_rows):
            if dot(a, p) == b:
                active.append(a)
        if rank(active) == n:
            extreme.append(p)
    return Polytope(hrep, VPolytope.from_points(extreme), d)


def polytope_from_hrep(h: HPolyhedron) -> Optional[Polytope]:
    """Canonical Polytope for a bounded H-system; None when empty."""
    v = dd_hrep_to_vrep(h)
    if v.is_empty:
        return None
    return hull_vrep_to_hrep(v.vertices)


def polytope_from_points(points: Iterable[Sequence]) -> Polytope:
    return hull_vrep_to_hrep(points)


def intersect(p: Polytope, q: Polytope) -> Optional[Polytope]:
    """Intersection of two polytopes; None when empty."""
    if p.n != q.n:
        raise DimensionMismatch("intersecting polytopes of different dimension")
    joint = HPolyhedron(p.n, p.hrep.a + q.hrep.a, p.hrep.b + q.hrep.b,
                        p.hrep.eq + q.hrep.eq)
    return polytope_from_hrep(joint)


def relative_interior_point(p: Polytope) -> QVector:
    """Barycenter of the extreme points — always in the relative interior."""
    verts = p.vrep.vertices
    if not verts:
        raise EmptyInput("relative interior of an empty polytope")
    k = len(verts)
    return tuple(sum(col, ZERO) / k for col in zip(*verts))


def is_subset(p: Polytope, q: Polytope) -> bool:
    """Exact containment test: every extreme point of p satisfies q's system."""
    if p.n != q.n:
        raise DimensionMismatch("comparing polytopes of different dimension")
    return all(q.hrep.contains(v) for v in p.vrep.vertices)


def irredundant_union(parts: Iterable[Polytope]) -> tuple:
    """Drop parts contained in another part; canonical deterministic order.

    Exact duplicates keep their first occurrence; the result is sorted by
    vertex tuple, so the first vertex of each part ascends lexicographically.
    """
    items = list(parts)
    keep = []
    for i, p in enumerate(items):
        redundant = False
        for j, q in enumerate(items):
            if i == j:
                continue
            if is_subset(p, q):
                if is_subset(q, p):  # equal sets: keep lowest index
                    if j < i:
                        redundant = True
                        break
                else:
                    redundant = True
                    break
        if not redundant:
            keep.append(p)
    return tuple(sorted(keep, key=lambda t: t.vrep.vertices))


def project(p: Polytope, coords: Sequence[int]) -> Polytope:
    """Orthogonal projection onto the listed coordinates (kept order)."""
    return hull_vrep_to_hrep([tuple(v[j] for j in coords)
                              for v in p.vrep.vertices])


def box_rows(boxes: Sequence[tuple]) -> HPolyhedron:
    """H-system of a coordinate box given (lo, hi) pairs."""
    n = len(boxes)
    a, b = [], []
    for j, (lo, hi) in enumerate(boxes):
        a.append(tuple(-x for x in unit(n, j)))
        b.append(-lo)
        a.append(unit(n, j))
        b.append(hi)
    return HPolyhedron(n, tuple(a), tuple(b), (False,) * len(a))


def slice_system(h: HPolyhedron, keep: Sequence[int],
                 fixed: dict[int, Rational]) -> HPolyhedron:
    """Restrict a system to the ``keep`` coordinates, fixing the others.

    Rows that lose all their coefficients are kept as trivial rows so that
    parameter-infeasible slices stay detectable.
    """
    a, b, eq = [], [], []
    for row, rhs, is_eq in zip(h.a, h.b, h.eq):
        shifted = rhs - sum((row[j] * v for j, v in fixed.items()), ZERO)
        a.append(tuple(row[j] for j in keep))
        b.append(shifted)
        eq.append(is_eq)
    return HPolyhedron(len(keep), tuple(a), tuple(b), tuple(eq))


def vertex_active_sets(p: Polytope) -> dict:
    """Map each extreme point to the frozenset of tight rows of p.hrep."""
    out = {}
    for v in p.vrep.vertices:
        out[v] = frozenset(
            i for i, (a, b, is_eq) in enumerate(zip(p.hrep.a, p.hrep.b, p.hrep.eq))
            if is_eq or dot(a, v) == b)
    return out
