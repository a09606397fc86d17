"""Small exact linear algebra kernel over rationals.

Vectors are tuples of rationals, matrices tuples of row tuples.  Everything
is deterministic: Gaussian elimination always picks the first nonzero pivot
in row/column order, so identical inputs give identical outputs.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Sequence

from .rationals import Q, Rational, ZERO, as_rational

QVector = tuple  # tuple[Rational, ...]
QMatrix = tuple  # tuple[QVector, ...]


def vec(items: Iterable) -> QVector:
    """Coerce an iterable of ints/strings/rationals to an exact vector."""
    return tuple(as_rational(x) for x in items)


def mat(rows: Iterable[Iterable]) -> QMatrix:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> QVector:
    return (ZERO,) * n


def unit(n: int, j: int) -> QVector:
    return tuple(Q(1) if k == j else ZERO for k in range(n))


def identity(n: int) -> QMatrix:
    return tuple(unit(n, j) for j in range(n))


def dot(u: Sequence, v: Sequence) -> Rational:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def mat_vec(a: Sequence[Sequence], x: Sequence) -> QVector:
    return tuple(dot(row, x) for row in a)


def vec_add(u: Sequence, v: Sequence) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(t, u: Sequence) -> QVector:
    return tuple(t * a for a in u)


def vec_neg(u: Sequence) -> QVector:
    return tuple(-a for a in u)


def transpose(a: Sequence[Sequence]) -> QMatrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> QMatrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero reduced rows and the list of pivot columns.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve_square(a: Sequence[Sequence], b: Sequence):
    """Solve the square system ``a x = b``; ``None`` if *a* is singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    return tuple(reduced[i][n] for i in range(n))


def kernel_basis(rows: Sequence[Sequence], n: int | None = None) -> list[QVector]:
    """Basis of the right null space of the row matrix, deterministic order."""
    if n is None:
        if not rows:
            raise ValueError("kernel_basis needs explicit n for an empty matrix")
        n = len(rows[0])
    if not rows:
        return [unit(n, j) for j in range(n)]
    reduced, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = Q(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        basis.append(tuple(v))
    return basis


def common_denominator(values: Sequence) -> int:
    d = 1
    for x in values:
        d = lcm(d, x.denominator)
    return d


def integerize(values: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by the lcm of denominators to integers."""
    d = common_denominator(values)
    return tuple(int(x * d) for x in values)


def primitive(values: Sequence) -> tuple[int, ...]:
    """Integerize and divide by the gcd — the canonical integer direction."""
    ints = integerize(values)
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = tuple(x // g for x in ints)
    return ints
