"""Exact rational scalars.

Every quantity in this package is an exact rational number.  ``gmpy2.mpq``
is used when available (identical arithmetic, roughly 4x faster on
pivot-heavy workloads); otherwise the stdlib ``fractions.Fraction``.
The two are interchangeable for everything we do: construction from
``int`` or ``"p/q"`` strings, field arithmetic, ordering, hashing and
``str()`` formatting.
"""

from __future__ import annotations

from fractions import Fraction

try:  # pragma: no cover - exercised implicitly by whichever backend is present
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

#: The concrete rational type in use (for isinstance checks / annotations).
Rational = type(Q(0))

ZERO = Q(0)
ONE = Q(1)


def as_rational(value) -> Rational:
    """Coerce *value* to an exact rational.

    Accepts ints, rationals of either backend, and strings like ``"5"`` or
    ``"-16/3"``.  Floats are rejected: binary floats do not round-trip the
    decimal the user wrote, and everything downstream assumes exactness.
    """
    if isinstance(value, bool):
        raise TypeError(f"expected a rational, got bool {value!r}")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, (Rational, Fraction)):
        return Q(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Q(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    if isinstance(value, float):
        raise TypeError(
            f"floats are not exact; write {value!r} as a 'p/q' string instead"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rational_str(value: Rational) -> str:
    """Canonical ``"p"`` / ``"p/q"`` rendering (lowest terms, q > 0)."""
    return str(value)
