"""Exact rational arithmetic helpers.

gmpy2.mpq is used when available (much faster for the big verification
sweeps); fractions.Fraction is a drop-in fallback.  Both expose
.numerator/.denominator and interoperate with ints, which is all the
rest of the code relies on.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat


def rat(num, den=None) -> Rat:
    """Build an exact rational from ints, strings, or another rational."""
    if den is None:
        return Rat(num)
    return Rat(num, den)


def parse_rat(text: str) -> Rat:
    """Parse "p/q" or "p" into an exact rational."""
    return Rat(text.strip())


def rat_str(q) -> str:
    """Render a rational as "p/q" (denominator always present)."""
    q = Rat(q)
    return f"{q.numerator}/{q.denominator}"


def bit_size(q) -> int:
    """Combined bit length of numerator and denominator (pivot heuristic)."""
    return int(q.numerator).bit_length() + int(q.denominator).bit_length()


def is_integral(q) -> bool:
    return Rat(q).denominator == 1
