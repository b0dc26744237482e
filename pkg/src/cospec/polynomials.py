"""Dense polynomials in t with exact rational coefficients."""

from __future__ import annotations

from .errors import InterpolationError
from .rationals import Rat, rat_str

_ZERO = Rat(0)
_ONE = Rat(1)


class Polynomial:
    """Immutable dense polynomial; coeffs[i] is the coefficient of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def t_minus_one_power(cls, j: int) -> "Polynomial":
        """(t - 1)^j."""
        p = cls((1,))
        base = cls((-1, 1))
        for _ in range(j):
            p = p * base
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, t):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * Rat(t) + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Rat(c)
        return Polynomial([a * c for a in self.coeffs])

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list:
        """Coefficients as "p/q" strings, constant term first."""
        return [rat_str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(f"({c})*{mono}" if i else f"({c})")
        return "Polynomial(" + " + ".join(terms) + ")"


ZERO_POLY = Polynomial()
ONE_POLY = Polynomial((1,))


def poly_equal(p: Polynomial, q: Polynomial) -> bool:
    """Exact coefficientwise equality of normalized representations."""
    return p == q


def interpolate(points, degree_bound: int) -> Polynomial:
    """Unique polynomial of degree <= degree_bound through the points.

    Uses Newton divided differences on the first degree_bound+1 points;
    any surplus points must lie on the result (otherwise the data is not
    a polynomial of the claimed degree and InterpolationError is raised).
    """
    pts = [(Rat(t), Rat(v)) for t, v in points]
    if len({t for t, _ in pts}) != len(pts):
        raise InterpolationError("duplicate abscissae")
    if len(pts) < degree_bound + 1:
        raise InterpolationError(
            f"need {degree_bound + 1} points for degree bound {degree_bound}, got {len(pts)}"
        )
    base, extra = pts[: degree_bound + 1], pts[degree_bound + 1 :]

    # Newton divided-difference table on the base points.
    xs = [t for t, _ in base]
    coeffs = [v for _, v in base]
    for level in range(1, len(base)):
        for i in range(len(base) - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])

    # Horner-style assembly: p = c0 + (x-x0)(c1 + (x-x1)(c2 + ...))
    poly = Polynomial.constant(coeffs[-1])
    for x, c in zip(reversed(xs[:-1]), reversed(coeffs[:-1])):
        poly = poly * Polynomial((-x, 1)) + Polynomial.constant(c)

    for t, v in extra:
        if poly(t) != v:
            raise InterpolationError(
                f"data is not a polynomial of degree <= {degree_bound}: residual at t={t}"
            )
    return poly
