"""Transfer-matrix computation of the non-long-cycle part of the
characteristic polynomial, and the exact matrix identities behind the
toggling symmetry.

States are the subsets of a module's signed vertices that its local
decomposition uses, ordered (empty, +, -, +/-).  The 0/1 transition
matrix Q says which states may follow which; the diagonal weight
matrices X_P, X_C, X_E carry the local contributions.  Conjugating by R
compresses everything to 2x2 blocks Y_*, and the matrix U intertwines
Y_P with Y_C while commuting with Y_E, which forces trace invariance
under toggling.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    InvertibilityWarning,
    ParameterError,
    IdentityCheckError,
    PoleError,
)
from .graphs import assemble_ring
from .linalg import det_rational, mat_equal, mat_inv, mat_mul, mat_trace
from .polynomials import Polynomial, interpolate
from .rationals import Rat
from .words import Word
from .decomps import long_cycle_closed_form

STATES = ("empty", "+", "-", "+/-")


def q_matrix():
    """0/1 transition matrix between signed-vertex usage states."""
    return [
        [Rat(1), Rat(1), Rat(1), Rat(1)],
        [Rat(1), Rat(1), Rat(1), Rat(1)],
        [Rat(1), Rat(0), Rat(1), Rat(0)],
        [Rat(1), Rat(0), Rat(1), Rat(0)],
    ]


def r_matrix():
    half = Rat(1, 2)
    return [
        [Rat(1), Rat(-1), Rat(1), Rat(1)],
        [Rat(1), Rat(-1), Rat(0), Rat(0)],
        [half, Rat(1), Rat(0), Rat(-1)],
        [half, Rat(1), Rat(-2), Rat(0)],
    ]


def s_matrix():
    zero = Rat(0)
    m = [[zero] * 4 for _ in range(4)]
    m = [list(row) for row in m]
    m[0][0] = Rat(3)
    m[1][2] = Rat(1)
    return m


def _check_point(k, t):
    k = Rat(k)
    t = Rat(t)
    if k <= 0:
        raise ParameterError(f"k must be positive, got {k}")
    if t == 1:
        raise PoleError("t = 1 is a pole of the weight matrices")
    return k, t


def x_matrix(kind: str, k, t):
    """Diagonal local-contribution matrix of a module kind at (k, t)."""
    k, t = _check_point(k, t)
    u2 = (t - 1) ** 2
    zero = Rat(0)
    if kind == "P":
        diag = [
            Rat(1),
            -k / (u2 * (2 * k + 2)),
            -k / (u2 * (2 * k + 2)),
            (k * k - u2) / (u2 * u2 * (2 * k + 2) ** 2),
        ]
    elif kind == "C":
        kk1 = (k + 1) ** 2
        diag = [
            1 - k * k / (u2 * kk1),
            -k / (2 * u2 * kk1),
            -k / (2 * u2 * kk1),
            Rat(-1) / (4 * u2 * kk1),
        ]
    elif kind == "E":
        diag = [Rat(1), zero, zero, Rat(-1) / (4 * u2)]
    else:
        raise ParameterError(f"unknown module kind {kind!r}")
    return [[diag[i] if i == j else zero for j in range(4)] for i in range(4)]


def y_block(kind: str, k, t):
    """Derived 2x2 block: upper left of S R^{-1} X_kind R."""
    full = _compressed(kind, k, t)
    return [row[:2] for row in full[:2]]


def _compressed(kind: str, k, t):
    r = r_matrix()
    return mat_mul(mat_mul(mat_mul(s_matrix(), mat_inv(r)), x_matrix(kind, k, t)), r)


def y_block_reference(kind: str, k, t):
    """Hard-coded closed forms of the 2x2 blocks, written out entry by
    entry with u = t - 1.  Kept independent of y_block so the mechanical
    derivation from S R^{-1} X R can be cross-checked against them.
    """
    k, t = _check_point(k, t)
    u = t - 1
    u2 = u * u
    u4 = u2 * u2
    k2 = k * k
    kk1 = (k + 1) ** 2
    if kind == "P":
        diag = (16 * k2 * u4 + 32 * k * u4 - 8 * k2 * u2 + 16 * u4 - 8 * k * u2 + k2 - u2)
        return [
            [
                diag / (12 * kk1 * u4),
                (-8 * k2 * u4 - 16 * k * u4 - 2 * k2 * u2 - 8 * u4 - 2 * k * u2 + k2 - u2)
                / (6 * kk1 * u4),
            ],
            [
                (8 * k2 * u4 + 16 * k * u4 + 2 * k2 * u2 + 8 * u4 + 2 * k * u2 - k2 + u2)
                / (24 * kk1 * u4),
                (-4 * k2 * u4 - 8 * k * u4 - 4 * u4 - 4 * k2 * u2 - 4 * k * u2 - k2 + u2)
                / (12 * kk1 * u4),
            ],
        ]
    if kind == "C":
        return [
            [
                (16 * k2 * u2 + 32 * k * u2 - 16 * k2 + 16 * u2 - 8 * k - 1)
                / (12 * kk1 * u2),
                (-8 * k2 * u2 - 16 * k * u2 + 8 * k2 - 8 * u2 - 2 * k - 1)
                / (6 * kk1 * u2),
            ],
            [
                (8 * k2 * u2 + 16 * k * u2 - 8 * k2 + 8 * u2 + 2 * k + 1)
                / (24 * kk1 * u2),
                (-4 * k2 * u2 - 8 * k * u2 + 4 * k2 - 4 * u2 - 4 * k + 1)
                / (12 * kk1 * u2),
            ],
        ]
    if kind == "E":
        return [
            [(16 * u2 - 1) / (12 * u2), (-8 * u2 - 1) / (6 * u2)],
            [(8 * u2 + 1) / (24 * u2), (-4 * u2 + 1) / (12 * u2)],
        ]
    raise ParameterError(f"unknown module kind {kind!r}")


def u_matrix(t):
    """The toggle-symmetry matrix; invertible exactly for t not in {0, 1, 2}."""
    t = Rat(t)
    if t == 1:
        raise PoleError("t = 1 is excluded")
    u2 = (t - 1) ** 2
    return [
        [20 * u2 - 2, -32 * u2 - 4],
        [8 * u2 + 1, -20 * u2 + 2],
    ]


@dataclass
class TransferEvaluation:
    """All transfer machinery evaluated at a fixed rational point (k, t)."""

    k: Rat
    t: Rat
    u: Rat
    Q: list
    R: list
    S: list
    X_P: list
    X_C: list
    X_E: list
    Y_P: list
    Y_C: list
    Y_E: list
    U: list

    def x(self, kind: str):
        return {"P": self.X_P, "C": self.X_C, "E": self.X_E}[kind]

    def y(self, kind: str):
        return {"P": self.Y_P, "C": self.Y_C, "E": self.Y_E}[kind]


def build_transfer(k, t) -> TransferEvaluation:
    """Populate a TransferEvaluation and assert its internal identities."""
    k, t = _check_point(k, t)
    Q, R, S = q_matrix(), r_matrix(), s_matrix()
    if not mat_equal(Q, mat_mul(mat_mul(R, S), mat_inv(R))):
        raise IdentityCheckError(f"Q != R S R^-1 at t={t}")
    xs, ys = {}, {}
    for kind in "PCE":
        xs[kind] = x_matrix(kind, k, t)
        full = _compressed(kind, k, t)
        lower_right = [row[2:] for row in full[2:]]
        if any(entry != 0 for row in lower_right for entry in row):
            raise IdentityCheckError(
                f"lower right block of S R^-1 X_{kind} R is not zero: {lower_right}"
            )
        ys[kind] = [row[:2] for row in full[:2]]
    return TransferEvaluation(
        k=k, t=t, u=t - 1, Q=Q, R=R, S=S,
        X_P=xs["P"], X_C=xs["C"], X_E=xs["E"],
        Y_P=ys["P"], Y_C=ys["C"], Y_E=ys["E"],
        U=u_matrix(t),
    )


def _trace_product(w: Word, k, t, block) -> Rat:
    """trace of prod_i M_{letter_i} where block(kind, k, t) gives M."""
    mats = {kind: block(kind, k, t) for kind in set(w.letters)}
    prod = None
    for letter in w:
        prod = mats[letter] if prod is None else mat_mul(prod, mats[letter])
    return mat_trace(prod)


def _interpolated_short(w: Word, k, block) -> Polynomial:
    n = assemble_ring(w, k).n
    points = []
    # n+2 points: one surplus point makes interpolate() certify that
    # (t-1)^n really clears every denominator
    for t in range(3, n + 5):
        t = Rat(t)
        value = (t - 1) ** n * _trace_product(w, k, t, block)
        points.append((t, value))
    return interpolate(points, n)


def short_part(w: Word, k) -> Polynomial:
    """(t-1)^n trace(Q X_{l_1} ... Q X_{l_tau}) as an exact polynomial.

    Equals the sum of decomposition terms over decompositions without a
    long cycle.
    """
    def block(kind, k, t):
        return mat_mul(q_matrix(), x_matrix(kind, k, t))

    return _interpolated_short(w, k, block)


def short_part_via_Y(w: Word, k) -> Polynomial:
    """Same polynomial computed from the 2x2 compressed blocks."""
    return _interpolated_short(w, k, y_block)


def charpoly_via_transfer(w: Word, k) -> Polynomial:
    """Long-cycle closed form plus transfer-matrix short part."""
    poly = long_cycle_closed_form(w.tau, w.ell, w.m, k) + short_part(w, k)
    n = assemble_ring(w, k).n
    assert poly.degree == n and poly.is_monic(), "transfer charpoly malformed"
    return poly


@dataclass
class UConjugationReport:
    """Outcome of the exact toggle-symmetry identities at one point."""

    k: Rat
    t: Rat
    swap_p_to_c: bool  # U Y_P = Y_C U
    swap_c_to_p: bool  # U Y_C = Y_P U
    commutes_with_e: bool  # U Y_E = Y_E U
    invertible: bool

    @property
    def all_hold(self) -> bool:
        return self.swap_p_to_c and self.swap_c_to_p and self.commutes_with_e


def verify_U_conjugation(k, t) -> UConjugationReport:
    """Check the three U identities and U's invertibility, all exactly."""
    k, t = _check_point(k, t)
    U = u_matrix(t)
    yp, yc, ye = (y_block(kind, k, t) for kind in "PCE")
    report = UConjugationReport(
        k=k,
        t=t,
        swap_p_to_c=mat_equal(mat_mul(U, yp), mat_mul(yc, U)),
        swap_c_to_p=mat_equal(mat_mul(U, yc), mat_mul(yp, U)),
        commutes_with_e=mat_equal(mat_mul(U, ye), mat_mul(ye, U)),
        invertible=det_rational(U) != 0,
    )
    if not report.invertible:
        warnings.warn(
            f"U is singular at t={t} (excluded point)", InvertibilityWarning
        )
    if not report.all_hold:
        raise IdentityCheckError(f"U conjugation identity failed at k={k}, t={t}")
    return report
