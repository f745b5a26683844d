"""Frames, dual lattices and the exact pairings feeding every phase.

Conventions used throughout the package:

* a frame stores the lattice basis as the columns of ``E`` and the dual basis
  as the columns of ``F``, with ``F^T E = tau * I`` exactly;
* momenta are kept in dual-basis coordinates ``a`` (ambient alpha = F a) and
  positions in primal-basis coordinates ``b`` (ambient beta = E b), so the
  Euclidean pairing is always ``alpha . beta = tau * (a . b)`` in Q(tau).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, FrameMismatch, NotDecomposable, SingularFrame
from .scalars import ExactScalar, PhaseAngle, S_ONE, S_ZERO, TAU, scalar

Vector = tuple  # tuple[ExactScalar, ...]
Matrix = tuple  # tuple[tuple[ExactScalar, ...], ...]


def vector(values: Sequence) -> Vector:
    return tuple(scalar(v) for v in values)


def vadd(x: Vector, y: Vector) -> Vector:
    _check_dims(x, y)
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    _check_dims(x, y)
    return tuple(a - b for a, b in zip(x, y))


def vneg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vscale(c, x: Vector) -> Vector:
    c = scalar(c)
    return tuple(c * a for a in x)


def vdot(x: Vector, y: Vector) -> ExactScalar:
    _check_dims(x, y)
    out = S_ZERO
    for a, b in zip(x, y):
        out = out + a * b
    return out


def zero_vector(d: int) -> Vector:
    return (S_ZERO,) * d


def is_zero_vector(x: Vector) -> bool:
    return all(c.is_zero() for c in x)


def integer_vector(x: Vector):
    """The tuple of ints behind ``x``, or None if any entry is non-integral."""
    out = []
    for c in x:
        if not c.is_rational():
            return None
        f = c.as_fraction()
        if f.denominator != 1:
            return None
        out.append(int(f))
    return tuple(out)


def _check_dims(x, y):
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)} differ")


# -- exact matrix helpers ---------------------------------------------------


def matrix(rows) -> Matrix:
    return tuple(vector(row) for row in rows)


def mat_identity(d: int) -> Matrix:
    return tuple(
        tuple(S_ONE if i == j else S_ZERO for j in range(d)) for i in range(d)
    )


def mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    nt = mat_transpose(n)
    return tuple(tuple(vdot(row, col) for col in nt) for row in m)


def mat_vec(m: Matrix, x: Vector) -> Vector:
    return tuple(vdot(row, x) for row in m)


def mat_scale(c, m: Matrix) -> Matrix:
    c = scalar(c)
    return tuple(tuple(c * e for e in row) for row in m)


def mat_inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over Q(tau).  Raises SingularFrame if singular."""
    d = len(m)
    aug = [list(row) + list(ident_row) for row, ident_row in zip(m, mat_identity(d))]
    for col in range(d):
        pivot = next((r for r in range(col, d) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise SingularFrame("matrix is singular over Q(tau)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = S_ONE / aug[col][col]
        aug[col] = [inv_p * e for e in aug[col]]
        for r in range(d):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [e - f * p for e, p in zip(aug[r], aug[col])]
    return tuple(tuple(row[d:]) for row in aug)


def dual_frame(E: Matrix) -> Matrix:
    """Dual basis matrix F = tau * (E^-1)^T, so that F^T E = tau * I."""
    return mat_scale(TAU, mat_transpose(mat_inverse(E)))


# -- frame ------------------------------------------------------------------


@dataclass(frozen=True)
class Frame:
    """A lattice basis (columns of E) together with its 2*pi-dual (columns of F).

    Derived data cached on construction: the position Gram matrix E^T E, the
    momentum Gram matrix F^T F, and the change-of-coordinates matrix
    ``shear = E^-1 F`` used by the free dynamics.
    """

    d: int
    E: Matrix
    F: Matrix
    pos_gram: Matrix
    mom_gram: Matrix
    shear: Matrix

    @staticmethod
    def from_basis(rows) -> "Frame":
        E = matrix(rows)
        d = len(E)
        if any(len(row) != d for row in E):
            raise DimensionMismatch("frame matrix must be square")
        F = dual_frame(E)
        Et = mat_transpose(E)
        pos_gram = mat_mul(Et, E)
        mom_gram = mat_mul(mat_transpose(F), F)
        shear = mat_mul(mat_inverse(E), F)
        return Frame(d=d, E=E, F=F, pos_gram=pos_gram, mom_gram=mom_gram, shear=shear)

    @staticmethod
    def standard(d: int) -> "Frame":
        return Frame.from_basis(mat_identity(d))

    def to_ambient_position(self, b: Vector) -> Vector:
        return mat_vec(self.E, vector(b))

    def to_ambient_momentum(self, a: Vector) -> Vector:
        return mat_vec(self.F, vector(a))

    def position_norm_sq(self, b: Vector) -> ExactScalar:
        b = vector(b)
        return vdot(b, mat_vec(self.pos_gram, b))

    def momentum_norm_sq(self, a: Vector) -> ExactScalar:
        a = vector(a)
        return vdot(a, mat_vec(self.mom_gram, a))

    def __str__(self):
        rows = "; ".join(", ".join(str(e) for e in row) for row in self.E)
        return f"Frame(d={self.d}, E=[{rows}])"


def check_same_frame(f1: Frame, f2: Frame):
    if f1 != f2:
        raise FrameMismatch("operands live over different frames")


# -- pairings ---------------------------------------------------------------


def pairing(a: Vector, b: Vector) -> PhaseAngle:
    """Exact value of alpha . beta = tau * (a . b) as a phase angle."""
    return PhaseAngle(TAU * vdot(vector(a), vector(b)))


@dataclass(frozen=True)
class PhasePoint:
    """A point z = (alpha, beta) of phase space, in frame coordinates."""

    frame: Frame
    a: Vector
    b: Vector

    def __post_init__(self):
        object.__setattr__(self, "a", vector(self.a))
        object.__setattr__(self, "b", vector(self.b))
        if len(self.a) != self.frame.d or len(self.b) != self.frame.d:
            raise DimensionMismatch("phase-point coordinates must match the frame")

    def __add__(self, other: "PhasePoint") -> "PhasePoint":
        check_same_frame(self.frame, other.frame)
        return PhasePoint(self.frame, vadd(self.a, other.a), vadd(self.b, other.b))

    def __neg__(self) -> "PhasePoint":
        return PhasePoint(self.frame, vneg(self.a), vneg(self.b))


def symplectic(z: PhasePoint, zp: PhasePoint) -> PhaseAngle:
    """The symplectic product (alpha . beta' - alpha' . beta) / 2, exact."""
    check_same_frame(z.frame, zp.frame)
    half = ExactScalar.rational(1, 2)
    return PhaseAngle(TAU * half * (vdot(z.a, zp.b) - vdot(zp.a, z.b)))


# -- unit-cell decompositions ------------------------------------------------


@dataclass(frozen=True)
class CellDecomposition:
    fractional: tuple  # tuple[Fraction, ...] in [0, 1)
    integral: tuple  # tuple[int, ...]


def _decompose(coords: Vector) -> CellDecomposition:
    frac, ints = [], []
    for c in coords:
        c = scalar(c)
        if not c.is_rational():
            raise NotDecomposable(f"coordinate {c} is not a plain rational")
        f = c.as_fraction()
        n = math.floor(f)
        ints.append(n)
        frac.append(f - n)
    return CellDecomposition(tuple(frac), tuple(ints))


def decompose_position(b: Vector) -> CellDecomposition:
    """Split position coordinates into a lattice point and a unit-cell point."""
    return _decompose(b)


def decompose_momentum(a: Vector) -> CellDecomposition:
    """Split momentum coordinates into a dual-lattice point and a quasi-momentum."""
    return _decompose(a)


def in_dual_lattice(a: Vector) -> bool:
    """Characteristic function of the dual lattice on F-coordinates."""
    return integer_vector(vector(a)) is not None


def enumerate_trs_fixed_points(frame: Frame):
    """The 2^d quasi-momenta fixed by reflection, coordinates in {0, 1/2}."""
    choices = (Fraction(0), Fraction(1, 2))
    return [kappa for kappa in itertools.product(choices, repeat=frame.d)]
