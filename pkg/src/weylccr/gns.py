"""Finite matrix truncations of the representation behind lattice-invariant
states, used as a brute-force oracle for the closed-form state evaluations.

The Fourier basis of the torus diagonalizes the position shifts exactly, so a
finite index box loses information only at the boundary of the momentum
shifts; with enough margin the vector-state reconstruction agrees with the
closed form up to floating arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import Monomial
from .errors import DimensionMismatch, NotAState, OutOfSubalgebra, WindowTooSmall
from .lattice import integer_vector, vdot, vector
from .scalars import PhaseAngle, S_ZERO, TAU, scalar


@dataclass(frozen=True)
class FourierWindow:
    """The integer box prod [lo_i, hi_i], enumerated lexicographically."""

    lo: tuple
    hi: tuple
    points: tuple = field(init=False, compare=False, repr=False)
    index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        lo = tuple(int(c) for c in self.lo)
        hi = tuple(int(c) for c in self.hi)
        if len(lo) != len(hi):
            raise DimensionMismatch("window bounds differ in dimension")
        if any(l > h for l, h in zip(lo, hi)):
            raise WindowTooSmall("window is empty")
        pts = tuple(itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "index", {pt: i for i, pt in enumerate(pts)})

    @property
    def d(self) -> int:
        return len(self.lo)

    def __len__(self):
        return len(self.points)

    def contains(self, pt) -> bool:
        return all(l <= c <= h for c, l, h in zip(pt, self.lo, self.hi))


@dataclass(frozen=True)
class TruncatedOperator:
    window: FourierWindow
    matrix: np.ndarray

    def __post_init__(self):
        n = len(self.window)
        if self.matrix.shape != (n, n):
            raise DimensionMismatch("matrix shape does not match window size")


def op_S(b, window: FourierWindow) -> TruncatedOperator:
    """Position shift, diagonal on the Fourier basis: entries e^{-i tau (n . b)}."""
    b = vector(b)
    if len(b) != window.d:
        raise DimensionMismatch("coordinate dimension differs from window")
    diag = np.empty(len(window), dtype=complex)
    for i, n in enumerate(window.points):
        dot = S_ZERO
        for ni, bi in zip(n, b):
            dot = dot + scalar(ni) * bi
        diag[i] = PhaseAngle(-(TAU * dot)).to_complex()
    return TruncatedOperator(window, np.diag(diag))


def op_F(gp, window: FourierWindow) -> TruncatedOperator:
    """Index shift by a dual-lattice vector: e_n -> e_{n+gp}, truncated at the
    boundary (columns leaving the window are zeroed)."""
    gp = tuple(int(c) for c in gp)
    if len(gp) != window.d:
        raise DimensionMismatch("shift dimension differs from window")
    n = len(window)
    mat = np.zeros((n, n), dtype=complex)
    for j, pt in enumerate(window.points):
        target = tuple(c + g for c, g in zip(pt, gp))
        i = window.index.get(target)
        if i is not None:
            mat[i, j] = 1.0
    return TruncatedOperator(window, mat)


def rep_rho_kappa(kappa, m: Monomial, window: FourierWindow) -> TruncatedOperator:
    """Matrix image of u_a v_b under the quasi-momentum-kappa representation:
    e^{-i kappa . beta} F_a S_b, the scalar phase exact."""
    a_int = integer_vector(m.a)
    if a_int is None:
        raise OutOfSubalgebra(f"momentum part of {m} is not a dual-lattice point")
    kappa = tuple(Fraction(k) for k in kappa)
    dot = S_ZERO
    for k, bi in zip(kappa, m.b):
        dot = dot + scalar(k) * bi
    phase = PhaseAngle(-(TAU * dot)).to_complex()
    f_mat = op_F(a_int, window).matrix
    s_mat = op_S(m.b, window).matrix
    return TruncatedOperator(window, phase * (f_mat @ s_mat))


def bloch_vector_state(kappa, fhat, m: Monomial, window: FourierWindow) -> complex:
    """<f, rho_kappa(u_a v_b) f> computed with matrices.

    Requires the Fourier support of f to sit inside the window with margin at
    least |a_i| in every coordinate, so the index shift loses nothing.
    """
    a_int = integer_vector(m.a)
    if a_int is None:
        raise OutOfSubalgebra(f"momentum part of {m} is not a dual-lattice point")
    norm_sq = sum(abs(v) ** 2 for v in fhat.values())
    if abs(norm_sq - 1.0) > 1e-12:
        raise NotAState(f"fhat is not l2-normalized: |f|^2 = {norm_sq!r}")
    for n in fhat:
        if len(n) != window.d:
            raise DimensionMismatch("fhat index dimension differs from window")
        for c, a, lo, hi in zip(n, a_int, window.lo, window.hi):
            if not (lo + abs(a) <= c <= hi - abs(a)):
                raise WindowTooSmall(
                    f"support point {n} lacks margin {tuple(abs(x) for x in a_int)}")
    vec = np.zeros(len(window), dtype=complex)
    for n, val in fhat.items():
        vec[window.index[n]] = val
    mat = rep_rho_kappa(kappa, m, window).matrix
    return complex(np.vdot(vec, mat @ vec))


def plane_wave_vector_state(p, m: Monomial, momentum_set) -> complex:
    """Vector state at delta_p in the finite-support momentum representation.

    The representation acts on the span of {delta_q : q in momentum_set} by
    u_a: delta_q -> delta_{q+a} and v_b: delta_q -> e^{-i tau (q . b)} delta_q.
    """
    points = [vector(q) for q in momentum_set]
    index = {q: i for i, q in enumerate(points)}
    p = vector(p)
    if p not in index:
        raise WindowTooSmall("momentum set does not contain the base point")
    target = tuple(q + a for q, a in zip(p, m.a))
    if target not in index:
        raise WindowTooSmall("momentum set does not contain the shifted point")
    n = len(points)
    u_mat = np.zeros((n, n), dtype=complex)
    for j, q in enumerate(points):
        shifted = tuple(qc + ac for qc, ac in zip(q, m.a))
        i = index.get(shifted)
        if i is not None:
            u_mat[i, j] = 1.0
    v_mat = np.zeros((n, n), dtype=complex)
    for j, q in enumerate(points):
        v_mat[j, j] = PhaseAngle(-(TAU * vdot(q, m.b))).to_complex()
    k = index[p]
    return complex((u_mat @ v_mat)[k, k])


def weyl_relation_residual(gp, b, window: FourierWindow) -> float:
    """Max-norm residual of F_gp S_b = e^{i gp . beta} S_b F_gp on the interior.

    The interior consists of the basis vectors whose shift by gp stays inside
    the window; on the full window the boundary truncation makes the residual
    nonzero, which is reported by passing an empty interior mask upstream.
    """
    gp = tuple(int(c) for c in gp)
    b = vector(b)
    f_mat = op_F(gp, window).matrix
    s_mat = op_S(b, window).matrix
    phase = PhaseAngle(TAU * vdot(vector(gp), b)).to_complex()
    lhs = f_mat @ s_mat
    rhs = phase * (s_mat @ f_mat)
    interior = [j for j, pt in enumerate(window.points)
                if window.contains(tuple(c + g for c, g in zip(pt, gp)))]
    if not interior:
        return 0.0
    return float(np.max(np.abs(lhs[:, interior] - rhs[:, interior])))
