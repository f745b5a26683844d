"""Closed-form evaluation of the invariant-state families, plus the checks
(positivity, invariance, multiplicativity, time reversal, covariance,
weak-star probing, path sampling) that certify them.

Every family evaluates monomials through a closed form whose oscillatory
phases are exact angles; only Gaussian factors and coefficient merges use
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .algebra import (
    Element,
    Monomial,
    apply_automorphism,
    monomial_adjoint,
    monomial_product,
)
from .characters import BohrCharacter, character_eval, character_is_trivial
from .errors import (
    FamilyMismatch,
    InvalidProbeSet,
    NotAState,
    Unsupported,
)
from .lattice import (
    Frame,
    Vector,
    integer_vector,
    is_zero_vector,
    vdot,
    vector,
)
from .scalars import ExactScalar, PhaseAngle, S_ZERO, TAU, scalar

NORMALIZATION_TOL = 1e-12


class StateModel:
    """Base class: a state evaluates elements linearly over their terms."""

    def monomial_value(self, frame: Frame, m: Monomial) -> complex:
        raise NotImplementedError

    def evaluate(self, x: Element) -> complex:
        total = 0j
        for m, c in x.terms.items():
            total += c * self.monomial_value(x.frame, m)
        return total


def evaluate(state: StateModel, x: Element) -> complex:
    return state.evaluate(x)


@dataclass(frozen=True)
class PlaneWave(StateModel):
    """Pure translation-invariant state with momentum p (ambient coordinates)."""

    p: Vector

    def __post_init__(self):
        object.__setattr__(self, "p", vector(self.p))

    def monomial_value(self, frame, m):
        if not is_zero_vector(m.a):
            return 0j
        beta = frame.to_ambient_position(m.b)
        return PhaseAngle(-vdot(self.p, beta)).to_complex()


@dataclass(frozen=True)
class BohrState(StateModel):
    """Pure translation-invariant state attached to a character of R^d."""

    char: BohrCharacter

    def monomial_value(self, frame, m):
        if not is_zero_vector(m.a):
            return 0j
        beta = frame.to_ambient_position(m.b)
        return (-character_eval(self.char, beta)).to_complex()


class Bloch(StateModel):
    """Pure lattice-invariant position-regular state.

    Determined by a quasi-momentum ``kappa`` (rational coordinates in [0,1))
    and the finitely supported Fourier data ``fhat`` of a unit vector on the
    torus; the rank-one projection of the abstract description is recovered as
    the span of that vector.
    """

    __slots__ = ("kappa", "fhat")

    def __init__(self, kappa, fhat: Mapping[tuple, complex]):
        kappa = tuple(Fraction(k) for k in kappa)
        if any(not (0 <= k < 1) for k in kappa):
            raise NotAState("quasi-momentum coordinates must lie in [0, 1)")
        items = []
        norm_sq = 0.0
        for idx, val in fhat.items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != len(kappa):
                raise NotAState("fhat index dimension differs from kappa")
            val = complex(val)
            if val != 0:
                items.append((idx, val))
                norm_sq += abs(val) ** 2
        if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
            raise NotAState(f"fhat is not l2-normalized: |f|^2 = {norm_sq!r}")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "fhat", tuple(sorted(items, key=lambda kv: kv[0])))

    def __setattr__(self, *_):
        raise AttributeError("Bloch is immutable")

    @property
    def d(self):
        return len(self.kappa)

    @property
    def fhat_map(self) -> dict:
        return dict(self.fhat)

    def __eq__(self, other):
        if not isinstance(other, Bloch):
            return NotImplemented
        return self.kappa == other.kappa and self.fhat == other.fhat

    def __hash__(self):
        return hash((self.kappa, self.fhat))

    def monomial_value(self, frame, m):
        return bloch_monomial_value(self.kappa, self.fhat_map, m)

    def __repr__(self):
        return f"Bloch(kappa={self.kappa}, support={[i for i, _ in self.fhat]})"


def bloch_monomial_value(kappa, fhat: Mapping[tuple, complex], m: Monomial) -> complex:
    """Fourier closed form, valid for any rational kappa (not range-reduced).

    chi(a integral) * e^{-i kappa.beta} * sum_n conj(fhat(n+a)) fhat(n) e^{-i n.beta}
    with every oscillatory phase exact.
    """
    a_int = integer_vector(m.a)
    if a_int is None:
        return 0j
    kb = S_ZERO
    for k, b in zip(kappa, m.b):
        kb = kb + scalar(k) * b
    total = 0j
    for n, fn in fhat.items():
        shifted = tuple(ni + ai for ni, ai in zip(n, a_int))
        gn = fhat.get(shifted)
        if gn is None:
            continue
        nb = S_ZERO
        for ni, b in zip(n, m.b):
            nb = nb + scalar(ni) * b
        angle = PhaseAngle(-(TAU * (kb + nb)))
        total += gn.conjugate() * fn * angle.to_complex()
    return total


@dataclass(frozen=True)
class Zak(StateModel):
    """Pure state invariant under both lattice translations; a character of
    the doubled lattice labelled by (kappa, nu)."""

    kappa: tuple
    nu: tuple

    def __post_init__(self):
        kappa = tuple(Fraction(k) for k in self.kappa)
        nu = tuple(Fraction(n) for n in self.nu)
        if len(kappa) != len(nu):
            raise NotAState("kappa and nu dimensions differ")
        if any(not (0 <= k < 1) for k in kappa + nu):
            raise NotAState("Zak labels must lie in [0, 1)")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "nu", nu)

    def monomial_value(self, frame, m):
        a_int = integer_vector(m.a)
        b_int = integer_vector(m.b)
        if a_int is None or b_int is None:
            return 0j
        turns = -(
            sum((k * b for k, b in zip(self.kappa, b_int)), Fraction(0))
            + sum((a * n for a, n in zip(a_int, self.nu)), Fraction(0))
        )
        return PhaseAngle.from_turns(turns).to_complex()


@dataclass(frozen=True)
class Fock(StateModel):
    """The regular Gaussian ground state."""

    def monomial_value(self, frame, m):
        half = ExactScalar.rational(1, 2)
        phase = PhaseAngle(TAU * half * vdot(m.a, m.b))
        width = frame.momentum_norm_sq(m.a) + frame.position_norm_sq(m.b)
        return phase.to_complex() * math.exp(-width.evaluate() / 4.0)


@dataclass(frozen=True)
class Tracial(StateModel):
    """t(u_a v_b) = 1 iff (a, b) = (0, 0): the canonical tracial state."""

    def monomial_value(self, frame, m):
        return 1.0 + 0j if m.is_identity() else 0j


class Mixture(StateModel):
    """Finite convex combination of states."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[tuple]):
        comps = []
        total = 0.0
        for w, s in components:
            w = float(w)
            if w <= 0:
                raise NotAState("mixture weights must be positive")
            if not isinstance(s, StateModel):
                raise NotAState("mixture components must be states")
            comps.append((w, s))
            total += w
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotAState(f"mixture weights sum to {total!r}")
        object.__setattr__(self, "components", tuple(comps))

    def __setattr__(self, *_):
        raise AttributeError("Mixture is immutable")

    def monomial_value(self, frame, m):
        return sum(w * s.monomial_value(frame, m) for w, s in self.components)

    def __repr__(self):
        return f"Mixture({[(w, type(s).__name__) for w, s in self.components]})"


# -- verification reports -----------------------------------------------------


@dataclass(frozen=True)
class GramReport:
    min_eigenvalue: float
    hermitian_residual: float
    passed: bool

    def as_dict(self):
        return {
            "min_eigenvalue": self.min_eigenvalue,
            "hermitian_residual": self.hermitian_residual,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class DeviationReport:
    max_deviation: float
    worst_probe: str
    passed: bool

    def as_dict(self):
        return {
            "max_deviation": self.max_deviation,
            "worst_probe": self.worst_probe,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class TimeReversalVerdict:
    is_tri: bool
    certificate: str

    def as_dict(self):
        return {"is_tri": self.is_tri, "certificate": self.certificate}


# -- checks --------------------------------------------------------------------


def gram_psd_check(state: StateModel, frame: Frame, probes: Sequence[Monomial],
                   tol: float = 1e-10) -> GramReport:
    """Positivity witness: the Gram matrix H_ij = omega(m_i* m_j) must be PSD."""
    if not probes:
        raise InvalidProbeSet("need at least one probe")
    if len(set(probes)) != len(probes):
        raise InvalidProbeSet("probes must be distinct")
    n = len(probes)
    H = np.zeros((n, n), dtype=complex)
    for i, mi in enumerate(probes):
        phase_i, mi_star = monomial_adjoint(mi)
        for j, mj in enumerate(probes):
            phase_ij, mij = monomial_product(mi_star, mj)
            scale = (phase_i + phase_ij).to_complex()
            H[i, j] = scale * state.monomial_value(frame, mij)
    residual = float(np.max(np.abs(H - H.conj().T)))
    min_eig = float(np.min(np.linalg.eigvalsh((H + H.conj().T) / 2.0)))
    return GramReport(min_eig, residual, min_eig >= -tol)


def invariance_check(state: StateModel, specs, samples: Sequence[Element],
                     tol: float = 1e-10) -> DeviationReport:
    """Max over samples of |omega(phi(x)) - omega(x)| for the automorphism phi.

    ``specs`` may be a single automorphism or a sequence applied in order.
    """
    if isinstance(specs, (list, tuple)):
        chain = tuple(specs)
    else:
        chain = (specs,)
    worst = 0.0
    worst_probe = ""
    for x in samples:
        y = x
        for spec in chain:
            y = apply_automorphism(spec, y)
        dev = abs(state.evaluate(y) - state.evaluate(x))
        if dev >= worst:
            worst = dev
            worst_probe = str(x)
    return DeviationReport(worst, worst_probe, worst <= tol)


def multiplicativity_check(state: StateModel, frame: Frame,
                           probes: Sequence[Monomial],
                           tol: float = 1e-10) -> DeviationReport:
    """Purity witness on a commuting probe set: omega(mn) = omega(m) omega(n)."""
    for i, mi in enumerate(probes):
        for mj in probes[i + 1:]:
            ph_ij, m_ij = monomial_product(mi, mj)
            ph_ji, m_ji = monomial_product(mj, mi)
            if m_ij != m_ji or not ph_ij.is_same_rotation(ph_ji):
                raise InvalidProbeSet(f"probes {mi} and {mj} do not commute")
    worst = 0.0
    worst_probe = ""
    values = [state.monomial_value(frame, m) for m in probes]
    for i, mi in enumerate(probes):
        for j, mj in enumerate(probes):
            if j < i:
                continue
            phase, mij = monomial_product(mi, mj)
            prod_val = phase.to_complex() * state.monomial_value(frame, mij)
            gap = abs(prod_val - values[i] * values[j])
            if gap >= worst:
                worst = gap
                worst_probe = f"{mi} | {mj}"
    return DeviationReport(worst, worst_probe, worst <= tol)


def time_reversal_classify(state: StateModel) -> TimeReversalVerdict:
    """Decide time-reversal invariance from the family's closed-form criterion."""
    if isinstance(state, PlaneWave):
        tri = is_zero_vector(state.p)
        return TimeReversalVerdict(tri, "p = 0" if tri else "p != 0")
    if isinstance(state, BohrState):
        d = _character_dim(state.char)
        tri = character_is_trivial(state.char, d)
        return TimeReversalVerdict(
            tri, "trivial character" if tri else "nontrivial character")
    if isinstance(state, Zak):
        tri = all(k in (Fraction(0), Fraction(1, 2)) for k in state.kappa)
        return TimeReversalVerdict(
            tri, "kappa is a reflection fixed point" if tri
            else f"kappa = {state.kappa} is not fixed by reflection")
    if isinstance(state, Bloch):
        return _classify_bloch(state)
    raise Unsupported(f"no time-reversal criterion for {type(state).__name__}")


def _classify_bloch(state: Bloch, tol: float = 1e-10) -> TimeReversalVerdict:
    two_kappa = [2 * k for k in state.kappa]
    if any(t.denominator != 1 for t in two_kappa):
        return TimeReversalVerdict(False, "2*kappa is not a dual-lattice point")
    shift = tuple(int(t) for t in two_kappa)
    f = state.fhat_map
    support = set()
    for n in f:
        support.add(tuple(-c for c in n))                       # conj(f(-n))
        support.add(tuple(c + s for c, s in zip(n, shift)))     # f(n - 2k) support
    g1 = {n: f.get(tuple(-c for c in n), 0j).conjugate() for n in support}
    g2 = {n: f.get(tuple(c - s for c, s in zip(n, shift)), 0j) for n in support}
    inner = sum(g2[n].conjugate() * g1[n] for n in support)
    if abs(abs(inner) - 1.0) > tol:
        return TimeReversalVerdict(
            False, f"conjugated and shifted vectors are not parallel (|<.,.>| = {abs(inner):.3g})")
    residual = max(abs(g1[n] - inner * g2[n]) for n in support)
    if residual > tol:
        return TimeReversalVerdict(False, f"parallelism residual {residual:.3g}")
    return TimeReversalVerdict(True, "conj(fhat(-n)) is a unit multiple of fhat(n - 2 kappa)")


def _character_dim(char) -> int:
    from .characters import ContinuousCharacter, PadicCharacter, ProductCharacter

    if isinstance(char, ContinuousCharacter):
        return len(char.p)
    if isinstance(char, PadicCharacter):
        return len(char.primes)
    if isinstance(char, ProductCharacter):
        return _character_dim(char.factors[0])
    raise TypeError(f"unknown character {char!r}")


def covariance_check(kappa, fhat: Mapping[tuple, complex], gamma_prime,
                     probes: Sequence[Monomial],
                     tol: float = 1e-12) -> DeviationReport:
    """Shifting kappa by a dual-lattice vector equals shifting the Fourier data.

    Left side: the extended closed form at the unreduced label kappa + gamma'.
    Right side: kappa unchanged, fhat translated by gamma'.
    """
    kappa = tuple(Fraction(k) for k in kappa)
    gamma_prime = tuple(int(g) for g in gamma_prime)
    shifted_kappa = tuple(k + g for k, g in zip(kappa, gamma_prime))
    shifted_fhat = {tuple(n + g for n, g in zip(idx, gamma_prime)): val
                    for idx, val in fhat.items()}
    worst = 0.0
    worst_probe = ""
    for m in probes:
        lhs = bloch_monomial_value(shifted_kappa, dict(fhat), m)
        rhs = bloch_monomial_value(kappa, shifted_fhat, m)
        dev = abs(lhs - rhs)
        if dev >= worst:
            worst = dev
            worst_probe = str(m)
    return DeviationReport(worst, worst_probe, worst <= tol)


def weak_star_distance(s1: StateModel, s2: StateModel,
                       probes: Sequence[Element]) -> float:
    """Max over the probe set of |omega1(x) - omega2(x)|."""
    if not probes:
        raise InvalidProbeSet("need at least one probe")
    return max(abs(s1.evaluate(x) - s2.evaluate(x)) for x in probes)


# -- path sampling ---------------------------------------------------------------


PATH_KINDS = ("plane_wave_line", "bloch_slerp", "zak_line")


def path_sample(kind: str, endpoints, grid) -> list:
    """Sample a continuous path between two states of the same family.

    plane_wave_line interpolates the momentum linearly; zak_line interpolates
    both torus labels; bloch_slerp moves kappa linearly and the Fourier vector
    along a normalized great circle.  Grid values 0 and 1 return the endpoint
    objects themselves.
    """
    if kind not in PATH_KINDS:
        raise ValueError(f"unknown path kind {kind!r}")
    s0, s1 = endpoints
    ts = [Fraction(t) for t in grid]
    if any(not (0 <= t <= 1) for t in ts):
        raise ValueError("grid values must lie in [0, 1]")
    if kind == "plane_wave_line":
        if not (isinstance(s0, PlaneWave) and isinstance(s1, PlaneWave)):
            raise FamilyMismatch("plane_wave_line needs PlaneWave endpoints")
        return [_plane_wave_point(s0, s1, t) for t in ts]
    if kind == "zak_line":
        if not (isinstance(s0, Zak) and isinstance(s1, Zak)):
            raise FamilyMismatch("zak_line needs Zak endpoints")
        return [_zak_point(s0, s1, t) for t in ts]
    if not (isinstance(s0, Bloch) and isinstance(s1, Bloch)):
        raise FamilyMismatch("bloch_slerp needs Bloch endpoints")
    return _bloch_slerp(s0, s1, ts)


def _plane_wave_point(s0: PlaneWave, s1: PlaneWave, t: Fraction) -> PlaneWave:
    if t == 0:
        return s0
    if t == 1:
        return s1
    p = tuple((1 - t) * p0 + t * p1 for p0, p1 in zip(s0.p, s1.p))
    return PlaneWave(p)


def _zak_point(s0: Zak, s1: Zak, t: Fraction) -> Zak:
    if t == 0:
        return s0
    if t == 1:
        return s1
    kappa = tuple((1 - t) * k0 + t * k1 for k0, k1 in zip(s0.kappa, s1.kappa))
    nu = tuple((1 - t) * n0 + t * n1 for n0, n1 in zip(s0.nu, s1.nu))
    return Zak(kappa, nu)


def _bloch_slerp(s0: Bloch, s1: Bloch, ts) -> list:
    support = sorted(set(dict(s0.fhat)) | set(dict(s1.fhat)))
    u = np.array([s0.fhat_map.get(n, 0j) for n in support])
    w = np.array([s1.fhat_map.get(n, 0j) for n in support])
    c = complex(np.vdot(u, w))
    if abs(c) > 0:
        w_aligned = w * (c.conjugate() / abs(c))
    else:
        w_aligned = w
    cos_theta = min(abs(c), 1.0)
    theta = math.acos(cos_theta)
    out = []
    for t in ts:
        if t == 0:
            out.append(s0)
            continue
        if t == 1:
            out.append(s1)
            continue
        kappa = tuple((1 - t) * k0 + t * k1 for k0, k1 in zip(s0.kappa, s1.kappa))
        tf = float(t)
        if theta < 1e-12:
            vec = u
        else:
            vec = (math.sin((1 - tf) * theta) * u
                   + math.sin(tf * theta) * w_aligned) / math.sin(theta)
        fhat = {n: v for n, v in zip(support, vec) if v != 0}
        out.append(Bloch(kappa, fhat))
    return out
