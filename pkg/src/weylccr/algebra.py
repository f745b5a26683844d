"""The finitely supported Weyl *-algebra: monomials, elements, automorphisms.

A monomial indexes the product u_alpha v_beta by its coordinate pair (a, b);
an element is a finite complex combination of monomials over a fixed frame.
Every phase produced by commutation or by an automorphism is computed exactly
as a :class:`~weylccr.scalars.PhaseAngle` and turned into a complex number
only when it is merged into a coefficient.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import DimensionMismatch
from .lattice import (
    Frame,
    PhasePoint,
    Vector,
    check_same_frame,
    in_dual_lattice,
    integer_vector,
    is_zero_vector,
    mat_vec,
    pairing,
    vadd,
    vdot,
    vector,
    vneg,
    vscale,
    vsub,
    zero_vector,
)
from .scalars import ExactScalar, PhaseAngle, TAU

#: coefficients with modulus below this are dropped after arithmetic
ZERO_THRESHOLD = 1e-14


@dataclass(frozen=True)
class Monomial:
    """Coordinate labels (a, b) of the monomial u_alpha v_beta."""

    a: Vector
    b: Vector

    def __post_init__(self):
        object.__setattr__(self, "a", vector(self.a))
        object.__setattr__(self, "b", vector(self.b))
        if len(self.a) != len(self.b):
            raise DimensionMismatch("momentum and position parts differ in length")

    @staticmethod
    def identity(d: int) -> "Monomial":
        return Monomial(zero_vector(d), zero_vector(d))

    @property
    def d(self) -> int:
        return len(self.a)

    def is_identity(self) -> bool:
        return is_zero_vector(self.a) and is_zero_vector(self.b)

    def __str__(self):
        a = ",".join(str(c) for c in self.a)
        b = ",".join(str(c) for c in self.b)
        return f"u({a})v({b})"

    __repr__ = __str__


def monomial_product(m1: Monomial, m2: Monomial) -> tuple[PhaseAngle, Monomial]:
    """Normal-order the product of two monomials.

    u_{a1} v_{b1} u_{a2} v_{b2} = e^{-i alpha2 . beta1} u_{a1+a2} v_{b1+b2},
    returned as the exact angle together with the combined monomial.
    """
    phase = -pairing(m2.a, m1.b)
    return phase, Monomial(vadd(m1.a, m2.a), vadd(m1.b, m2.b))


def monomial_adjoint(m: Monomial) -> tuple[PhaseAngle, Monomial]:
    """Adjoint of a unit-coefficient monomial: (u_a v_b)* = e^{-i a.b} u_{-a} v_{-b}."""
    phase = -pairing(m.a, m.b)
    return phase, Monomial(vneg(m.a), vneg(m.b))


class Element:
    """A finite complex combination of monomials over a fixed frame.

    Instances are immutable values: all arithmetic returns new elements, and
    the term map is exposed read-only.  The empty map is the zero element and
    {identity -> 1} is the unit.
    """

    __slots__ = ("frame", "_terms")

    def __init__(self, frame: Frame, terms: Mapping[Monomial, complex] | None = None,
                 *, threshold: float = ZERO_THRESHOLD):
        merged: dict[Monomial, complex] = {}
        if terms:
            for m, c in terms.items():
                if m.d != frame.d:
                    raise DimensionMismatch("monomial dimension differs from frame")
                c = complex(c)
                if abs(c) > threshold:
                    merged[m] = c
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "_terms", merged)

    def __setattr__(self, *_):
        raise AttributeError("Element is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(frame: Frame) -> "Element":
        return Element(frame)

    @staticmethod
    def one(frame: Frame) -> "Element":
        return Element(frame, {Monomial.identity(frame.d): 1.0})

    @staticmethod
    def from_monomial(frame: Frame, m: Monomial, coeff: complex = 1.0) -> "Element":
        return Element(frame, {m: coeff})

    @staticmethod
    def u(frame: Frame, coords) -> "Element":
        """The generator u_alpha with alpha = F . coords."""
        return Element(frame, {Monomial(vector(coords), zero_vector(frame.d)): 1.0})

    @staticmethod
    def v(frame: Frame, coords) -> "Element":
        """The generator v_beta with beta = E . coords."""
        return Element(frame, {Monomial(zero_vector(frame.d), vector(coords)): 1.0})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, complex]:
        return MappingProxyType(self._terms)

    def coefficient(self, m: Monomial) -> complex:
        return self._terms.get(m, 0j)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.frame == other.frame and self._terms == other._terms

    def max_coeff_diff(self, other: "Element") -> float:
        check_same_frame(self.frame, other.frame)
        keys = set(self._terms) | set(other._terms)
        return max((abs(self.coefficient(m) - other.coefficient(m)) for m in keys),
                   default=0.0)

    def isclose(self, other: "Element", tol: float = 1e-12) -> bool:
        return self.max_coeff_diff(other) <= tol

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0j) + c
        return Element(self.frame, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.frame, {m: -c for m, c in self._terms.items()},
                       threshold=0.0)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            check_same_frame(self.frame, other.frame)
            out: dict[Monomial, complex] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    phase, m = monomial_product(m1, m2)
                    out[m] = out.get(m, 0j) + c1 * c2 * phase.to_complex()
            return Element(self.frame, out)
        if isinstance(other, (int, float, complex, Fraction)):
            return Element(self.frame,
                           {m: c * complex(other) for m, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, Fraction)):
            return self * other
        return NotImplemented

    def adjoint(self) -> "Element":
        """The *-involution, with every reordering phase exact."""
        out: dict[Monomial, complex] = {}
        for m, c in self._terms.items():
            phase, ms = monomial_adjoint(m)
            out[ms] = out.get(ms, 0j) + c.conjugate() * phase.to_complex()
        return Element(self.frame, out)

    def _coerce(self, other):
        if isinstance(other, Element):
            check_same_frame(self.frame, other.frame)
            return other
        if isinstance(other, (int, float, complex, Fraction)):
            return Element(self.frame,
                           {Monomial.identity(self.frame.d): complex(other)})
        return None

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [f"({c.real:.15g}{c.imag:+.15g}j)*{m}"
                 for m, c in sorted(self._terms.items(), key=lambda kv: str(kv[0]))]
        return " + ".join(parts)

    __repr__ = __str__


def weyl_generator_parts(z: PhasePoint) -> tuple[PhaseAngle, Monomial]:
    """Exact phase and monomial of w_z = e^{-(i/2) alpha.beta} u_alpha v_beta."""
    half = ExactScalar.rational(1, 2)
    phase = PhaseAngle(-(TAU * half * vdot(z.a, z.b)))
    return phase, Monomial(z.a, z.b)


def weyl_generator(z: PhasePoint) -> Element:
    phase, m = weyl_generator_parts(z)
    return Element(z.frame, {m: phase.to_complex()})


# -- automorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class SpaceTranslation:
    """tau_lambda = v_lambda (.) v_lambda*; lam in position coordinates."""

    lam: Vector

    def __post_init__(self):
        object.__setattr__(self, "lam", vector(self.lam))


@dataclass(frozen=True)
class MomentumTranslation:
    """theta_mu = u_mu (.) u_mu*; mu in momentum coordinates."""

    mu: Vector

    def __post_init__(self):
        object.__setattr__(self, "mu", vector(self.mu))


@dataclass(frozen=True)
class FreeDynamics:
    """Phi_t: u_alpha v_beta -> e^{i (t/2) |alpha|^2} u_alpha v_{beta - t alpha}.

    The time parameter is restricted to a plain rational so that the shifted
    coordinates stay in Q(tau).
    """

    t: Fraction

    def __post_init__(self):
        if not isinstance(self.t, Rational):
            raise TypeError("free-dynamics time must be rational")
        object.__setattr__(self, "t", Fraction(self.t))


@dataclass(frozen=True)
class TimeReversal:
    """The antilinear multiplicative involution u_alpha -> u_{-alpha}, v_beta -> v_beta."""


AutomorphismSpec = Union[SpaceTranslation, MomentumTranslation, FreeDynamics, TimeReversal]


def automorphism_action(spec: AutomorphismSpec, frame: Frame,
                        m: Monomial) -> tuple[PhaseAngle, Monomial, bool]:
    """Per-monomial action of an automorphism.

    Returns the exact phase picked up, the image monomial, and whether the
    coefficient must additionally be conjugated (time reversal only).
    """
    if isinstance(spec, SpaceTranslation):
        return -pairing(m.a, spec.lam), m, False
    if isinstance(spec, MomentumTranslation):
        return pairing(spec.mu, m.b), m, False
    if isinstance(spec, FreeDynamics):
        t = spec.t
        norm_sq = frame.momentum_norm_sq(m.a)
        phase = PhaseAngle(ExactScalar.rational(t.numerator, 2 * t.denominator) * norm_sq)
        shift = vscale(t, mat_vec(frame.shear, m.a))
        return phase, Monomial(m.a, vsub(m.b, shift)), False
    if isinstance(spec, TimeReversal):
        return PhaseAngle.zero(), Monomial(vneg(m.a), m.b), True
    raise TypeError(f"unknown automorphism spec {spec!r}")


def apply_automorphism(spec: AutomorphismSpec, x: Element) -> Element:
    out: dict[Monomial, complex] = {}
    for m, c in x.terms.items():
        phase, image, conj = automorphism_action(spec, x.frame, m)
        if conj:
            c = c.conjugate()
        out[image] = out.get(image, 0j) + c * phase.to_complex()
    return Element(x.frame, out)


def apply_automorphisms(specs: Iterable[AutomorphismSpec], x: Element) -> Element:
    for spec in specs:
        x = apply_automorphism(spec, x)
    return x


# -- ergodic means -------------------------------------------------------------


def ergodic_mean(x: Element) -> Element:
    """Projection onto the translation-invariant part: keep the a = 0 terms."""
    kept = {m: c for m, c in x.terms.items() if is_zero_vector(m.a)}
    return Element(x.frame, kept, threshold=0.0)


def ergodic_mean_lattice(x: Element) -> Element:
    """Projection onto the lattice-invariant part: keep terms with a integral."""
    kept = {m: c for m, c in x.terms.items() if in_dual_lattice(m.a)}
    return Element(x.frame, kept, threshold=0.0)


def ergodic_mean_zak(x: Element) -> Element:
    """Keep the terms with both a and b integral (invariant under both lattices)."""
    kept = {m: c for m, c in x.terms.items()
            if integer_vector(m.a) is not None and integer_vector(m.b) is not None}
    return Element(x.frame, kept, threshold=0.0)


def numeric_box_average(x: Element, L: float, samples_per_dim: int) -> Element:
    """Midpoint-rule approximation of the translation average over [-L, L]^d.

    Each coefficient is multiplied by the product quadrature of
    e^{-i alpha . lambda}; terms with a = 0 are reproduced exactly.
    """
    if L <= 0:
        raise ValueError("box size must be positive")
    if samples_per_dim < 2:
        raise ValueError("need at least two samples per dimension")
    out: dict[Monomial, complex] = {}
    n = samples_per_dim
    step = 2.0 * L / n
    for m, c in x.terms.items():
        alpha = [comp.evaluate() for comp in x.frame.to_ambient_momentum(m.a)]
        mult = 1.0 + 0.0j
        for comp in alpha:
            if comp == 0.0:
                continue
            acc = 0.0j
            for k in range(n):
                lam = -L + (k + 0.5) * step
                acc += cmath.exp(-1j * comp * lam)
            mult *= acc / n
        out[m] = out.get(m, 0j) + c * mult
    return Element(x.frame, out)


def trace_coefficient(x: Element, m: Monomial) -> complex:
    """The coefficient of ``m`` in ``x``.

    Equals the tracial pairing t((u_a v_b)* x), since the tracial state kills
    every nontrivial monomial of the product.
    """
    return x.coefficient(m)


def tracial_inner_product(x: Element, y: Element) -> complex:
    """t(x* y), the l2 pairing behind the expansion coefficients.

    The adjoint phase and the reordering phase of each term pair are composed
    exactly and converted to a complex number once, so for x = y the diagonal
    phases cancel symbolically and the result is exactly the coefficient
    l2-norm squared.
    """
    check_same_frame(x.frame, y.frame)
    total = 0j
    for m1, c1 in x.terms.items():
        phase1, m1_star = monomial_adjoint(m1)
        for m2, c2 in y.terms.items():
            phase12, m12 = monomial_product(m1_star, m2)
            if m12.is_identity():
                total += c1.conjugate() * c2 * (phase1 + phase12).to_complex()
    return total
