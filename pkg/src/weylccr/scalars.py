"""Exact scalars: rational functions of the symbol tau over the rationals.

The symbol ``tau`` stands for the real number 2*pi.  Every coordinate, every
pairing and every phase angle in this package lives in the field Q(tau).
Because pi is transcendental, two such scalars are equal as real numbers if
and only if their canonical forms coincide, so phase bookkeeping is exact:
an angle represents a full turn exactly when it is an integer multiple of tau.

Polynomials are stored densely as tuples of ``Fraction`` coefficients, lowest
degree first, with no trailing zeros (the zero polynomial is the empty tuple).
Degrees stay tiny in practice (products of pairings reach degree two or three)
so the naive Euclidean algorithms below are more than fast enough.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

TWO_PI = 2.0 * math.pi

Poly = tuple  # tuple[Fraction, ...]


def _trim(coeffs) -> Poly:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pneg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def _pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    qlen = len(q)
    quo = [Fraction(0)] * max(len(p) - qlen + 1, 0)
    lead = q[-1]
    for k in range(len(rem) - qlen, -1, -1):
        factor = rem[k + qlen - 1] / lead
        quo[k] = factor
        if factor:
            for i in range(qlen):
                rem[k + i] -= factor * q[i]
    return _trim(quo), _trim(rem[: qlen - 1])


def _pgcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, _pdivmod(p, q)[1]
    if not p:
        return ()
    return tuple(c / p[-1] for c in p)  # monic


def _peval(p: Poly, x: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + float(c)
    return acc


@dataclass(frozen=True)
class ExactScalar:
    """Canonical-form element of Q(tau): ``num/den`` reduced, ``den`` monic."""

    num: Poly
    den: Poly = (Fraction(1),)

    def __post_init__(self):
        num = _trim(self.num)
        den = _trim(self.den)
        if not den:
            raise ZeroDivisionError("zero denominator in ExactScalar")
        if not num:
            den = (Fraction(1),)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(p, q=1) -> "ExactScalar":
        return ExactScalar((Fraction(p, q),))

    @staticmethod
    def coerce(x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, Rational):
            return ExactScalar((Fraction(x),))
        raise TypeError(f"cannot interpret {x!r} as an ExactScalar")

    # -- predicates and conversions ------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        """True when the scalar is a plain rational number (tau-free)."""
        return len(self.num) <= 1 and self.den == (Fraction(1),)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            from .errors import NotDecomposable

            raise NotDecomposable(f"{self} depends on tau")
        return self.num[0] if self.num else Fraction(0)

    def evaluate(self) -> float:
        """Numeric value with tau substituted by 2*pi."""
        return _peval(self.num, TWO_PI) / _peval(self.den, TWO_PI)

    # -- field arithmetic ----------------------------------------------

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return ExactScalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(_pneg(self.num), self.den)

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return ExactScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero ExactScalar")
        return ExactScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = S_ONE
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        num = _poly_str(self.num)
        if self.den == (Fraction(1),):
            return num
        return f"({num})/({_poly_str(self.den)})"

    __repr__ = __str__


def _coerce_or_none(x):
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, Rational):
        return ExactScalar((Fraction(x),))
    return None


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            base = "tau" if k == 1 else f"tau^{k}"
            parts.append(base if c == 1 else f"{c}*{base}")
    return " + ".join(parts) if parts else "0"


S_ZERO = ExactScalar(())
S_ONE = ExactScalar((Fraction(1),))
TAU = ExactScalar((Fraction(0), Fraction(1)))

# pi to 49 decimal places; used to count whole turns inside large angles so
# that the complex conversion never feeds a big argument to exp
_PI_RATIONAL = Fraction(31415926535897932384626433832795028841971693993751, 10**49)


def _horner_fraction(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def scalar(x) -> ExactScalar:
    """Coerce an int, Fraction or ExactScalar to an ExactScalar."""
    return ExactScalar.coerce(x)


@dataclass(frozen=True)
class PhaseAngle:
    """The radian angle of a unit complex number, stored exactly in Q(tau).

    Two angles describe the same unit complex number exactly when their
    difference is an integer multiple of tau.  The canonical form reduces the
    tau-linear coefficient of polynomial values into [0, 1); constant and
    higher-degree parts are never reducible and are kept verbatim, as are
    genuine rational-function values.
    """

    value: ExactScalar

    def __post_init__(self):
        v = self.value
        if not isinstance(v, ExactScalar):
            v = ExactScalar.coerce(v)
        if v.den == (Fraction(1),) and len(v.num) >= 2:
            c1 = v.num[1]
            shift = math.floor(c1)
            if shift:
                num = list(v.num)
                num[1] = c1 - shift
                v = ExactScalar(tuple(num), v.den)
        object.__setattr__(self, "value", v)

    @staticmethod
    def zero() -> "PhaseAngle":
        return PhaseAngle(S_ZERO)

    @staticmethod
    def from_turns(r) -> "PhaseAngle":
        """Angle of ``r`` full turns, r rational."""
        return PhaseAngle(TAU * ExactScalar.coerce(r))

    def __add__(self, other: "PhaseAngle") -> "PhaseAngle":
        return PhaseAngle(self.value + other.value)

    def __sub__(self, other: "PhaseAngle") -> "PhaseAngle":
        return PhaseAngle(self.value - other.value)

    def __neg__(self) -> "PhaseAngle":
        return PhaseAngle(-self.value)

    def is_same_rotation(self, other: "PhaseAngle") -> bool:
        """Exact test that both angles give the same unit complex number."""
        diff = self.value - other.value
        if diff.is_zero():
            return True
        ratio = diff / TAU
        return ratio.is_rational() and ratio.as_fraction().denominator == 1

    def is_zero_rotation(self) -> bool:
        return self.is_same_rotation(PhaseAngle.zero())

    def radians(self) -> float:
        return self.value.evaluate()

    def to_complex(self) -> complex:
        """The unit complex number e^{i angle}.

        The angle is reduced by an exact whole number of turns first, so the
        result keeps full double precision even for large tau-quadratic
        angles, and exact full turns map to exactly 1.
        """
        v = self.value
        if v.den == (Fraction(1),):
            if not v.num:
                return 1.0 + 0.0j
            if len(v.num) <= 2 and v.num[0] == 0:
                frac = v.num[1] % 1
                return cmath.exp(2j * math.pi * float(frac)) if frac else 1.0 + 0.0j
        x = 2 * _PI_RATIONAL
        turns = _horner_fraction(v.num, x) / _horner_fraction(v.den, x) / x
        frac = turns - math.floor(turns)
        return cmath.exp(2j * math.pi * float(frac)) if frac else 1.0 + 0.0j

    def __str__(self):
        return f"angle({self.value})"

    __repr__ = __str__
