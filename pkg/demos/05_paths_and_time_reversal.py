"""State paths in the weak-* topology and the time-reversal classification.

Plane-wave, Zak and Bloch families are all path-connected at the level this
library can probe: sampled paths have consecutive weak-* steps that shrink
linearly with the grid.  Time reversal singles out finitely many labels.
"""

import math
from fractions import Fraction

from weylccr import (
    Bloch,
    Element,
    Frame,
    Monomial,
    PlaneWave,
    Zak,
    enumerate_trs_fixed_points,
    path_sample,
    time_reversal_classify,
    weak_star_distance,
)
from weylccr.lattice import vector

F1 = Frame.standard(1)

# lattice monomials keep the Zak family visible; fractional positions probe
# the other families
probes = [Element.from_monomial(F1, Monomial(vector([k]), vector([Fraction(j, 3)])))
          for k in (-1, 0, 1) for j in (-2, 1, 2)]
probes += [Element.from_monomial(F1, Monomial(vector([k]), vector([j])))
           for k, j in ((1, 0), (0, 1), (1, 1), (-1, 2))]


def grid(n):
    return [Fraction(k, n) for k in range(n + 1)]


def max_step(kind, endpoints, n):
    path = path_sample(kind, endpoints, grid(n))
    return max(weak_star_distance(a, b, probes) for a, b in zip(path, path[1:]))


print("== weak-* step decay under grid refinement ==")
cases = [
    ("plane_wave_line", (PlaneWave(vector([Fraction(3, 2)])), PlaneWave(vector([0])))),
    ("zak_line", (Zak([Fraction(1, 8)], [Fraction(1, 3)]),
                  Zak([Fraction(3, 4)], [Fraction(2, 3)]))),
    ("bloch_slerp", (Bloch([Fraction(0)], {(0,): 1.0}),
                     Bloch([Fraction(1, 2)], {(0,): 0.6, (1,): 0.8}))),
]
print(f"{'kind':>16s} {'n=16':>10s} {'n=32':>10s} {'n=64':>10s} {'ratio':>7s}")
for kind, endpoints in cases:
    steps = [max_step(kind, endpoints, n) for n in (16, 32, 64)]
    print(f"{kind:>16s} {steps[0]:10.5f} {steps[1]:10.5f} {steps[2]:10.5f} "
          f"{steps[1] / steps[0]:7.3f}")

path = path_sample("plane_wave_line",
                   (PlaneWave(vector([Fraction(3, 2)])), PlaneWave(vector([0]))),
                   grid(4))
print(f"momenta along the plane-wave path: {[str(s.p[0]) for s in path]}")

print()
print("== time-reversal classification ==")
for state, label in [
    (PlaneWave(vector([0])), "plane wave p = 0"),
    (PlaneWave(vector([Fraction(1, 7)])), "plane wave p = 1/7"),
    (Zak([Fraction(1, 2)], [Fraction(1, 3)]), "Zak kappa = 1/2, nu = 1/3"),
    (Zak([Fraction(1, 3)], [Fraction(0)]), "Zak kappa = 1/3"),
    (Bloch([Fraction(0)], {(0,): 1.0}), "Bloch kappa = 0, fhat = delta_0"),
    (Bloch([Fraction(1, 2)],
           {(-1,): 1 / math.sqrt(2), (0,): 1 / math.sqrt(2)}),
     "Bloch kappa = 1/2, symmetric fhat"),
    (Bloch([Fraction(1, 2)], {(-1,): 0.6, (0,): 0.8j}),
     "Bloch kappa = 1/2, asymmetric fhat"),
]:
    verdict = time_reversal_classify(state)
    print(f"{label:36s} -> {'TRI' if verdict.is_tri else 'not TRI':8s} "
          f"[{verdict.certificate}]")

print()
print("the reflection-fixed quasi-momenta at d = 2 "
      f"({len(enumerate_trs_fixed_points(Frame.standard(2)))} of them):")
for kappa in enumerate_trs_fixed_points(Frame.standard(2)):
    print(f"  kappa = ({kappa[0]}, {kappa[1]})")
