import cmath
import math
from fractions import Fraction

import pytest

from weylccr import (
    Bloch,
    BohrState,
    ContinuousCharacter,
    Element,
    Fock,
    Frame,
    FreeDynamics,
    Mixture,
    Monomial,
    MomentumTranslation,
    PadicCharacter,
    PhaseAngle,
    PlaneWave,
    SpaceTranslation,
    TAU,
    TimeReversal,
    Tracial,
    Zak,
    apply_automorphism,
    covariance_check,
    evaluate,
    gram_psd_check,
    invariance_check,
    multiplicativity_check,
    path_sample,
    time_reversal_classify,
    weak_star_distance,
)
from weylccr.errors import (
    FamilyMismatch,
    InvalidProbeSet,
    NotAState,
    Unsupported,
)
from weylccr.lattice import vector
from weylccr.states import bloch_monomial_value
from conftest import (
    rand_complex,
    rand_coords,
    rand_element,
    rand_lattice_monomial,
    rand_monomial,
    rand_normalized_fhat,
    seeded,
)

F1 = Frame.standard(1)
FTAU = Frame.from_basis([[TAU]])


def mono(a, b):
    return Monomial(vector(a), vector(b))


class TestEvaluation:
    def test_tracial(self):
        tr = Tracial()
        assert tr.monomial_value(F1, mono([1], [1])) == 0j
        assert tr.monomial_value(F1, mono([0], [0])) == 1.0

    def test_fock_two_pi_frame(self):
        # E = [tau] makes the ambient momentum equal to the coordinate, so
        # omega_F(u_1 v_0) = e^{-1/4}
        val = Fock().monomial_value(FTAU, mono([1], [0]))
        assert val == pytest.approx(0.778800783071405, abs=1e-12)

    def test_fock_phase_factor(self):
        # omega_F(u_a v_b) carries e^{(i/2) alpha.beta}
        val = Fock().monomial_value(FTAU, mono([1], [Fraction(1, 2)]))
        width = math.exp(-(1.0 + math.pi**2) / 4.0)
        assert val == pytest.approx(width * cmath.exp(0.25j * 2 * math.pi), abs=1e-12)

    def test_plane_wave(self):
        pw = PlaneWave(vector([Fraction(1, 2)]))
        assert pw.monomial_value(F1, mono([Fraction(1, 2)], [1])) == 0j
        got = pw.monomial_value(F1, mono([0], [1]))
        assert abs(got - cmath.exp(-0.5j)) < 1e-15

    def test_bohr_continuous_equals_plane_wave(self):
        rng = seeded("bohr-pw")
        p = rand_coords(rng, 1)
        pw = PlaneWave(p)
        bs = BohrState(ContinuousCharacter(p))
        for _ in range(30):
            m = rand_monomial(rng, 1)
            assert pw.monomial_value(F1, m) == bs.monomial_value(F1, m)

    def test_bloch_delta_is_plane_wave_at_kappa(self):
        kappa = Fraction(1, 3)
        bl = Bloch([kappa], {(0,): 1.0})
        pw = PlaneWave((TAU * kappa,))  # ambient kappa for E = I
        rng = seeded("bloch-delta")
        for _ in range(30):
            m = rand_monomial(rng, 1)
            assert abs(bl.monomial_value(F1, m) - pw.monomial_value(F1, m)) < 1e-15

    def test_bloch_fourier_sum(self):
        inv = 1.0 / math.sqrt(2.0)
        bl = Bloch([Fraction(0)], {(0,): inv, (1,): inv})
        # a = 1: single overlap conj(f(1)) f(0) e^{0} = 1/2 at b = 0
        assert bl.monomial_value(F1, mono([1], [0])) == pytest.approx(0.5)
        got = bl.monomial_value(F1, mono([0], [Fraction(1, 2)]))
        want = 0.5 + 0.5 * cmath.exp(-1j * math.pi)
        assert got == pytest.approx(want, abs=1e-12)

    def test_zak_lattice_values(self):
        zk = Zak([Fraction(0)], [Fraction(0)])
        assert zk.monomial_value(F1, mono([1], [1])) == 1.0 + 0j
        assert zk.monomial_value(F1, mono([2], [-3])) == 1.0 + 0j
        assert zk.monomial_value(F1, mono([1], [Fraction(1, 2)])) == 0j
        zk = Zak([Fraction(1, 3)], [Fraction(1, 4)])
        got = zk.monomial_value(F1, mono([1], [1]))
        want = cmath.exp(-2j * math.pi * (1 / 3 + 1 / 4))
        assert abs(got - want) < 1e-15

    def test_unit_normalization_across_families(self):
        rng = seeded("units")
        one = Element.one(F1)
        states = [PlaneWave(rand_coords(rng, 1)),
                  BohrState(PadicCharacter((5,))),
                  Bloch([Fraction(1, 4)], rand_normalized_fhat(rng, 1)),
                  Zak([Fraction(1, 3)], [Fraction(2, 3)]),
                  Fock(), Tracial(),
                  Mixture([(0.5, Fock()), (0.5, Tracial())])]
        for s in states:
            assert abs(evaluate(s, one) - 1.0) <= 1e-12

    def test_evaluation_linear(self):
        rng = seeded("linear")
        s = Zak([Fraction(1, 5)], [Fraction(2, 5)])
        x, y = rand_element(rng, F1), rand_element(rng, F1)
        c = rand_complex(rng)
        lhs = evaluate(s, x + c * y)
        rhs = evaluate(s, x) + c * evaluate(s, y)
        assert abs(lhs - rhs) < 1e-12


class TestValidation:
    def test_bloch_requires_normalized_fhat(self):
        with pytest.raises(NotAState):
            Bloch([Fraction(0)], {(0,): 0.9})

    def test_bloch_kappa_range(self):
        with pytest.raises(NotAState):
            Bloch([Fraction(3, 2)], {(0,): 1.0})

    def test_zak_label_range(self):
        with pytest.raises(NotAState):
            Zak([Fraction(1, 2)], [Fraction(-1, 4)])

    def test_mixture_weights(self):
        with pytest.raises(NotAState):
            Mixture([(0.5, Tracial()), (0.6, Fock())])
        with pytest.raises(NotAState):
            Mixture([(-0.5, Tracial()), (1.5, Fock())])


class TestGram:
    def test_tracial_gram_is_identity(self):
        # off-diagonal products never hit the identity monomial, by hand
        probes = [mono([0], [0]), mono([1], [0]), mono([0], [Fraction(1, 2)]),
                  mono([Fraction(1, 2)], [Fraction(1, 3)])]
        rep = gram_psd_check(Tracial(), F1, probes)
        assert rep.min_eigenvalue == pytest.approx(1.0, abs=1e-12)
        assert rep.hermitian_residual == 0.0
        assert rep.passed

    def test_single_probe_plane_wave(self):
        rep = gram_psd_check(PlaneWave(vector([0])), F1, [mono([0], [0])])
        assert rep.min_eigenvalue == pytest.approx(1.0)

    def test_all_families_positive(self):
        rng = seeded("gram")
        fhat = rand_normalized_fhat(rng, 1)
        states = [PlaneWave(rand_coords(rng, 1)),
                  BohrState(PadicCharacter((3,))),
                  Bloch([Fraction(5, 12)], fhat),
                  Zak([Fraction(1, 6)], [Fraction(5, 6)]),
                  Fock(), Tracial(),
                  Mixture([(0.4, Fock()), (0.3, Tracial()),
                           (0.3, PlaneWave(rand_coords(rng, 1)))])]
        probes = []
        seen = set()
        while len(probes) < 20:
            m = (rand_lattice_monomial(rng, 1) if rng.random() < 0.5
                 else rand_monomial(rng, 1))
            if m not in seen:
                seen.add(m)
                probes.append(m)
        for s in states:
            rep = gram_psd_check(s, F1, probes, tol=1e-10)
            assert rep.passed, (s, rep)
            assert rep.hermitian_residual <= 1e-12

    def test_duplicate_probes_rejected(self):
        with pytest.raises(InvalidProbeSet):
            gram_psd_check(Tracial(), F1, [mono([0], [0]), mono([0], [0])])


class TestInvariance:
    def test_plane_wave_exact(self):
        rng = seeded("inv-pw")
        samples = [rand_element(rng, F1, 5) for _ in range(100)]
        s = PlaneWave(rand_coords(rng, 1))
        for spec in (SpaceTranslation(rand_coords(rng, 1)),
                     FreeDynamics(Fraction(3, 2))):
            rep = invariance_check(s, spec, samples, tol=0.0)
            assert rep.passed and rep.max_deviation == 0.0

    def test_bohr_exact(self):
        rng = seeded("inv-bohr")
        samples = [rand_element(rng, F1, 5) for _ in range(50)]
        s = BohrState(PadicCharacter((3,)))
        for spec in (SpaceTranslation(rand_coords(rng, 1)),
                     FreeDynamics(rand_coords(rng, 1)[0].as_fraction())):
            rep = invariance_check(s, spec, samples, tol=0.0)
            assert rep.passed

    def test_bloch_under_lattice_translations(self):
        rng = seeded("inv-bloch")
        samples = [rand_element(rng, F1, 5) for _ in range(50)]
        s = Bloch([Fraction(2, 7)], rand_normalized_fhat(rng, 1))
        rep = invariance_check(s, SpaceTranslation(vector([3])), samples, tol=1e-12)
        assert rep.passed
        # non-lattice translations break invariance for some sample
        probe = Element.from_monomial(F1, mono([1], [0]))
        rep = invariance_check(s, SpaceTranslation(vector([Fraction(1, 3)])),
                               [probe], tol=1e-12)
        assert not rep.passed

    def test_zak_under_composed_translations(self):
        rng = seeded("inv-zak")
        samples = [rand_element(rng, F1, 5) for _ in range(50)]
        s = Zak([Fraction(1, 3)], [Fraction(1, 4)])
        rep = invariance_check(
            s, (SpaceTranslation(vector([2])), MomentumTranslation(vector([-1]))),
            samples, tol=1e-12)
        assert rep.passed

    def test_fock_breaks_free_dynamics(self):
        probe = Element.from_monomial(FTAU, mono([1], [0]))
        rep = invariance_check(Fock(), FreeDynamics(Fraction(1)), [probe], tol=1e-10)
        assert not rep.passed
        want = abs(math.exp(-0.5) - math.exp(-0.25))
        assert rep.max_deviation == pytest.approx(want, abs=1e-6)


class TestMultiplicativity:
    def test_zak_exact(self):
        rng = seeded("mult-zak")
        s = Zak([Fraction(1, 3)], [Fraction(2, 5)])
        probes = []
        seen = set()
        while len(probes) < 8:
            m = rand_lattice_monomial(rng, 1, span=2)
            if m not in seen:
                seen.add(m)
                probes.append(m)
        rep = multiplicativity_check(s, F1, probes, tol=1e-12)
        assert rep.passed

    def test_plane_wave_on_positions(self):
        rng = seeded("mult-pw")
        s = PlaneWave(rand_coords(rng, 1))
        probes = [mono([0], [Fraction(k, 3)]) for k in range(-3, 4)]
        rep = multiplicativity_check(s, F1, probes, tol=1e-12)
        assert rep.passed

    def test_tracial_gap_exactly_one(self):
        rep = multiplicativity_check(Tracial(), F1, [mono([0], [1]), mono([0], [-1])])
        assert not rep.passed
        assert rep.max_deviation == 1.0

    def test_noncommuting_probes_rejected(self):
        with pytest.raises(InvalidProbeSet):
            multiplicativity_check(Tracial(), F1,
                                   [mono([Fraction(1, 2)], [0]),
                                    mono([0], [Fraction(1, 2)])])


class TestTimeReversal:
    def test_plane_wave(self):
        assert time_reversal_classify(PlaneWave(vector([0, 0]))).is_tri
        assert not time_reversal_classify(PlaneWave(vector([Fraction(1, 7), 0]))).is_tri
        assert not time_reversal_classify(PlaneWave((TAU,))).is_tri

    def test_zak_criterion(self):
        assert time_reversal_classify(Zak([Fraction(1, 2)], [Fraction(1, 3)])).is_tri
        assert time_reversal_classify(Zak([Fraction(0), Fraction(1, 2)],
                                          [Fraction(1, 5), Fraction(3, 4)])).is_tri
        assert not time_reversal_classify(Zak([Fraction(1, 3)], [Fraction(0)])).is_tri

    def test_bohr_characters(self):
        assert time_reversal_classify(BohrState(ContinuousCharacter(vector([0])))).is_tri
        assert not time_reversal_classify(BohrState(PadicCharacter((3,)))).is_tri

    def test_bloch_symmetric_cases(self):
        assert time_reversal_classify(Bloch([Fraction(0)], {(0,): 1.0})).is_tri
        inv = 1.0 / math.sqrt(2.0)
        assert time_reversal_classify(
            Bloch([Fraction(1, 2)], {(-1,): inv, (0,): inv})).is_tri
        # unit global phase is allowed
        assert time_reversal_classify(
            Bloch([Fraction(0)], {(-1,): 0.6j, (0,): math.sqrt(0.28) * 1j,
                                  (1,): 0.6j})).is_tri

    def test_bloch_negative_cases(self):
        assert not time_reversal_classify(
            Bloch([Fraction(1, 3)], {(0,): 1.0})).is_tri
        assert not time_reversal_classify(
            Bloch([Fraction(1, 2)], {(-1,): 0.6, (0,): 0.8j})).is_tri

    def test_classifier_matches_functional_definition(self):
        rng = seeded("tri-functional")
        inv = 1.0 / math.sqrt(2.0)
        states = [Bloch([Fraction(0)], {(0,): 1.0}),
                  Bloch([Fraction(1, 2)], {(-1,): inv, (0,): inv}),
                  Bloch([Fraction(1, 4)], {(0,): 1.0})]
        for _ in range(5):
            states.append(Bloch([Fraction(rng.randint(0, 11), 12)],
                                rand_normalized_fhat(rng, 1)))
        probes = [Element.from_monomial(
            F1, Monomial(vector([rng.randint(-2, 2)]), rand_coords(rng, 1)),
            rand_complex(rng)) for _ in range(50)]
        c = TimeReversal()
        for s in states:
            dev = max(abs(evaluate(s, apply_automorphism(c, x))
                          - evaluate(s, x).conjugate()) for x in probes)
            assert (dev <= 1e-10) == time_reversal_classify(s).is_tri

    def test_unsupported_families(self):
        for s in (Fock(), Tracial(), Mixture([(1.0, Fock())])):
            with pytest.raises(Unsupported):
                time_reversal_classify(s)


class TestCovariance:
    def test_zero_shift_identity(self):
        rng = seeded("cov-zero")
        fhat = rand_normalized_fhat(rng, 1)
        probes = [rand_lattice_monomial(rng, 1) for _ in range(10)]
        rep = covariance_check([Fraction(1, 3)], fhat, [0], probes, tol=0.0)
        assert rep.passed and rep.max_deviation == 0.0

    def test_delta_case_by_hand(self):
        # fhat = delta_0, gamma' = 1: both sides give e^{-i(kappa+1) beta} on v_b
        kappa = Fraction(1, 3)
        fhat = {(0,): 1.0}
        for b in (Fraction(1, 2), Fraction(2, 3), Fraction(-5, 4)):
            m = mono([0], [b])
            lhs = bloch_monomial_value((kappa + 1,), fhat, m)
            want = PhaseAngle(-TAU * (kappa + 1) * b).to_complex()
            assert abs(lhs - want) < 1e-15
            rhs = bloch_monomial_value((kappa,), {(1,): 1.0}, m)
            assert abs(lhs - rhs) < 1e-15

    def test_random_triples(self):
        rng = seeded("cov-random")
        for _ in range(20):
            kappa = (Fraction(rng.randint(0, 11), 12),)
            fhat = rand_normalized_fhat(rng, 1, radius=1)
            gp = [rng.randint(-2, 2)]
            probes = [rand_monomial(rng, 1) if rng.random() < 0.3
                      else rand_lattice_monomial(rng, 1) for _ in range(30)]
            rep = covariance_check(kappa, fhat, gp, probes, tol=1e-12)
            assert rep.passed, rep


class TestWeakStar:
    def test_self_distance_zero(self):
        rng = seeded("ws-self")
        s = Fock()
        probes = [rand_element(rng, F1, 4) for _ in range(5)]
        assert weak_star_distance(s, s, probes) == 0.0

    def test_half_turn_gap(self):
        # p . beta = pi on the probe gives |e^{-i pi} - 1| = 2
        s1 = PlaneWave((TAU * Fraction(1, 2),))
        s2 = PlaneWave(vector([0]))
        assert weak_star_distance(s1, s2, [Element.v(F1, [1])]) == pytest.approx(2.0)

    def test_pseudometric_laws(self):
        rng = seeded("ws-laws")
        probes = [rand_element(rng, F1, 4) for _ in range(8)]
        states = [Fock(), Tracial(), PlaneWave(rand_coords(rng, 1)),
                  Zak([Fraction(1, 4)], [Fraction(1, 5)])]
        for s1 in states:
            for s2 in states:
                d12 = weak_star_distance(s1, s2, probes)
                assert d12 == pytest.approx(weak_star_distance(s2, s1, probes))
                for s3 in states:
                    assert d12 <= (weak_star_distance(s1, s3, probes)
                                   + weak_star_distance(s3, s2, probes) + 1e-12)


class TestPaths:
    def test_endpoints_returned_identically(self):
        p = PlaneWave(vector([Fraction(3, 2)]))
        q = PlaneWave(vector([0]))
        path = path_sample("plane_wave_line", (p, q),
                           [Fraction(0), Fraction(1, 2), Fraction(1)])
        assert path[0] is p and path[-1] is q
        assert path[1].p == (TAU * 0 + Fraction(3, 4),)

    def test_plane_wave_line_reaches_zero(self):
        p = PlaneWave(vector([Fraction(5, 4)]))
        path = path_sample("plane_wave_line", (p, PlaneWave(vector([0]))),
                           [Fraction(k, 10) for k in range(11)])
        assert all(c.is_zero() for c in path[-1].p)

    def test_zak_line_interpolates_labels(self):
        s0 = Zak([Fraction(0)], [Fraction(0)])
        s1 = Zak([Fraction(1, 2)], [Fraction(3, 4)])
        path = path_sample("zak_line", (s0, s1), [Fraction(1, 2)])
        assert path[0].kappa == (Fraction(1, 4),)
        assert path[0].nu == (Fraction(3, 8),)

    def test_bloch_slerp_stays_normalized(self):
        rng = seeded("slerp")
        s0 = Bloch([Fraction(0)], rand_normalized_fhat(rng, 1))
        s1 = Bloch([Fraction(1, 2)], rand_normalized_fhat(rng, 1))
        path = path_sample("bloch_slerp", (s0, s1),
                           [Fraction(k, 8) for k in range(9)])
        for s in path:
            norm = sum(abs(v) ** 2 for _, v in s.fhat)
            assert norm == pytest.approx(1.0, abs=1e-12)

    def test_bloch_slerp_parallel_endpoints_constant(self):
        fhat = {(0,): 0.6, (1,): 0.8}
        s0 = Bloch([Fraction(0)], fhat)
        s1 = Bloch([Fraction(0)], {k: 1j * v for k, v in fhat.items()})
        path = path_sample("bloch_slerp", (s0, s1), [Fraction(1, 3)])
        probes = [Element.from_monomial(F1, mono([1], [Fraction(1, 5)]))]
        assert weak_star_distance(path[0], s0, probes) < 1e-12

    def test_refinement_halves_distances(self):
        rng = seeded("paths-rate")
        probes = [Element.from_monomial(
            F1, Monomial(vector([rng.randint(-1, 1)]),
                         vector([Fraction(rng.randint(-2, 2), 3)])))
            for _ in range(10)]
        p = PlaneWave(vector([Fraction(3, 2)]))
        q = PlaneWave(vector([0]))

        def max_step(n):
            path = path_sample("plane_wave_line", (p, q),
                               [Fraction(k, n) for k in range(n + 1)])
            return max(weak_star_distance(a, b, probes)
                       for a, b in zip(path, path[1:]))

        ratio = max_step(32) / max_step(16)
        assert abs(ratio - 0.5) < 0.1

    def test_family_mismatch(self):
        with pytest.raises(FamilyMismatch):
            path_sample("plane_wave_line", (PlaneWave(vector([0])), Fock()),
                        [Fraction(0)])


class TestBlochQuasimomentum:
    def test_eigenvalue_identity(self):
        rng = seeded("quasi")
        for _ in range(10):
            kappa = Fraction(rng.randint(0, 11), 12)
            s = Bloch([kappa], rand_normalized_fhat(rng, 1))
            gamma = rng.randint(-3, 3)
            c = PhaseAngle(-TAU * kappa * gamma).to_complex()
            x = Element.v(F1, [gamma]) - c * Element.one(F1)
            assert abs(evaluate(s, x.adjoint() * x)) < 1e-12
