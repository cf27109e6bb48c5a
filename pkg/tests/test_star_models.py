import math

import pytest

from reebforce.errors import HypothesisError, InputError, ResonanceError
from reebforce.orbits import OrbitSpec, cz
from reebforce.star_models import (
    GammaProfile,
    HopfClass,
    TorusOrbitFamily,
    cch_hopf_complement,
    classify_orbits,
    ellipsoid_orbits,
    example3_cch,
    forcing_hopf,
    linking_torus_orbits,
)
from reebforce.surd import Surd
from conftest import brute_force_forcing

S2 = Surd.sqrt(2)
ONE = Surd.rational(1)


def ellipsoid_samples(a=1.0, b=math.sqrt(2), n=21):
    """The segment x/a + y/b = 1 in the squared-radius quadrant."""
    return [(i / (n - 1), a * (1 - i / (n - 1)), b * i / (n - 1), -a, b)
            for i in range(n)]


class TestGammaProfile:
    def test_rational_slopes_rejected(self):
        with pytest.raises(ResonanceError):
            GammaProfile(Surd.rational(1, 2), S2)
        with pytest.raises(ResonanceError):
            GammaProfile(S2, Surd.rational(3))

    def test_valid_samples(self):
        GammaProfile(S2, S2, ellipsoid_samples())

    def test_not_star_shaped(self):
        bad = [(0.0, 1.0, 0.0, 0.0, 1.0),
               (0.5, 1.0, 1.0, -1.0, -1.0),  # x*y' - x'*y = -1 + 1 = 0
               (1.0, 0.0, 1.0, -1.0, 0.1)]
        with pytest.raises(InputError):
            GammaProfile(S2, S2, bad)

    def test_bad_endpoints(self):
        bad = [(0.0, 0.0, 1.0, -1.0, 1.0),  # starts on the y-axis
               (0.5, 1.0, 1.0, -1.0, 1.0),
               (1.0, 0.0, 2.0, -1.0, 1.0)]
        with pytest.raises(InputError):
            GammaProfile(S2, S2, bad)

    def test_nonmonotone_slope(self):
        bad = [(0.0, 1.0, 0.0, -0.5, 1.0),
               (0.4, 0.8, 0.5, -1.5, 1.0),
               (0.7, 0.5, 0.8, -0.5, 1.0),
               (1.0, 0.0, 1.0, -1.5, 1.0)]
        with pytest.raises(InputError):
            GammaProfile(S2, S2, bad)


class TestEllipsoid:
    def test_rotation_numbers(self):
        orb = ellipsoid_orbits(S2)
        assert orb.P_theta == ONE + S2
        assert orb.Q_theta == Surd(2, 1, 2, 2)  # 1 + sqrt2/2

    def test_cz_of_P(self):
        orb = ellipsoid_orbits(S2)
        assert cz(OrbitSpec.elliptic("P", orb.P_theta), 1) == 5

    def test_linking(self):
        orb = ellipsoid_orbits(S2)
        assert orb.linking(3, 1) == 3
        assert orb.linking(1, 2) == 2

    def test_rejects(self):
        with pytest.raises(ResonanceError):
            ellipsoid_orbits(Surd.rational(2))
        with pytest.raises(InputError):
            ellipsoid_orbits(-S2)


class TestClassifyOrbits:
    def test_case1(self):
        fams = classify_orbits(GammaProfile(S2 - 1, S2), 2)
        assert [(f.cls.p, f.cls.q) for f in fams] == [(1, 1), (2, 1)]
        assert all(f.arc == "second" for f in fams)
        assert fams[0].gradings == (4, 5)

    def test_case1_reversed_gradings(self):
        fams = classify_orbits(GammaProfile(S2, S2 - 1), 2)
        assert [(f.cls.p, f.cls.q) for f in fams] == [(1, 1), (2, 1)]
        assert fams[0].gradings == (4, 3)

    def test_case2(self):
        fams = classify_orbits(GammaProfile(-S2, S2), 1)
        assert [(f.cls.p, f.cls.q) for f in fams] == [(1, -1), (1, 0), (1, 1)]
        arcs = {f.cls.q: f.arc for f in fams}
        assert arcs == {-1: "first", 0: "t1-endpoint", 1: "second"}

    def test_case3_relabeling(self):
        # the plane swap inverts the slopes: (s2/2, -s2/2) relabels to the
        # case-2 model (-s2, s2) with every class transposed
        fams = classify_orbits(GammaProfile(S2 / 2, -S2 / 2), 1)
        assert [(f.cls.p, f.cls.q) for f in fams] == [(-1, 1), (0, 1), (1, 1)]
        arcs = {f.cls.p: f.arc for f in fams}
        assert arcs == {-1: "third", 0: "t2-endpoint", 1: "second"}

    def test_case4_has_all_arcs(self):
        fams = classify_orbits(GammaProfile(-S2, -S2 / 2), 2)
        arcs = {f.arc for f in fams}
        assert arcs == {"first", "t1-endpoint", "second", "t2-endpoint",
                        "third"}
        assert HopfClass(1, 0) in {f.cls for f in fams}
        assert HopfClass(0, 1) in {f.cls for f in fams}

    def test_equal_thetas_rejected(self):
        with pytest.raises(InputError):
            classify_orbits(GammaProfile(S2, S2), 2)

    @pytest.mark.parametrize("t1,t2", [
        (S2 - 1, S2), (-S2, S2), (S2, -S2), (-S2, -S2 / 2), (-S2 / 2, -S2),
    ])
    def test_matches_forcing_classes(self, t1, t2):
        # the family list and the forcing enumeration agree as class sets
        fams = {(f.cls.p, f.cls.q) for f in
                classify_orbits(GammaProfile(t1, t2), 6)}
        forced = {(f.cls.p, f.cls.q) for f in forcing_hopf(t1, t2, 6)}
        assert fams == forced

    def test_all_classes_simple_and_graded(self):
        for fam in classify_orbits(GammaProfile(-S2, -S2 / 2), 5):
            assert fam.cls.is_simple
            base = 2 * (fam.cls.p + fam.cls.q)
            assert fam.gradings == (base, base + 1)


class TestTorusOrbitFamily:
    def test_grading_gap_enforced(self):
        with pytest.raises(InputError):
            TorusOrbitFamily(HopfClass(1, 1), "second", (4, 6))

    def test_simple_enforced(self):
        with pytest.raises(InputError):
            TorusOrbitFamily(HopfClass(2, 4), "second", (12, 13))


class TestForcing:
    def test_case1_exact(self):
        got = {(f.cls.p, f.cls.q) for f in forcing_hopf(S2 - 1, S2, 2)}
        assert got == {(1, 1), (2, 1)}

    def test_links(self):
        rec = forcing_hopf(S2 - 1, S2, 2)[0]
        assert (rec.link_L1, rec.link_L2) == (rec.cls.q, rec.cls.p)

    def test_case2_exact(self):
        got = {(f.cls.p, f.cls.q) for f in forcing_hopf(-S2, S2 - 1, 1)}
        assert got == {(1, -1), (1, 0)}

    def test_case3_union(self):
        got = {(f.cls.p, f.cls.q) for f in forcing_hopf(-S2, -S2 / 2, 1)}
        assert got == {(1, -1), (1, 0), (1, 1), (0, 1), (-1, 1)}

    @pytest.mark.parametrize("t1,t2", [
        (S2 - 1, S2), (S2, S2 - 1), (-S2, S2 - 1), (S2 - 1, -S2),
        (-S2, -S2 / 2), (Surd.sqrt(3) / 7, Surd.sqrt(5)),
        (-Surd.sqrt(7), -Surd.sqrt(3) / 3),
    ])
    def test_against_brute_force(self, t1, t2):
        got = {(f.cls.p, f.cls.q) for f in forcing_hopf(t1, t2, 12)}
        assert got == brute_force_forcing(t1, t2, 12)

    def test_rejects_degenerate(self):
        with pytest.raises(InputError):
            forcing_hopf(S2, S2, 3)
        with pytest.raises(InputError):
            forcing_hopf(Surd.rational(1, 2), S2, 3)


class TestCCH:
    def test_admissible_class(self):
        res = cch_hopf_complement(GammaProfile(S2 - 1, S2), 2)
        assert res.degrees(HopfClass(1, 1)) == {4: 1, 5: 1}
        assert res.rank(HopfClass(1, 2), 6) == 0

    def test_reversed_profile_gradings(self):
        res = cch_hopf_complement(GammaProfile(S2, S2 - 1), 2)
        assert res.degrees(HopfClass(1, 1)) == {4: 1, 3: 1}

    def test_total_rank(self):
        res = cch_hopf_complement(GammaProfile(-S2, -S2 / 2), 4)
        for c in res.classes():
            assert res.total_rank(c) == 2
        assert res.total_rank(HopfClass(9, 77)) == 0

    def test_binding_indices_cross_check(self):
        # CZ(H1^k) = 2*floor(k*(1+theta1)) + 1, similarly H2 with 1 + 1/theta2
        t1, t2 = S2 - 1, S2
        h1 = OrbitSpec.elliptic("H1", ONE + t1)
        h2 = OrbitSpec.elliptic("H2", ONE + t2.inverse())
        for k in range(1, 21):
            assert cz(h1, k) == 2 * ((ONE + t1) * k).floor() + 1
            assert cz(h2, k) == 2 * ((ONE + t2.inverse()) * k).floor() + 1


class TestLinking:
    def test_known_value(self):
        assert linking_torus_orbits((1, 2), (1, 1)) == 2

    def test_symmetry(self):
        assert linking_torus_orbits((1, 1), (1, 2)) == 2

    def test_derived(self):
        assert linking_torus_orbits((2, 3), (3, 4)) == 9

    def test_equal_slopes_rejected(self):
        with pytest.raises(InputError):
            linking_torus_orbits((1, 2), (2, 4))


class TestExample3:
    PROFILE = GammaProfile(S2 / 4, S2 * 4)
    T1 = HopfClass(1, 2)
    T2 = HopfClass(2, 1)

    def test_admissible_target(self):
        res = example3_cch(self.PROFILE, self.T1, self.T2, HopfClass(1, 1))
        assert res.plc_ok
        assert res.ranks == {4: 1, 5: 1}

    def test_plc_gate(self):
        # q'' = q: the linking numbers with T2 coincide
        res = example3_cch(self.PROFILE, self.T1, self.T2, HopfClass(3, 2))
        assert not res.plc_ok
        assert res.ranks == {10: 1, 11: 1}

    def test_ordering_violation(self):
        with pytest.raises(HypothesisError):
            example3_cch(self.PROFILE, self.T2, self.T1, HopfClass(1, 1))

    def test_needs_positive_profile(self):
        with pytest.raises(HypothesisError):
            example3_cch(GammaProfile(-S2, S2), self.T1, self.T2,
                         HopfClass(1, 1))

    def test_non_coprime_rejected(self):
        with pytest.raises(InputError):
            example3_cch(self.PROFILE, self.T1, self.T2, HopfClass(2, 2))
