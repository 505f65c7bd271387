"""Closed-form invariants, family constructors and their cross-checks."""

import numpy as np
import pytest

from mixedpoly import (MixedPolynomial, analyze, attainable_genera,
                       build_family, chi_relations, curve_invariants,
                       euler_join, euler_simplicial, family_chi, FamilySpec,
                       genus_from_chi, genus_table, homology_pattern,
                       milnor_join, zeta_factors, zeta_string)
from mixedpoly.errors import (AmbientDimensionError, InvalidFamilyParams,
                              NonIntegralGenus)

P = MixedPolynomial


class TestBuildFamily:
    def test_s1_display(self):
        f = build_family("s1", q=2, r=1)
        assert f == P(3, {((3, 0, 0), (1, 0, 0)): 1.0,
                          ((0, 3, 0), (0, 1, 0)): 1.0,
                          ((0, 0, 3), (0, 0, 1)): 1.0})

    def test_f_qj_display(self):
        f = build_family("f_qj", q=1, j=1)
        assert f == P(2, {((2, 0), (1, 0)): 1.0, ((0, 2), (0, 1)): 1.0})

    def test_spec_object(self):
        f = build_family(FamilySpec("k_ell", {"ell": 1}))
        assert f.n == 2
        assert len(f.terms) == 4

    def test_analyzer_agreement(self):
        rng = np.random.default_rng(61)
        for _ in range(12):
            q = int(rng.integers(1, 4))
            r = int(rng.integers(0, 3))
            j = int(rng.integers(0, r + 1))
            for kind, expected in (
                    ("s1", (q, r)),
                    ("f_qj", (q, j)),
                    ("h_join", (q, r)),
            ):
                params = {"q": q, "r": r, "j": j}
                if kind == "f_qj":
                    params = {"q": q, "j": j}
                wa = analyze(build_family(kind, **params))
                assert wa.strongly_polar_homogeneous
                assert (wa.class_q, wa.class_r) == expected
        # s2/s3 need q + r >= 2
        for q, r in ((2, 1), (3, 2), (2, 0)):
            for kind in ("s2", "s3"):
                wa = analyze(build_family(kind, q=q, r=r))
                assert (wa.class_q, wa.class_r) == (q, r)

    def test_k_ell_class(self):
        wa = analyze(build_family("k_ell", ell=2))
        assert (wa.class_q, wa.class_r) == (0, 2)

    def test_s4_s5_polar_only(self):
        # these displays are polar homogeneous of degree q but their
        # radial weights are not all 1
        for kind in ("s4", "s5"):
            wa = analyze(build_family(kind, q=2, r=1))
            assert wa.polar_weights == (1, 1, 1)
            assert wa.polar_degree == 2
            assert not wa.strongly_polar_homogeneous

    def test_simplicial_display(self):
        f = build_family("simplicial_f2", a1=1, a2=1, a3=2,
                         b1=1, b2=1, b3=1)
        assert f == P(3, {((2, 1, 0), (1, 0, 0)): 1.0,
                          ((0, 2, 1), (0, 1, 0)): 1.0,
                          ((0, 0, 3), (0, 0, 1)): 1.0})

    def test_join_display(self):
        f = build_family("join_f1", q=1, j=0, a3=2, b3=1)
        assert f == P(3, {((1, 0, 0), (0, 0, 0)): 1.0,
                          ((0, 1, 0), (0, 0, 0)): 1.0,
                          ((0, 0, 3), (0, 0, 1)): 1.0})

    def test_invalid_params(self):
        with pytest.raises(InvalidFamilyParams):
            build_family("s1", q=0, r=1)
        with pytest.raises(InvalidFamilyParams):
            build_family("h_join", q=1, r=1, j=5)
        with pytest.raises(InvalidFamilyParams):
            build_family("no_such_kind", q=1)
        with pytest.raises(InvalidFamilyParams):
            build_family("k_ell", ell=1, beta=0)


class TestClosedForms:
    def test_euler_join_values(self):
        assert euler_join(1, 2) == 2
        assert euler_join(0, 7) == 1
        assert euler_join(4, 3) == 9
        assert milnor_join(4, 3) == 8

    def test_euler_simplicial_forms(self):
        assert euler_simplicial("f2", 2, 3, 4) == (2 * 3 * 4 - 3 * 4 + 4, 15)
        assert euler_simplicial("f3", 2, 3, 4) == (25, 24)
        assert euler_simplicial("f3p", 2, 3, 4) == (23, 22)
        with pytest.raises(InvalidFamilyParams):
            euler_simplicial("f9", 1, 1, 1)

    def test_genus_from_chi_values(self):
        assert genus_from_chi(2, 2) == 0
        assert genus_from_chi(14, 2) == 3
        assert genus_from_chi(26, 2) == 6

    def test_genus_from_chi_rejects(self):
        with pytest.raises(NonIntegralGenus):
            genus_from_chi(3, 2)  # not divisible
        with pytest.raises(NonIntegralGenus):
            genus_from_chi(4, 2)  # chi/q - 1 odd
        with pytest.raises(NonIntegralGenus):
            genus_from_chi(-2, 2)  # genus would be negative

    def test_chi_relations(self):
        assert chi_relations(2, 2, 3) == (1, 2)
        assert chi_relations(6, 1, 4) == (6, -2)
        assert chi_relations(0, 5, 3) == (0, 3)
        with pytest.raises(NonIntegralGenus):
            chi_relations(3, 2, 3)

    def test_zeta(self):
        assert zeta_factors(6, 3) == {3: -2}
        assert zeta_factors(5, 1) == {1: -5}
        assert zeta_factors(0, 4) == {}
        assert zeta_string(6, 3) == "(1 - t^3)^(-2)"
        assert zeta_string(0, 2) == "1"

    def test_homology_pattern(self):
        # curve of genus g: ranks (1, 2g, 1)
        for g in (0, 1, 3):
            chi = 2 * (1 + 2 * g)  # chi_F with d_p = 2: chi_V = 2 - 2g
            assert homology_pattern(3, chi, 2) == (1, 2 * g, 1)
        assert homology_pattern(3, 2, 2) == (1, 0, 1)
        with pytest.raises(AmbientDimensionError):
            homology_pattern(2, 2, 1)

    def test_homology_alternating_sum(self):
        for n, chi, dp in ((3, 14, 2), (4, 8, 2), (5, 5, 1)):
            ranks = homology_pattern(n, chi, dp)
            _, chi_v = chi_relations(chi, dp, n)
            assert sum((-1) ** j * rk for j, rk in enumerate(ranks)) == chi_v


class TestFamilyTables:
    def test_genus_progression_s1(self):
        rows = genus_table("s1", range(2, 6))
        assert [row["genus"] for row in rows] == [0, 1, 3, 6]

    def test_genus_progression_s4(self):
        rows = genus_table("s4", range(2, 5))
        assert [row["genus"] for row in rows] == [3, 6, 10]

    def test_join_sweep(self):
        rows = genus_table("h_join", [2], r=3)
        assert [row["genus"] for row in rows] == [0, 1, 2, 3]
        assert attainable_genera(2, 3) == (0, 1, 2, 3)

    def test_attainable_step(self):
        assert attainable_genera(3, 2) == (1, 3, 5)
        assert attainable_genera(4, 1) == (3, 6)

    def test_specialization_identities(self):
        for q in range(2, 7):
            chi_s = q ** 3 - 3 * q ** 2 + 3 * q
            assert euler_simplicial("f2", q - 1, q - 1, q)[0] == chi_s
            assert euler_simplicial("f3", q - 1, q - 1, q - 1)[0] == chi_s
            assert euler_simplicial("f2p", q + 1, q + 1, q)[0] == \
                q * (q ** 2 + q + 1) == family_chi("s4", q)
            assert euler_simplicial("f3p", q + 1, q + 1, q + 1)[0] == \
                q * (q ** 2 + 3 * q + 3) == family_chi("s5", q)

    def test_thom_bound(self):
        for q in range(2, 7):
            floor = (q - 1) * (q - 2) // 2
            for kind in ("s1", "s2", "s3"):
                assert genus_from_chi(family_chi(kind, q), q) == floor
            for kind in ("s4", "s5"):
                assert genus_from_chi(family_chi(kind, q), q) > floor
            for j in range(0, 3):
                g = genus_from_chi(family_chi("h_join", q, 2, j), q)
                assert g >= floor
                assert (g == floor) == (j == 2)

    def test_curve_invariants_record(self):
        ci = curve_invariants("s4", q=2, r=1)
        assert ci.chi_F == 14
        assert ci.genus == 3
        assert ci.milnor == 13
        assert ci.chi_V == -4
        assert ci.chi_complement == 7
        assert ci.zeta_exponent == -7
        assert ci.homology == (1, 6, 1)
