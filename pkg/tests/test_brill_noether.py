import pytest

from enriques_bn.brill_noether import (
    STATUS_APPLIES,
    STATUS_EMPTY,
    STATUS_FAILS,
    check_mn_bound,
    cliff_chain_bound,
    enumerate_destab,
    param_count,
    plane_cover_family_report,
    predict_w1d,
    rho,
    stable_case_audit,
)
from enriques_bn.errors import NotAmpleError, RangeError
from enriques_bn.lattice import DivisorClass, basis_vector


class TestRho:
    def test_spot_values(self):
        assert rho(19, 1, 10) == -1
        assert rho(4, 0, 4) == 4
        assert rho(4, 1, 3) == 0

    def test_pencil_identity(self):
        for g in range(0, 30):
            for d in range(0, 30):
                assert rho(g, 1, d) == 2 * d - g - 2

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            rho(-1, 1, 3)


class TestPredict:
    def test_applies_table(self, pair_one):
        e1, e2 = pair_one
        pred = predict_w1d(DivisorClass(2 * e1 + 4 * e2, 0))
        assert pred.status == STATUS_APPLIES
        assert pred.genus == 9 and pred.k == 4
        assert pred.rows == ((4, -3, 0), (5, -1, 1))
        for d, r, dim in pred.rows:
            assert r <= dim
            assert dim == d - pred.k

    def test_fails_hypothesis_with_pencil_family_flag(self, pair_two):
        e1, e2 = pair_two
        pred = predict_w1d(DivisorClass(3 * (e1 + e2), 0))
        assert pred.status == STATUS_FAILS
        assert pred.infinite_pencil
        assert pred.rows == ()

    def test_empty_range(self, pair_one):
        e1, e2 = pair_one
        pred = predict_w1d(DivisorClass(2 * e1 + 2 * e2, 0))
        assert pred.status == STATUS_EMPTY
        assert pred.genus == 5 and pred.k == 4

    def test_requires_ample(self):
        with pytest.raises(NotAmpleError):
            predict_w1d(DivisorClass(basis_vector(0), 0))


@pytest.fixture(scope="module")
def polarization(pair_one):
    e1, e2 = pair_one
    return DivisorClass(2 * e1 + 4 * e2, 0), e1, e2


class TestEnumerateDestab:
    def test_range_check(self, polarization):
        L, _, _ = polarization
        with pytest.raises(RangeError):
            enumerate_destab(L, 3)
        with pytest.raises(RangeError):
            enumerate_destab(L, 6)

    def test_candidates_at_top_degree(self, polarization):
        L, e1, e2 = polarization
        cands = enumerate_destab(L, 5)
        assert len(cands) == 2
        for c in cands:
            assert c.M + c.N == L
            assert c.mn == 4 and c.ell == 1
            assert c.M.dot(L) >= c.N.dot(L)
            assert c.checklist.all_pass()
        n_classes = {c.N.num for c in cands}
        assert (e1 + e2) in n_classes  # the hyperbolic sum splits off
        half = {c.N.num for c in cands if c.M.num == c.N.num}
        assert len(half) == 1  # the symmetric splitting M = N

    def test_low_section_splittings_are_excluded(self, polarization):
        L, e1, e2 = polarization
        for d in (4, 5):
            n_classes = {c.N.num for c in enumerate_destab(L, d)}
            assert e2 not in n_classes  # h0 of a half-pencil is 1

    def test_isotropic_doubles_obey_the_point_condition(self, polarization):
        L, e1, e2 = polarization
        # N = 2 E2 has M.N = 4: admissible at d = 4 (no points), but at
        # d = 5 it would need a point scheme on a class with h1 != 0
        at4 = {c.N.num for c in enumerate_destab(L, 4)}
        at5 = {c.N.num for c in enumerate_destab(L, 5)}
        assert (2 * e2) in at4
        assert (2 * e2) not in at5

    def test_big_halves_excluded_by_ell(self, polarization):
        L, e1, e2 = polarization
        n_classes = {c.N.num for c in enumerate_destab(L, 5)}
        assert (2 * e1) not in n_classes  # M.N = 8 > 5

    def test_mn_bound(self, polarization):
        L, _, _ = polarization
        for d in (4, 5):
            min_mn, holds = check_mn_bound(L, d)
            assert min_mn == 4 and holds

    def test_no_duplicate_pairs(self, polarization):
        L, _, _ = polarization
        for d in (4, 5):
            cands = enumerate_destab(L, d)
            keys = [(c.M.num.coords, c.N.num.coords, c.M.torsion) for c in cands]
            assert len(keys) == len(set(keys))
            for c in cands:
                if c.M.dot(L) == c.N.dot(L):
                    assert c.M.num.coords >= c.N.num.coords

    def test_vacuous_bound(self, pair_two):
        e1, e2 = pair_two
        L = DivisorClass(2 * (e1 + e2), 0)  # square 16, k = 2 phi = 4... check range
        # k = min(2*4, mu, 6) -- whatever it is, pick d = k so the range is valid
        from enriques_bn.invariants import gonality

        rep = gonality(L)
        d = rep.k
        if d <= rep.genus - rep.k:
            min_mn, holds = check_mn_bound(L, d)
            assert holds


class TestCliffChainBound:
    def test_two_step_drop(self, pair_one):
        e1, e2 = pair_one
        m = DivisorClass(2 * e1 + 2 * e2, 0)
        n = DivisorClass(2 * e2, 0)
        bound = cliff_chain_bound(m, n, DivisorClass(e2, 0))
        assert bound == 4 - 2 == 2

    def test_single_step_saturates(self):
        f, g = basis_vector(0), basis_vector(1)
        m = DivisorClass(2 * f + g, 0)
        n = DivisorClass(f, 0)
        bound = cliff_chain_bound(m, n, DivisorClass(g, 0))
        assert bound == m.dot(n) - 1

    def test_orthogonal_class_rejected(self):
        f = basis_vector(0)
        m = DivisorClass(3 * f, 0)
        n = DivisorClass(f, 0)
        with pytest.raises(ValueError):
            cliff_chain_bound(m, n, DivisorClass(f, 0))

    def test_non_isotropic_rejected(self, pair_one):
        e1, e2 = pair_one
        m = DivisorClass(2 * e1 + 2 * e2, 0)
        n = DivisorClass(2 * e2, 0)
        with pytest.raises(ValueError):
            cliff_chain_bound(m, n, DivisorClass(e1 + e2, 0))


class TestParamCount:
    def test_interior_case(self):
        audit = param_count(9, 5, 4, 0, 1, 0, 0, k=4)
        assert audit.total_bound == 8
        assert audit.theorem_bound == 9
        assert audit.total_bound <= audit.theorem_bound

    def test_saturating_case(self):
        audit = param_count(9, 5, 3, 0, 2, 0, 0, k=4)
        assert audit.total_bound == 9 == audit.theorem_bound

    def test_no_extensions_without_points(self):
        audit = param_count(9, 4, 4, 0, 0, 0, 0, k=4)
        assert audit.ext_dim == -1

    def test_input_validation(self):
        with pytest.raises(ValueError):
            param_count(9, 5, 4, 3, 1, 0, 0, k=4)
        with pytest.raises(ValueError):
            param_count(9, 5, 4, 0, 2, 0, 0, k=4)  # ell != d - mn
        with pytest.raises(ValueError):
            param_count(9, 5, 6, 0, -1, 0, 0, k=4)  # negative ell

    def test_grid(self):
        for g in range(2, 41):
            for d in range(1, g + 1):
                for mn in range(0, d + 1):
                    for i in (0, 1, 2):
                        for h1, h2 in ((0, 0), (1, 0), (2, 1)):
                            a = param_count(g, d, mn, i, d - mn, h1, h2, k=mn + 1)
                            assert a.total_bound == g - 2 + d - mn
                            # mn >= k - 1 by construction here
                            assert a.total_bound <= a.theorem_bound


class TestStableCase:
    def test_moduli_dimension(self):
        assert stable_case_audit(9, 5) == (1, 1)

    def test_boundary_identity(self):
        for g in range(2, 30):
            for k in range(1, g // 2 + 1):
                d = g - k
                if d >= 1:
                    assert stable_case_audit(g, d).w_bound == d - k

    def test_negative_dimensions_not_clamped(self):
        audit = stable_case_audit(2, 1)
        assert audit.moduli_dim == -1

    def test_bound_monotone_in_d(self):
        for g in range(4, 20):
            for d in range(1, g):
                a = stable_case_audit(g, d)
                b = stable_case_audit(g, d + 1)
                assert b.w_bound == a.w_bound + 2


class TestPlaneCoverFamily:
    def test_smallest_member(self):
        r = plane_cover_family_report(3)
        assert r.l_square == 36
        assert r.genus == 19
        assert r.phi == 6
        assert r.k == 10
        assert r.gon_special == 8
        assert r.plane_genus == 1
        assert r.cs_bound == 25
        assert r.cs_holds
        assert r.pencil_family_dim == 1

    def test_gap_stays_two(self):
        for n in range(3, 11):
            r = plane_cover_family_report(n)
            assert r.k - r.gon_special == 2
            assert r.phi == 2 * n and r.k == 4 * n - 2
            assert r.genus == 2 * n * n + 1
            assert r.cs_holds

    def test_small_n_rejected(self):
        with pytest.raises(RangeError):
            plane_cover_family_report(2)
