import math
import random

import pytest

from enriques_bn.errors import (
    GenusTooSmallError,
    NotAmpleEnoughError,
    NotAmpleError,
)
from enriques_bn.invariants import (
    CASE_FLOOR_EXCEPTIONAL,
    CASE_FLOOR_PLAIN,
    CASE_GENERIC,
    CASE_MU_SQUARE,
    CASE_MU_SQUARE_PLUS,
    EXCEPTIONAL_SQUARE_PHI_PAIRS,
    clifford_generic,
    decompose_isotropic,
    gonality,
    mu,
    phi,
)
from enriques_bn.lattice import (
    DivisorClass,
    basis_vector,
    divisor_class,
    is_primitive,
)
from enriques_bn.positivity import classify_positivity, reference_ample
from oracles import box_classes_with_square, box_isotropic_minimum


def random_ample(rng, spread=3, max_square=60):
    """Draw an ample class with 2 <= L^2 <= max_square (rejection sampling)."""
    while True:
        d = divisor_class([rng.randint(-spread, spread) for _ in range(10)])
        if classify_positivity(-d).is_effective:
            d = -d
        st = classify_positivity(d)
        if st.is_ample and 2 <= d.square <= max_square:
            return d


def check_phi_witness(L, res):
    w = res.witness
    assert w.square == 0
    assert is_primitive(w.num)
    assert classify_positivity(w).is_effective
    assert L.dot(w) == res.value


class TestPhi:
    def test_pair_meeting_in_two(self, pair_two):
        e1, e2 = pair_two
        L = DivisorClass(e1 + e2, 0)
        res = phi(L)
        assert res.value == 2
        check_phi_witness(L, res)

    def test_uneven_polarization(self, pair_one):
        e1, e2 = pair_one
        L = DivisorClass(2 * e1 + 4 * e2, 0)
        res = phi(L)
        assert res.value == 2
        check_phi_witness(L, res)

    def test_triple_polarization(self, pair_two):
        e1, e2 = pair_two
        L = DivisorClass(3 * (e1 + e2), 0)
        res = phi(L)
        assert res.value == 6  # multiples of 3 only; 3 needs a class parallel to E1
        check_phi_witness(L, res)

    def test_precondition(self):
        with pytest.raises(NotAmpleEnoughError):
            phi(DivisorClass(basis_vector(0), 0))  # square 0

    def test_upper_bound_and_witnesses_random(self):
        rng = random.Random(41)
        for _ in range(50):
            L = random_ample(rng)
            res = phi(L)
            assert res.value <= math.isqrt(L.square)
            check_phi_witness(L, res)

    def test_agrees_with_box_oracle_on_small_squares(self):
        rng = random.Random(42)
        checked = 0
        while checked < 12:
            L = random_ample(rng, spread=2, max_square=20)
            value = phi(L).value
            assert value == box_isotropic_minimum(L.num.coords)
            checked += 1


class TestMu:
    def test_triple_polarization_value(self, pair_two):
        e1, e2 = pair_two
        L = DivisorClass(3 * (e1 + e2), 0)
        res = mu(L)
        assert res.exact and res.value == 10  # B = E1 + E2 of degree 12
        w = res.witness
        assert w.square == 4
        assert phi(w).value == 2
        assert w.num == e1 + e2

    def test_not_found_below_cap(self, pair_one):
        e1, e2 = pair_one
        res = mu(DivisorClass(2 * e1 + 4 * e2, 0), cap=6)
        assert not res.exact
        assert res.cap == 6

    def test_numerically_equal_class_rejected(self, pair_two):
        e1, e2 = pair_two
        L = DivisorClass(e1 + e2, 0)  # square 4, phi 2: L itself is a candidate shape
        res = mu(L)
        if res.exact:
            assert res.witness.num != L.num
            assert res.value >= 3  # degree 4 would force B numerically equal to L

    def _box_minimum(self, L, cap):
        """Smallest L.B - 2 over box-scanned B with B^2 = 4 and phi(B) = 2,
        walking degrees upward so only the low strata need phi checks."""
        by_degree = {}
        for coords in box_classes_with_square(L.num.coords, 4, cap):
            b = divisor_class(coords)
            by_degree.setdefault(L.dot(b), []).append(b)
        for deg in sorted(by_degree):
            for b in by_degree[deg]:
                if b.num != L.num and phi(b).value == 2:
                    return deg - 2
        return None

    def test_minimality_against_box_scan(self):
        L = divisor_class([3, 1] + [0] * 8)  # square 6
        res = mu(L, cap=12)
        assert res.exact
        assert self._box_minimum(L, 12) == res.value
        w = res.witness
        assert w.square == 4 and phi(w).value == 2 and L.dot(w) == res.value + 2

    def test_not_found_matches_empty_box_scan(self):
        L = divisor_class([3, 1] + [0] * 8)
        res = mu(L)  # default cap 2 phi + 2 = 4 is below the degree floor
        assert not res.exact
        assert self._box_minimum(L, res.cap) is None


class TestGonality:
    def test_mu_square_case(self, pair_two):
        e1, e2 = pair_two
        rep = gonality(DivisorClass(3 * (e1 + e2), 0))
        assert rep.k == 10 == rep.mu.value
        assert rep.case_label == CASE_MU_SQUARE
        assert rep.k == 2 * rep.phi.value - 2
        assert rep.genus == 19

    def test_generic_case(self, pair_one):
        e1, e2 = pair_one
        rep = gonality(DivisorClass(2 * e1 + 4 * e2, 0))
        assert rep.k == 4 == 2 * rep.phi.value
        assert rep.case_label == CASE_GENERIC
        assert rep.genus == 9
        assert rep.floor_term == 6

    def test_floor_exceptional_case(self, triple_one):
        e1, e2, e3 = triple_one
        rep = gonality(DivisorClass(e1 + e2 + e3, 0))
        assert (rep.genus - 1) * 2 == 6  # L^2 = 6
        assert rep.phi.value == 2
        assert rep.k == 3 == rep.floor_term == 2 * rep.phi.value - 1
        assert rep.case_label == CASE_FLOOR_EXCEPTIONAL

    def test_exceptional_identity_table(self):
        for sq, p in EXCEPTIONAL_SQUARE_PHI_PAIRS:
            assert sq // 4 + 2 == 2 * p - 1

    def test_square_plus_shape_small_phi(self, triple_iii):
        # (L^2, phi) = (10, 3): the Hodge bound (L.B)^2 >= 4 L^2 = 40 forces
        # L.B >= 7, so mu >= 5 while the floor term already gives k = 4
        e1, e2, e3 = triple_iii
        rep = gonality(DivisorClass(e1 + e2 + e3, 0))
        assert (rep.genus - 1) * 2 == 10
        assert rep.phi.value == 3
        assert rep.mu.exact and rep.mu.value == 5
        assert rep.k == 4 == rep.floor_term
        assert rep.case_label == CASE_FLOOR_PLAIN

    def test_square_plus_shape_phi_four(self, triple_iii):
        # (L^2, phi) = (18, 4): same Hodge phenomenon, L.B >= 9 so mu = 7
        # while the floor term gives k = 6 = 2 phi - 2
        e1, e2, e3 = triple_iii
        rep = gonality(DivisorClass(2 * e1 + e2 + e3, 0))
        assert (rep.genus - 1) * 2 == 18
        assert rep.phi.value == 4
        assert rep.mu.exact and rep.mu.value == 7
        assert rep.k == 6 == rep.floor_term == 2 * rep.phi.value - 2
        assert rep.case_label == CASE_FLOOR_PLAIN

    def test_square_plus_shape_large_phi(self, triple_iii):
        # (L^2, phi) = (28, 5): here mu = 2 phi - 1 = 9 is attainable and
        # ties the floor term, which is the classified square-plus case
        e1, e2, e3 = triple_iii
        rep = gonality(DivisorClass(2 * e1 + e2 + 2 * e3, 0))
        assert (rep.genus - 1) * 2 == 28
        assert rep.phi.value == 5
        assert rep.mu.exact and rep.mu.value == 9
        assert rep.k == 9 == 2 * rep.phi.value - 1
        assert rep.case_label == CASE_MU_SQUARE_PLUS
        assert any("2D exclusion" in note for note in rep.notes)

    def test_requires_ample(self):
        with pytest.raises(NotAmpleError):
            gonality(DivisorClass(basis_vector(0), 0))

    def test_gonality_bound_random(self):
        rng = random.Random(43)
        for _ in range(12):
            L = random_ample(rng)
            rep = gonality(L)
            assert rep.k <= (rep.genus + 3) // 2
            assert rep.k == min(
                [2 * rep.phi.value, rep.floor_term]
                + ([rep.mu.value] if rep.mu.exact else [])
            )


class TestClifford:
    def test_large_genus(self, pair_two):
        e1, e2 = pair_two
        assert clifford_generic(DivisorClass(3 * (e1 + e2), 0)) == 8

    def test_small_generic_case(self, pair_one):
        e1, e2 = pair_one
        assert clifford_generic(DivisorClass(2 * e1 + 4 * e2, 0)) == 2

    def test_genus_three_convention(self, pair_two):
        e1, e2 = pair_two
        with pytest.raises(GenusTooSmallError) as exc:
            clifford_generic(DivisorClass(e1 + e2, 0))
        assert exc.value.genus == 3
        assert exc.value.convention_value == exc.value.genus - 2  # = k - 2 here

    def test_genus_two_convention(self):
        a0 = reference_ample()
        with pytest.raises(GenusTooSmallError) as exc:
            clifford_generic(a0)  # square 2, genus 2, hyperelliptic
        assert exc.value.convention_value == 0


class TestDecompose:
    def assert_valid(self, L, dec):
        total = None
        for gen, coeff in zip(dec.generators, dec.coefficients):
            assert coeff > 0
            assert gen.square == 0
            assert is_primitive(gen.num)
            assert classify_positivity(gen).is_effective
            part = coeff * gen.num
            total = part if total is None else total + part
        assert total == L.num

    def test_recovers_constructed_input(self, pair_one):
        e1, e2 = pair_one
        L = DivisorClass(2 * e1 + 4 * e2, 0)
        dec = decompose_isotropic(L)
        assert dec.configuration == "config-i"
        assert sorted(
            (g.num.coords, c) for g, c in zip(dec.generators, dec.coefficients)
        ) == sorted([(e1.coords, 2), (e2.coords, 4)])
        self.assert_valid(L, dec)

    def test_primitive_isotropic_is_its_own_decomposition(self, pair_one):
        e1, _ = pair_one
        dec = decompose_isotropic(DivisorClass(e1, 0))
        assert dec.generators == (DivisorClass(e1, 0),)
        assert dec.coefficients == (1,)
        assert dec.configuration == "config-i"

    def test_isotropic_multiple(self, pair_one):
        e1, _ = pair_one
        dec = decompose_isotropic(DivisorClass(2 * e1, 0))
        assert len(dec.generators) == 1
        assert dec.coefficients == (2,)
        assert dec.configuration == "config-i"

    def test_pair_meeting_in_two(self, pair_two):
        e1, e2 = pair_two
        L = DivisorClass(3 * (e1 + e2), 0)
        dec = decompose_isotropic(L)
        assert dec.configuration == "config-ii"
        assert dec.coefficients == (3, 3)
        self.assert_valid(L, dec)

    def test_pattern_gram_matches_label(self, triple_iii):
        e1, e2, e3 = triple_iii
        L = DivisorClass(e1 + e2 + e3, 0)
        dec = decompose_isotropic(L)
        self.assert_valid(L, dec)
        n = len(dec.generators)
        twos = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if dec.generators[i].dot(dec.generators[j]) == 2
        ]
        if dec.configuration == "config-ii":
            assert twos == [(0, 1)]
        elif dec.configuration == "config-iii":
            assert twos == [(0, 1), (0, 2)]
        else:
            assert twos == []

    def test_random_effective_classes(self):
        rng = random.Random(44)
        checked = 0
        while checked < 15:
            d = divisor_class([rng.randint(-2, 2) for _ in range(10)])
            st = classify_positivity(d)
            if not st.is_effective or d.square < 0 or d.square > 20:
                continue
            dec = decompose_isotropic(d)
            self.assert_valid(d, dec)
            checked += 1


class TestConcurrency:
    def test_shared_state_free_under_threads(self, pair_one, pair_two):
        # everything is immutable and pure, so concurrent calls over shared
        # inputs must agree with the sequential answers
        from concurrent.futures import ThreadPoolExecutor

        e1, e2 = pair_one
        f1, f2 = pair_two
        inputs = [
            DivisorClass(2 * e1 + 4 * e2, 0),
            DivisorClass(3 * (f1 + f2), 0),
            DivisorClass(e1 + e2, 0),
            DivisorClass(2 * f1 + 2 * f2, 0),
        ] * 3
        expected = [gonality(L).k for L in inputs]
        with ThreadPoolExecutor(max_workers=4) as pool:
            got = list(pool.map(lambda L: gonality(L).k, inputs))
        assert got == expected
