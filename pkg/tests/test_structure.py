import numpy as np
import pytest

from cycloring import (PatternClass, band_form, column_family_sum,
                       diff_quotient_coeffs, high_monomial_form,
                       inflated_pattern_check, low_tail_form, make_modulus,
                       monomial_reduce, random_subset_norm_check,
                       residue_class_pattern, rev_symmetry_check,
                       solvable_table)
from cycloring.errors import NotApplicable, OutOfRange
from cycloring.poly import IntPoly

from oracles import diophantine_bit

SQUAREFREE_PAIRS = [(2, 3), (2, 5), (3, 5), (3, 7), (2, 7), (5, 7), (3, 11)]


class TestDiffQuotient:
    def test_3_5_bits(self):
        bits, table = diff_quotient_coeffs(3, 5)
        assert bits == (0, 1, 1, 0, 1, 0, 0, 1)
        assert table.solvable[:8] == (True, False, False, True, False,
                                      True, True, False)

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_multiples_of_p_are_zero(self, p, q):
        bits, _ = diff_quotient_coeffs(p, q)
        for t in range(len(bits) // p + 1):
            if t * p < len(bits):
                assert bits[t * p] == 0

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_complement_symmetry(self, p, q):
        bits, _ = diff_quotient_coeffs(p, q)
        phi = len(bits)
        for i in range(phi):
            assert bits[i] + bits[phi - 1 - i] == 1

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_solvable_above_phi(self, p, q):
        table = solvable_table(p, q)
        phi = (p - 1) * (q - 1)
        assert all(table.solvable[phi:])

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_monotone_under_shifts(self, p, q):
        table = solvable_table(p, q)
        for i in range(p * q):
            if table.solvable[i]:
                if i + p < p * q:
                    assert table.solvable[i + p]
                if i + q < p * q:
                    assert table.solvable[i + q]

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_matches_oracle_bits(self, p, q):
        bits, _ = diff_quotient_coeffs(p, q)
        assert bits == tuple(diophantine_bit(i, p, q)
                             for i in range((p - 1) * (q - 1)))


class TestHighMonomialForm:
    def test_low_tail_at_k0(self):
        got = high_monomial_form(0, 3, 5)
        assert got.to_poly() == IntPoly((-1, 1, 0, -1, 1, -1, 0, 1))
        assert got.coeffs[0] == -1 and got.coeffs[7] == 1

    def test_band_at_overlap(self):
        got = high_monomial_form(2, 3, 5)
        assert got.to_poly() == IntPoly((-1, 0, 0, 0, 0, -1))
        assert band_form(2, 3, 5) == low_tail_form(2, 3, 5) == got.to_poly()

    def test_published_column_21(self):
        got = high_monomial_form(2, 3, 7)
        assert got.to_poly() == IntPoly((-1, 0, 0, 0, 0, 0, 0, -1))

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            high_monomial_form(5, 3, 5)
        with pytest.raises(OutOfRange):
            high_monomial_form(-1, 3, 5)

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_all_covered_exponents(self, p, q):
        m = make_modulus(p * q)
        for k in range(q):
            got = high_monomial_form(k, p, q)
            assert got == monomial_reduce(m.phi + k, m)

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_low_tail_norms_and_signs(self, p, q):
        m = make_modulus(p * q)
        for k in range(p):
            col = monomial_reduce(m.phi + k, m)
            assert col.max_norm() == 1
        for k in range(p - 1):
            col = monomial_reduce(m.phi + k, m)
            assert col.coeffs[0] == -1
            assert col.coeffs[m.phi - 1] == 1


class TestRevSymmetry:
    @pytest.mark.parametrize("p,q", [(2, 3), (3, 5), (3, 7), (5, 7)])
    def test_rotation(self, p, q):
        assert rev_symmetry_check(p, q) is True


class TestRowSparsity:
    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_block_nonzero_counts(self, p, q):
        # each row: one nonzero in I, at most one in B2, at most p-1 in each
        # of B1 and B3, which is what caps the expansion factor at 2p
        from cycloring import reduction_matrix
        R = reduction_matrix(make_modulus(p * q))
        ent = np.asarray(R.entries, dtype=np.int64)
        blocks = R.blocks
        for row in ent:
            nz = row != 0
            assert nz[slice(*blocks.identity)].sum() == 1
            assert nz[slice(*blocks.b2)].sum() <= 1
            assert nz[slice(*blocks.b1)].sum() <= p - 1
            assert nz[slice(*blocks.b3)].sum() <= p - 1
            assert nz.sum() <= 2 * p


class TestResidueClasses:
    def test_m15_all_rows_classify(self):
        m = make_modulus(15)
        seen = set()
        for j in range(3):
            seen.update(residue_class_pattern(j, m))
        assert seen <= {PatternClass.ALL_ZERO, PatternClass.ONE_PLUS_ONE_MINUS}

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_family_sums_vanish(self, p, q):
        m = make_modulus(p * q)
        for j in range(p):
            assert column_family_sum(j, m).is_zero()

    @pytest.mark.parametrize("p,q", SQUAREFREE_PAIRS)
    def test_random_subsets_bounded(self, p, q):
        m = make_modulus(p * q)
        rng = np.random.default_rng(42)
        for j in range(p):
            assert random_subset_norm_check(j, m, 200, rng) is True

    def test_j_out_of_range(self):
        with pytest.raises(OutOfRange):
            residue_class_pattern(3, make_modulus(15))

    def test_not_applicable_shapes(self):
        with pytest.raises(NotApplicable):
            residue_class_pattern(0, make_modulus(9))
        with pytest.raises(NotApplicable):
            residue_class_pattern(0, make_modulus(45))


class TestInflatedPatterns:
    @pytest.mark.parametrize("M", [45, 12, 18, 63])
    def test_random_families(self, M):
        m = make_modulus(M)
        rng = np.random.default_rng(3)
        assert inflated_pattern_check(m, trials=100, rng=rng) is True

    def test_full_families_sum_to_zero(self):
        m = make_modulus(45)
        mprime = m.inflation
        for j in range(3):
            total = np.zeros(m.phi, dtype=np.int64)
            for k in range(mprime):
                for i in range(5):
                    col = monomial_reduce((j + 3 * i) * mprime + k, m).coeffs
                    total += np.array(col)
            assert not total.any()

    def test_wrong_shape(self):
        with pytest.raises(NotApplicable):
            inflated_pattern_check(make_modulus(27))


class TestPatternViolationReporting:
    def test_poisoned_column_is_reported_with_location(self, monkeypatch):
        import cycloring.structure as st_mod
        from cycloring.errors import PatternViolation
        m = make_modulus(15)
        real = st_mod.monomial_reduce

        def poisoned(k, mod):
            got = real(k, mod)
            if k == 6:  # j=0 family, i=2: flip one coefficient to +2
                coeffs = list(got.coeffs)
                coeffs[3] += 2
                return type(got)(mod, tuple(coeffs))
            return got

        monkeypatch.setattr(st_mod, "monomial_reduce", poisoned)
        with pytest.raises(PatternViolation) as exc:
            st_mod.residue_class_pattern(0, m)
        assert exc.value.j == 0
        assert exc.value.row == 3
        assert 2 in exc.value.multiset
