import pytest
from hypothesis import given
from hypothesis import strategies as st

from tribkit import (DENOMINATOR, DegenerateDenominator,
                     DivisibilityViolation, K_MAT_SEEDS, Mat3, MatrixKind,
                     PolyRational, SequenceKind, SumSpec, T_MAT_SEEDS,
                     gf_coeffs, gf_matrix_coeffs, gf_numerators, gf_rational,
                     k_matrix, lucas_trib, partial_sum, partial_sum_bruteforce,
                     t_matrix, trib)

T = SequenceKind.TRIBONACCI
K = SequenceKind.TRIBONACCI_LUCAS
TM = MatrixKind.TRIB_MATRIX
KM = MatrixKind.LUCAS_MATRIX

# numerator matrices of the two matrix series, frozen from their printed
# polynomial entries (constant, x, x^2)
TM_NUMERATORS = (
    Mat3((1, 0, 0, 0, 1, 0, 0, 0, 1)),
    Mat3((0, 1, 1, 1, -1, 0, 0, 1, -1)),
    Mat3((0, 1, 0, 0, 0, 1, 1, -1, -1)),
)
KM_NUMERATORS = (
    Mat3((1, 2, 3, 3, -2, -1, -1, 4, -1)),
    Mat3((2, 2, -2, -2, 4, 4, 4, -6, 0)),
    Mat3((3, -2, -1, -1, 4, -1, -1, 0, 5)),
)


class TestGeneratingFunctions:
    def test_scalar_examples(self):
        assert gf_coeffs(T, 5) == [0, 1, 1, 2, 4]
        assert gf_coeffs(K, 1) == [3]
        assert gf_coeffs(T, 13) == [0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149,
                                    274, 504]

    def test_scalar_coefficients_match_terms(self):
        assert gf_coeffs(T, 64) == [trib(i) for i in range(64)]
        assert gf_coeffs(K, 64) == [lucas_trib(i) for i in range(64)]

    def test_matrix_examples(self):
        assert gf_matrix_coeffs(TM, 1) == [T_MAT_SEEDS[0]]
        assert gf_matrix_coeffs(KM, 3) == list(K_MAT_SEEDS)

    def test_matrix_coefficients_match_terms(self, t_cache, k_cache):
        assert gf_matrix_coeffs(TM, 10) == [t_matrix(i, cache=t_cache)
                                            for i in range(10)]
        assert gf_matrix_coeffs(TM, 64) == [t_matrix(i, cache=t_cache)
                                            for i in range(64)]
        assert gf_matrix_coeffs(KM, 64) == [k_matrix(i, cache=k_cache)
                                            for i in range(64)]

    def test_numerators_reconcile_with_printed_polynomials(self):
        assert gf_numerators(TM) == TM_NUMERATORS
        assert gf_numerators(KM) == KM_NUMERATORS

    def test_scalar_numerators(self):
        assert gf_numerators(T) == (0, 1, 0)      # x
        assert gf_numerators(K) == (3, -2, -1)    # 3 - 2x - x^2

    def test_count_floor(self):
        with pytest.raises(ValueError):
            gf_coeffs(T, 0)
        with pytest.raises(ValueError):
            gf_matrix_coeffs(TM, 0)

    def test_rational_carries_fixed_denominator(self):
        assert DENOMINATOR == (1, -1, -1, -1)
        assert DENOMINATOR[0] == 1
        rational = gf_rational(K)
        assert rational.denominator == DENOMINATOR
        assert rational.coefficients(4) == [3, 1, 3, 7]
        with pytest.raises(ValueError):
            PolyRational((0, 1, 0), denominator=(1, -1, 0, 0))

    def test_rational_accepts_arbitrary_numerators(self):
        # 1/(1 - x - x^2 - x^3): the shifted Tribonacci row
        ones = PolyRational((1,))
        assert ones.coefficients(6) == [trib(i + 1) for i in range(6)]


class TestSumSpec:
    def test_rejects_m_not_above_j(self):
        with pytest.raises(ValueError, match="m > j >= 0"):
            SumSpec(T, 0, 0, 5)
        with pytest.raises(ValueError, match="m > j >= 0"):
            SumSpec(T, 2, 2, 5)
        with pytest.raises(ValueError, match="m > j >= 0"):
            SumSpec(T, 2, -1, 5)

    def test_rejects_empty_sum(self):
        with pytest.raises(ValueError, match="n >= 1"):
            SumSpec(T, 1, 0, 0)


class TestPartialSums:
    @pytest.mark.parametrize("kind,m,j,n,expected", [
        (T, 1, 0, 5, 8),     # (T(7) - T(5) - 1) / 2
        (K, 1, 0, 5, 25),    # (K(7) - K(5)) / 2
        (T, 3, 1, 4, 178),   # T(1) + T(4) + T(7) + T(10)
    ])
    def test_closed_form_examples(self, kind, m, j, n, expected):
        assert partial_sum(SumSpec(kind, m, j, n)) == expected

    @pytest.mark.parametrize("kind,m,j,n,expected", [
        (T, 1, 0, 1, 0),
        (K, 2, 1, 3, 29),   # K(1) + K(3) + K(5)
    ])
    def test_bruteforce_examples(self, kind, m, j, n, expected):
        assert partial_sum_bruteforce(SumSpec(kind, m, j, n)) == expected

    def test_bruteforce_matrix_example(self):
        spec = SumSpec(TM, 1, 0, 3)
        assert partial_sum_bruteforce(spec) == (
            T_MAT_SEEDS[0] + T_MAT_SEEDS[1] + T_MAT_SEEDS[2])

    def test_closed_form_matches_bruteforce_small_grid(self, t_cache, k_cache):
        caches = {T: t_cache, K: k_cache, TM: t_cache, KM: k_cache}
        for kind, cache in caches.items():
            for m in range(1, 7):
                for j in range(m):
                    for n in range(1, 13):
                        spec = SumSpec(kind, m, j, n)
                        assert partial_sum(spec, cache) == \
                            partial_sum_bruteforce(spec, cache), spec

    @given(m=st.integers(1, 10), j=st.integers(0, 9), n=st.integers(1, 40),
           kind=st.sampled_from([T, K, TM, KM]))
    def test_closed_form_matches_bruteforce_property(self, m, j, n, kind):
        j = j % m
        spec = SumSpec(kind, m, j, n)
        assert partial_sum(spec) == partial_sum_bruteforce(spec)

    def test_first_terms_specializations(self, t_cache, k_cache):
        for n in range(1, 101):
            t_num = trib(n + 2, t_cache) - trib(n, t_cache) - 1
            assert t_num % 2 == 0
            assert partial_sum(SumSpec(T, 1, 0, n), t_cache) == t_num // 2
            k_num = lucas_trib(n + 2, k_cache) - lucas_trib(n, k_cache)
            assert k_num % 2 == 0
            assert partial_sum(SumSpec(K, 1, 0, n), k_cache) == k_num // 2

    def test_wrong_cache_kind_rejected(self, k_cache):
        with pytest.raises(ValueError):
            partial_sum(SumSpec(T, 1, 0, 3), k_cache)


class TestGuards:
    def test_degenerate_denominator(self, monkeypatch):
        import tribkit.series as series
        monkeypatch.setattr(series, "lucas_trib",
                            lambda n, cache=None, counter=None: 7)
        with pytest.raises(DegenerateDenominator):
            series.partial_sum(SumSpec(T, 1, 0, 3))

    def test_divisibility_violation(self, monkeypatch):
        # force divisor 4 while the numerator stays a genuine T-combination
        import tribkit.series as series
        monkeypatch.setattr(series, "lucas_trib",
                            lambda n, cache=None, counter=None:
                            5 if n >= 0 else 1)
        with pytest.raises(DivisibilityViolation):
            series.partial_sum(SumSpec(T, 1, 0, 2))
