import pytest
from hypothesis import given
from hypothesis import strategies as st

from typeii.modforms import QSeries, delta, divisor_sigma, eisenstein, extremal_theta, shell_size

RANKS = [8, 16, 24, 32, 40, 48, 56, 64, 72, 80, 120]


def sigma_brute(k, p):
    return sum(d**p for d in range(1, k + 1) if k % d == 0)


def mul(a, b, prec):
    out = [0] * prec
    for i, x in enumerate(a[:prec]):
        for j, y in enumerate(b[: prec - i]):
            out[i + j] += x * y
    return out


def delta_product(prec):
    """q * prod_{k>=1} (1 - q^k)^24, truncated."""
    series = [0] * prec
    if prec > 1:
        series[1] = 1
    for k in range(1, prec):
        factor = [0] * prec
        factor[0] = 1
        factor[k] = -1
        for _ in range(24):
            series = mul(series, factor, prec)
    return series


def test_divisor_sigma_matches_brute_force():
    for k in range(1, 60):
        for p in (1, 3, 5, 11):
            assert divisor_sigma(k, p) == sigma_brute(k, p)


class TestEisenstein:
    def test_e4(self):
        assert eisenstein(4, 3).tolist() == [1, 240, 2160]

    def test_e6(self):
        assert eisenstein(6, 2).tolist() == [1, -504]

    def test_constant(self):
        assert eisenstein(4, 1).tolist() == [1]

    def test_oracle(self):
        e4, e6 = eisenstein(4, 20), eisenstein(6, 20)
        for k in range(1, 20):
            assert e4[k] == 240 * sigma_brute(k, 3)
            assert e6[k] == -504 * sigma_brute(k, 5)

    def test_bad_weight(self):
        with pytest.raises(ValueError):
            eisenstein(8, 3)


class TestDelta:
    def test_small(self):
        assert delta(2).tolist() == [0, 1]
        assert delta(3).tolist() == [0, 1, -24]
        assert delta(4).tolist() == [0, 1, -24, 252]

    def test_product_formula(self):
        assert delta(15).tolist() == delta_product(15)

    @pytest.mark.parametrize("prec", [1, 2, 5, 12, 25])
    def test_discriminant_identity(self, prec):
        e4, e6 = eisenstein(4, prec), eisenstein(6, prec)
        assert (delta(prec) * 1728).tolist() == (e4**3 - e6**2).tolist()


series = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=12).map(QSeries)


@given(series, series, series)
def test_multiplication_commutative_associative(a, b, c):
    assert (a * b).tolist() == (b * a).tolist()
    assert ((a * b) * c).tolist() == (a * (b * c)).tolist()
    assert (a * b).precision == min(a.precision, b.precision)


class TestExtremalTheta:
    def test_rank8_is_e4(self):
        assert extremal_theta(8, 3).coeffs == (1, 240, 2160)

    def test_rank40(self):
        # E4^5 - 1200 E4^2 Delta: the multiple of E4^2 Delta kills q^1
        prec = 4
        e4 = eisenstein(4, prec).tolist()
        e4_5 = [1] + [0] * (prec - 1)
        for _ in range(5):
            e4_5 = mul(e4_5, e4, prec)
        e4_2d = mul(mul(e4, e4, prec), delta_product(prec), prec)
        c = -e4_5[1]
        oracle = [a + c * b for a, b in zip(e4_5, e4_2d)]
        theta = extremal_theta(40, prec).coeffs
        assert list(theta) == oracle
        assert theta[2] == 39600
        assert theta[3] == 87859200

    def test_rank80(self):
        assert extremal_theta(80, 6).coeffs[5] == 7541401190400

    def test_default_precision(self):
        assert extremal_theta(48).series.precision == 48 // 24 + 4

    @pytest.mark.parametrize("n", RANKS)
    def test_shape(self, n):
        th = extremal_theta(n, n // 24 + 8)
        ell = n // 24
        assert th.coeffs[0] == 1
        assert all(c == 0 for c in th.coeffs[1 : ell + 1])
        assert all(c >= 0 for c in th.coeffs)
        assert th.coeffs[ell + 1] > 0
        assert th.min_norm == 2 * ell + 2

    @pytest.mark.parametrize("n", [0, 12, 20, -8])
    def test_bad_rank(self, n):
        with pytest.raises(ValueError, match="multiple of 8"):
            extremal_theta(n)

    def test_precision_too_small(self):
        with pytest.raises(ValueError):
            extremal_theta(80, 4)

    def test_known_classical_values(self):
        # rank 24 extremal theta is the Leech theta series; rank 16 is E4^2
        assert extremal_theta(24, 4).coeffs == (1, 0, 196560, 16773120)
        assert extremal_theta(16, 3).coeffs == (1, 480, 61920)


class TestShellSize:
    def test_paper_values(self):
        assert shell_size(40, 6) == 87859200
        assert shell_size(80, 10) == 7541401190400

    def test_below_min(self):
        assert shell_size(40, 2) == 0

    def test_zero(self):
        assert shell_size(40, 0) == 1

    def test_odd(self):
        with pytest.raises(ValueError):
            shell_size(40, 5)
