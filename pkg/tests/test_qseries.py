from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eisrel.errors import DomainError
from eisrel.qseries import (
    QSeries,
    dump_series,
    eisenstein,
    parse_series,
    product_P,
    theta_derivative,
)
from oracles import eisenstein_naive, mul_naive

F = Fraction


def test_mul_examples():
    a = QSeries([1, 1, 0])
    b = QSeries([1, -1, 0])
    assert (a * b).coeffs == (1, 0, -1)
    z = QSeries.zero(5)
    assert (eisenstein(4, 5) * z).is_zero()


def test_mixed_precision_truncates():
    f = eisenstein(4, 10) + eisenstein(6, 4)
    assert f.precision == 4
    assert (eisenstein(4, 10) * eisenstein(6, 4)).precision == 4


def test_weight_tag():
    assert (eisenstein(4, 5) * eisenstein(6, 5)).weight == 10
    assert (eisenstein(4, 5) + eisenstein(6, 5)).weight is None
    assert (eisenstein(4, 5) + eisenstein(4, 5)).weight == 4
    assert eisenstein(4, 5) == eisenstein(4, 5).with_weight(None)


def test_zero_series_coefficients():
    z = QSeries.zero(4)
    assert all(c == 0 and c.denominator == 1 for c in z)
    with pytest.raises(DomainError):
        QSeries.zero(0)


def test_e2_squared_leading():
    f = eisenstein(2, 2) * eisenstein(2, 2)
    assert f.coeffs == (F(1, 144), F(-1, 3))


def test_theta_derivative():
    assert theta_derivative(QSeries([7, 0, 0])).is_zero()
    assert theta_derivative(eisenstein(2, 3)).coeffs == (0, 2, 12)
    assert theta_derivative(QSeries.monomial(3, 5)).coeffs == (0, 0, 0, 3, 0)


def test_eisenstein_examples():
    assert eisenstein(3, 7).is_zero()
    assert eisenstein(4, 3).coeffs == (F(1, 720), F(1, 3), F(3))
    assert eisenstein(2, 3).coeffs == (F(-1, 12), F(2), F(6))
    with pytest.raises(DomainError):
        eisenstein(0, 3)


@pytest.mark.parametrize("k", [2, 4, 6, 8, 10, 12, 14, 24, 30])
def test_eisenstein_matches_naive(k):
    assert list(eisenstein(k, 25).coeffs) == eisenstein_naive(k, 25)


def test_prefix_stability():
    for k in (2, 4, 12, 20):
        full = eisenstein(k, 40)
        for n in (1, 7, 39):
            assert full.truncate(n) == eisenstein(k, n)


def test_product_P_examples():
    assert product_P(4, 4, 10) == eisenstein(4, 10) * eisenstein(4, 10)
    assert product_P(3, 5, 10).is_zero()
    assert product_P(2, 2, 2).coeffs == (F(1, 144), F(5, 3))


def test_product_P_with_e2_matches_naive():
    n = 15
    e2 = eisenstein_naive(2, n)
    e10 = eisenstein_naive(10, n)
    expected = [a + F(m, 10) * c for m, (a, c) in enumerate(zip(mul_naive(e2, e10), e10))]
    assert list(product_P(2, 10, n).coeffs) == expected


def test_product_P_symmetric():
    for r in range(1, 21):
        for s in range(1, 21):
            assert product_P(r, s, 10) == product_P(s, r, 10)


def test_worked_example_weight_4():
    assert (eisenstein(4, 100).scale(5) - product_P(2, 2, 100)).is_zero()


small = st.fractions(max_denominator=50, min_value=-20, max_value=20)
series20 = st.lists(small, min_size=20, max_size=20).map(QSeries)


@settings(max_examples=40, deadline=None)
@given(series20, series20, series20)
def test_mul_associative_commutative(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_text_round_trip():
    for f in (eisenstein(12, 8), product_P(2, 10, 5), QSeries([F(1, 3), 0, -2])):
        text = dump_series(f)
        g = parse_series(text)
        assert g == f and g.weight == f.weight
        assert dump_series(g) == text


def test_text_format_shape():
    assert dump_series(eisenstein(4, 3)) == "prec=3 weight=4\n0: 1/720\n1: 1/3\n2: 3\n"
    assert dump_series(QSeries([1])) == "prec=1 weight=none\n0: 1\n"


@pytest.mark.parametrize("text", [
    "",
    "prec=2 weight=4\n0: 1\n",
    "prec=2 weight=4\n0: 1\n2: 3\n",
    "prec=1 weight=x\n0: 1\n",
    "weight=4\n0: 1\n",
    "prec=1 weight=4\n0: 0.5\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(DomainError):
        parse_series(text)
