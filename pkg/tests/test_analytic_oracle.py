import pytest

from eisrel.analytic_oracle import (
    LatticeParams,
    default_tolerance,
    evaluate_qseries,
    lattice_eisenstein,
)
from eisrel.errors import DomainError
from eisrel.qseries import QSeries, eisenstein

NOISE = 1e-15


def test_params_validation():
    with pytest.raises(DomainError):
        LatticeParams(10, 10, 1 - 1j)
    with pytest.raises(DomainError):
        LatticeParams(0, 10, 1j)


def test_domain():
    p = LatticeParams(5, 5, 1j)
    for k in (0, 1, 2):
        with pytest.raises(DomainError):
            lattice_eisenstein(k, p)
    with pytest.raises(DomainError):
        lattice_eisenstein(1, p, eisenstein_summation=True)


@pytest.mark.parametrize("k", [3, 5, 7])
def test_odd_weight_cancels(k):
    assert abs(lattice_eisenstein(k, LatticeParams(60, 60, 0.3 + 1.1j))) < 1e-15


def test_evaluate_trivial():
    assert evaluate_qseries(QSeries.zero(10), 1j) == 0
    assert evaluate_qseries(QSeries([3, 0, 0]), 0.2 + 1j) == 3


def test_evaluate_tail_negligible():
    a = evaluate_qseries(eisenstein(4, 60), 2j)
    b = evaluate_qseries(eisenstein(4, 80), 2j)
    assert abs(a - b) < 1e-12


def test_e6_vanishes_at_i():
    assert abs(evaluate_qseries(eisenstein(6, 60), 1j)) < 1e-18


@pytest.mark.parametrize("k", [4, 6, 8])
def test_agreement_at_i(k):
    tau = 1j
    lat = lattice_eisenstein(k, LatticeParams(400, 400, tau))
    ser = evaluate_qseries(eisenstein(k, 60), tau)
    assert abs(lat - ser) < default_tolerance(k)


@pytest.mark.parametrize("k", [4, 8])
def test_relative_agreement(k):
    tau = 0.5 + 1j
    lat = lattice_eisenstein(k, LatticeParams(200, 200, tau))
    ser = evaluate_qseries(eisenstein(k, 60), tau)
    assert abs(lat - ser) < 1e-4 * abs(ser)


@pytest.mark.parametrize("k", [4, 6, 8])
@pytest.mark.parametrize("tau", [1j, 0.5 + 1j])
def test_convergence_trend(k, tau):
    ser = evaluate_qseries(eisenstein(k, 60), tau)
    errs = [abs(lattice_eisenstein(k, LatticeParams(m, m, tau)) - ser) for m in (100, 200, 400)]
    floor = NOISE * max(abs(ser), 1e-6)
    for a, b in zip(errs, errs[1:]):
        assert b <= a + floor


def test_translation_invariance():
    p0 = LatticeParams(300, 300, 0.25 + 1j)
    p1 = LatticeParams(300, 300, 1.25 + 1j)
    for k in (4, 6):
        assert abs(lattice_eisenstein(k, p0) - lattice_eisenstein(k, p1)) < 1e-7


def test_weight_two_opt_in():
    # needs N much larger than M for the inner sums to settle
    lat = lattice_eisenstein(2, LatticeParams(10, 100000, 1j), eisenstein_summation=True)
    ser = evaluate_qseries(eisenstein(2, 60), 1j)
    assert abs(lat - ser) < 1e-4
