import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thermal_jcm import DomainError, nbar_from_temperature, thermal_distribution
from thermal_jcm.errors import NumericError


def test_vacuum_limit():
    dist = thermal_distribution(0.0, 1e-12)
    np.testing.assert_array_equal(dist.probs, [1.0, 0.0, 0.0])
    assert dist.cutoff == 2
    assert dist.prob(0) == 1.0
    assert dist.prob(1) == 0.0


def test_unit_nbar_halving():
    dist = thermal_distribution(1.0, 1e-12)
    assert dist.probs[0] == 0.5
    assert dist.probs[1] == 0.25
    assert dist.probs[2] == 0.125


def test_nbar_ten_cutoff_range():
    # smallest N with cumulative mass >= 1 - 1e-12 lands near 300
    dist = thermal_distribution(10.0, 1e-12)
    assert 280 <= dist.cutoff <= 320


def test_out_of_range_probability_is_zero():
    dist = thermal_distribution(2.0, 1e-12)
    assert dist.prob(-1) == 0.0
    assert dist.prob(dist.cutoff + 1) == 0.0
    assert dist.prob(dist.cutoff) > 0.0


def test_tail_mass_within_budget():
    for nbar in (0.1, 0.5, 1.0, 5.0, 10.0, 100.0):
        dist = thermal_distribution(nbar, 1e-12)
        assert 1.0 - float(np.sum(dist.probs)) <= 1e-12
        assert dist.tail_mass <= 1e-12


def test_strictly_decreasing_for_positive_nbar():
    for nbar in (0.3, 1.0, 10.0):
        dist = thermal_distribution(nbar, 1e-12)
        assert np.all(np.diff(dist.probs) < 0.0)


def test_geometric_ratio_and_square_identity():
    dist = thermal_distribution(3.7, 1e-12)
    p = dist.probs
    ratios = p[1:] / p[:-1]
    np.testing.assert_allclose(ratios, dist.ratio, rtol=1e-12)
    # interior identity: P_n^2 = P_{n-1} P_{n+1}
    np.testing.assert_allclose(p[1:-1] ** 2, p[:-2] * p[2:], rtol=1e-12)


def test_monotone_truncation():
    tight = thermal_distribution(5.0, 1e-12)
    loose = thermal_distribution(5.0, 1e-6)
    assert loose.cutoff <= tight.cutoff


def test_min_cutoff_extends_range():
    dist = thermal_distribution(0.1, 1e-12, min_cutoff=51)
    assert dist.cutoff >= 51
    assert dist.probs[51] > 0.0
    assert dist.tail_mass <= 1e-12


def test_domain_errors():
    with pytest.raises(DomainError):
        thermal_distribution(-0.5)
    with pytest.raises(DomainError):
        thermal_distribution(float("nan"))
    with pytest.raises(DomainError):
        thermal_distribution(float("inf"))
    with pytest.raises(DomainError):
        thermal_distribution(1.0, tail_eps=0.0)
    with pytest.raises(DomainError):
        thermal_distribution(1.0, tail_eps=1.0)
    with pytest.raises(DomainError):
        thermal_distribution(1.0, tail_eps=-1e-3)


def test_unresolvable_tail_raises_numeric_error():
    # a tail far below float summation resolution cannot be certified
    with pytest.raises(NumericError):
        thermal_distribution(10.0, 1e-250)


def test_nbar_from_temperature_values():
    assert nbar_from_temperature(math.log(2.0)) == pytest.approx(1.0, rel=1e-14)
    assert nbar_from_temperature(math.log(1.1)) == pytest.approx(10.0, rel=1e-12)
    assert nbar_from_temperature(50.0) == pytest.approx(math.exp(-50.0), rel=1e-10)


def test_nbar_from_temperature_monotone_decreasing():
    xs = np.linspace(0.05, 8.0, 40)
    vals = [nbar_from_temperature(x) for x in xs]
    assert np.all(np.diff(vals) < 0.0)


def test_nbar_from_temperature_domain():
    with pytest.raises(DomainError):
        nbar_from_temperature(0.0)
    with pytest.raises(DomainError):
        nbar_from_temperature(-1.0)
    with pytest.raises(DomainError):
        nbar_from_temperature(float("nan"))


@given(nbar=st.floats(min_value=0.01, max_value=50.0), exp=st.integers(min_value=4, max_value=12))
@settings(max_examples=60, deadline=None)
def test_truncation_invariants_hold_generically(nbar, exp):
    tail_eps = 10.0 ** (-exp)
    dist = thermal_distribution(nbar, tail_eps)
    assert dist.cutoff >= 2
    assert 1.0 - float(np.sum(dist.probs)) <= tail_eps
    assert np.all(dist.probs >= 0.0)
    assert np.all(np.diff(dist.probs) < 0.0)
