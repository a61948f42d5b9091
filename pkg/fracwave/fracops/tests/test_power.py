import math

import numpy as np
import pytest

from fracwave.fracops import (PowerTerm, ZERO, caputo_power, rl_integral_power,
        strip_initial_part, check_law_of_exponents)
from fracwave.errors import InvalidOrderError, InvalidParamsError


def test_caputo_power_examples():
    out = caputo_power(PowerTerm(1., 1.), 0.5)
    assert np.isclose(out.coeff, 1.1283791671, rtol=1e-10)
    assert np.isclose(out.exponent, 0.5)
    out = caputo_power(PowerTerm(1., 2.), 1.)
    assert np.isclose(out.coeff, 2.) and out.exponent == 1.
    assert caputo_power(PowerTerm(1., 1.), 1.2).is_zero
    assert caputo_power(PowerTerm(3., 0.), 0.4).is_zero
    # 1/Gamma(e - alpha + 1) vanishes
    assert caputo_power(PowerTerm(1., -0.5), 0.5).is_zero
    with pytest.raises(InvalidOrderError):
        caputo_power(PowerTerm(1., 1.), 0.)


def test_rl_integral_power_examples():
    out = rl_integral_power(PowerTerm(1., 0.), 1.)
    assert np.isclose(out.coeff, 1.) and np.isclose(out.exponent, 1.)
    out = rl_integral_power(PowerTerm(1., 1.), 0.5)
    assert np.isclose(out.coeff, 0.7522527781, rtol=1e-10)
    assert np.isclose(out.exponent, 1.5)
    term = PowerTerm(1., 0.3)
    assert rl_integral_power(term, 0.) == term
    with pytest.raises(InvalidOrderError):
        rl_integral_power(term, -0.1)


def test_rl_semigroup_power():
    rng = np.random.default_rng(1)
    for _ in range(50):
        term = PowerTerm(rng.normal(), rng.uniform(-0.9, 3.))
        a, b = rng.uniform(0, 2, size=2)
        composed = rl_integral_power(rl_integral_power(term, a), b)
        direct = rl_integral_power(term, a + b)
        assert np.isclose(composed.coeff, direct.coeff, rtol=1e-12)
        assert np.isclose(composed.exponent, direct.exponent, rtol=1e-14)


def test_left_inverse_power():
    rng = np.random.default_rng(2)
    for _ in range(50):
        term = PowerTerm(rng.normal(), rng.uniform(-0.9, 3.))
        alpha = rng.uniform(0.05, 1.95)
        back = caputo_power(rl_integral_power(term, alpha), alpha)
        assert np.isclose(back.coeff, term.coeff, rtol=1e-12)
        assert np.isclose(back.exponent, term.exponent, rtol=1e-13, atol=1e-14)


def test_reconstruction_power():
    for alpha in [0.3, 0.7, 1.2, 1.8]:
        for exponent in [0., 1., 2., 2.5, 3.7]:
            term = PowerTerm(2., exponent)
            back = rl_integral_power(caputo_power(term, alpha), alpha)
            expected = strip_initial_part(term, alpha)
            if expected.is_zero:
                assert back.is_zero
            else:
                assert np.isclose(back.coeff, expected.coeff, rtol=1e-12)
                assert np.isclose(back.exponent, expected.exponent)


def test_power_term_domain():
    with pytest.raises(InvalidParamsError):
        PowerTerm(1., -1.)
    assert ZERO.is_zero
    assert np.allclose(ZERO(np.linspace(0, 1, 5)), 0.)


def test_law_of_exponents_examples():
    report = check_law_of_exponents(PowerTerm(1., 2.), 0.2, 0.3)
    assert report['holds'] and report['max_abs_gap'] == 0.
    report = check_law_of_exponents(PowerTerm(1., 1.), 0.6, 0.6)
    assert not report['holds']
    assert np.isclose(report['max_abs_gap'], 0.5**-0.2/math.gamma(0.8))
    for alpha, beta in [(0.3, 0.4), (1.5, 0.3), (0.9, 0.9)]:
        report = check_law_of_exponents(PowerTerm(4., 0.), alpha, beta)
        assert report['holds'] and report['max_abs_gap'] == 0.


def test_law_of_exponents_region_a_and_d():
    rng = np.random.default_rng(3)
    for _ in range(200):
        alpha = rng.uniform(0.01, 0.99)
        beta = rng.uniform(0.001, 1 - alpha)
        gamma = alpha + beta
        report = check_law_of_exponents(PowerTerm(1., gamma + 1), alpha, beta)
        assert report['holds'] and report['max_abs_gap'] == 0., (alpha, beta)
    for _ in range(50):
        alpha = rng.uniform(1.01, 1.99)
        beta = rng.uniform(0.001, 2 - alpha)
        report = check_law_of_exponents(PowerTerm(1., alpha + beta + 1), alpha, beta)
        assert report['holds'], (alpha, beta)


def test_law_of_exponents_region_b():
    rng = np.random.default_rng(4)
    for _ in range(200):
        alpha = rng.uniform(0.2, 0.99)
        beta = rng.uniform(1.01 - alpha, min(0.99, 1.8 - alpha))
        report = check_law_of_exponents(PowerTerm(1., 1.), alpha, beta)
        assert not report['holds']
        assert report['max_abs_gap'] > 0.1, (alpha, beta)


if __name__ == '__main__':
    test_caputo_power_examples()
    test_rl_integral_power_examples()
    test_rl_semigroup_power()
    test_left_inverse_power()
    test_reconstruction_power()
    test_power_term_domain()
    test_law_of_exponents_examples()
    test_law_of_exponents_region_a_and_d()
    test_law_of_exponents_region_b()
