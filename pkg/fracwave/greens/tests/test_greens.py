import math

import numpy as np
import pytest

from fracwave.errors import (InvalidOrderError, InvalidTimeError, NonZeroMeanError,
        GridMismatchError, InvalidParamsError)
from fracwave.field import GridField, discrete_delta
from fracwave.fracops import TimeMesh
from fracwave.greens import (fundamental_solution, default_half_width, normalization,
        SeqCauchyProblem, AuxiliaryData, solve_sequential, build_auxiliary,
        solve_auxiliary, solve_sequential_wright, fractional_diffusion,
        coupling_residuals)


def gaussian(z):
    return np.exp(-z**2)


def test_fundamental_solution_examples():
    assert np.isclose(fundamental_solution(1., 1., 0., 1.), 0.2820947918, atol=1e-10)
    assert np.isclose(fundamental_solution(1., 1., 2., 1.), 0.1037768744, atol=1e-10)
    assert np.isclose(fundamental_solution(0.5, 1., 0., 1.), 1/(2*math.gamma(0.75)), atol=1e-10)
    assert np.isclose(fundamental_solution(0.5, 1., 0., 1.), 0.4080244695, atol=1e-10)


def test_fundamental_solution_heat_kernel():
    z = np.linspace(-6, 6, 121)
    for t in [0.25, 1.]:
        heat = np.exp(-z**2/(4*t))/(2*np.sqrt(np.pi*t))
        values = fundamental_solution(1., 1., z, t)
        assert np.max(np.abs(values - heat)) <= 1e-9


def test_fundamental_solution_even_and_positive():
    z = np.linspace(0, 5, 26)
    for gamma in [0.3, 0.8, 1.]:
        right = fundamental_solution(gamma, 2., z, 0.7)
        left = fundamental_solution(gamma, 2., -z, 0.7)
        assert np.all(right == left)
        assert np.all(right >= 0)


def test_fundamental_solution_normalization():
    for gamma in [0.5, 1., 1.5]:
        total = normalization(gamma, 1., 1.)
        assert abs(total - 1) <= 1e-6


def test_fundamental_solution_errors():
    with pytest.raises(InvalidOrderError):
        fundamental_solution(2., 1., 0., 1.)
    with pytest.raises(InvalidOrderError):
        fundamental_solution(0., 1., 0., 1.)
    with pytest.raises(InvalidTimeError):
        fundamental_solution(1., 1., 0., 0.)
    with pytest.raises(InvalidParamsError):
        fundamental_solution(1., -1., 0., 1.)


def test_default_half_width():
    assert np.isclose(default_half_width(1., 4., 1.), 40.)
    assert np.isclose(default_half_width(0.5, 1., 16.), 40.)


def test_solve_sequential_initial_time():
    g = GridField.centered(8., 64, gaussian)
    g_bar = GridField.centered(8., 64, lambda z: -2*z*gaussian(z))
    p = SeqCauchyProblem(0.7, 0.7, 1., g, g_bar)
    f = solve_sequential(p, 0.)
    assert np.all(f.values == g.values)


def test_solve_sequential_delta():
    half = default_half_width(1., 1., 1.)
    delta = discrete_delta(half, 512)
    zero = delta*0.
    p = SeqCauchyProblem(0.5, 0.5, 1., delta, zero)
    f = solve_sequential(p, 1.)
    exact = fundamental_solution(1., 1., f.z, 1.)
    assert np.max(np.abs(f.values - exact)) <= 1e-6

    # the kernel has a cusp at the origin for other orders
    half = default_half_width(0.8, 1., 1.)
    delta = discrete_delta(half, 512)
    p = SeqCauchyProblem(0.5, 0.3, 1., delta, delta*0.)
    f = solve_sequential(p, 1.)
    away = np.abs(f.z) >= 1.
    exact = fundamental_solution(0.8, 1., f.z[away], 1.)
    assert np.max(np.abs(f.values[away] - exact)) <= 1e-3


def test_solve_sequential_heat():
    t = 0.5
    g = GridField.centered(20., 512, lambda z: np.exp(-z**2/2))
    p = SeqCauchyProblem(0.5, 0.5, 1., g, g*0.)
    f = solve_sequential(p, t)
    width = 1 + 2*t
    exact = np.exp(-f.z**2/(2*width))/np.sqrt(width)
    assert np.max(np.abs(f.values - exact)) <= 1e-8


def test_solve_sequential_mass():
    g = GridField.centered(8., 64, lambda z: 1 + gaussian(z))
    g_bar = GridField.centered(8., 64, lambda z: 0.3 + np.cos(np.pi*z/8))
    for alpha, beta in [(0.05, 0.05), (0.5, 0.3), (0.7, 0.7), (1.2, 0.5), (0.4, 1.3)]:
        p = SeqCauchyProblem(alpha, beta, 1.5, g, g_bar)
        for t in [0.1, 1., 3.]:
            f = solve_sequential(p, t)
            assert np.all(np.isfinite(f.values))
            expected = g.mean() + 0.3*t**beta/math.gamma(beta + 1)
            assert np.isclose(f.mean(), expected, rtol=1e-12, atol=1e-12)


def test_solve_sequential_single_equation():
    g = GridField.centered(10., 128, gaussian)
    for alpha, beta in [(0.5, 0.3), (0.2, 0.6), (1.2, 0.5), (1.5, 0.1)]:
        p = SeqCauchyProblem(alpha, beta, 1., g, g*0.)
        for t in [0.3, 1.]:
            f = solve_sequential(p, t)
            u = fractional_diffusion(g, alpha + beta, 1., t)
            assert np.max(np.abs(f.values - u.values)) <= 1e-8


def test_fractional_diffusion_wave_limit():
    # order 2 splits a Gaussian into two travelling halves
    g = GridField.centered(20., 128, gaussian)
    u = fractional_diffusion(g, 2., 1., 5.)
    exact = 0.5*(gaussian(u.z - 5.) + gaussian(u.z + 5.))
    assert np.max(np.abs(u.values - exact)) <= 1e-8


def test_solve_sequential_errors():
    g = GridField.centered(8., 64, gaussian)
    other = GridField.centered(4., 64, gaussian)
    with pytest.raises(GridMismatchError):
        SeqCauchyProblem(0.5, 0.5, 1., g, other)
    with pytest.raises(InvalidOrderError):
        SeqCauchyProblem(1.9, 1.9, 1., g, g)
    with pytest.raises(InvalidParamsError):
        SeqCauchyProblem(0.5, 0.5, 0., g, g)
    p = SeqCauchyProblem(0.5, 0.5, 1., g, g)
    with pytest.raises(InvalidTimeError):
        solve_sequential(p, -1.)


def test_build_auxiliary_examples():
    half = 4.
    length = 2*half
    g = GridField.centered(half, 64, lambda z: np.sin(2*np.pi*z/length))
    aux = build_auxiliary(SeqCauchyProblem(0.5, 0.5, 1., g, g*0.), 1.)
    assert np.all(aux.h.values == 0)
    expected = -(2*np.pi/length)*np.cos(2*np.pi*g.z/length)
    assert np.allclose(aux.h_bar.values, expected, atol=1e-12)

    g_bar = GridField.centered(half, 64, lambda z: np.cos(2*np.pi*z/length))
    p = SeqCauchyProblem(0.5, 0.5, 1., g, g_bar)
    aux = build_auxiliary(p, 2.)
    expected = -2*length/(2*np.pi)*np.sin(2*np.pi*g.z/length)
    assert np.allclose(aux.h.values, expected, atol=1e-12)
    assert abs(aux.h.mean()) < 1e-14
    res = aux.residuals(p)
    assert res['g_bar'] < 1e-12
    assert res['h_bar'] < 1e-12


def test_build_auxiliary_errors():
    g = GridField.centered(4., 64, gaussian)
    p = SeqCauchyProblem(0.5, 0.5, 1., g, g)
    with pytest.raises(NonZeroMeanError):
        build_auxiliary(p, 1.)
    p = SeqCauchyProblem(0.5, 0.5, 1., g, g*0.)
    with pytest.raises(InvalidParamsError):
        build_auxiliary(p, 0.)


def test_kappa_gauge():
    g = GridField.centered(8., 64, gaussian)
    g_bar = GridField.centered(8., 64, lambda z: -2*z*gaussian(z))
    p = SeqCauchyProblem(0.5, 0.3, 1., g, g_bar)
    f = solve_sequential(p, 0.8)
    for kappa in [0.5, 1., 2.]:
        aux = build_auxiliary(p, kappa)
        phi = solve_auxiliary(aux, p, 0.8)
        # the auxiliary field scales with kappa, f does not see it
        ref = solve_auxiliary(build_auxiliary(p, 1.), p, 0.8)
        assert np.allclose(phi.values, kappa*ref.values, rtol=1e-12, atol=1e-14)
        assert np.all(solve_sequential(p, 0.8).values == f.values)


def test_solve_auxiliary_zero():
    g = GridField.centered(8., 64)
    p = SeqCauchyProblem(0.5, 0.3, 1., g, g)
    aux = build_auxiliary(p, 1.)
    for t in [0., 0.5, 2.]:
        assert np.all(solve_auxiliary(aux, p, t).values == 0)


def test_solve_auxiliary_region_d():
    half = default_half_width(1.7, 1., 1.)
    delta = discrete_delta(half, 512)
    p = SeqCauchyProblem(1.2, 0.5, 1., delta*0., delta*0.)
    aux = AuxiliaryData(delta, delta*0., 1.)
    phi = solve_auxiliary(aux, p, 1.)
    away = np.abs(phi.z) >= 1.
    exact = fundamental_solution(1.7, 1., phi.z[away], 1.)
    assert np.max(np.abs(phi.values[away] - exact)) <= 1e-3


def test_wright_route():
    t = 0.5
    half = default_half_width(1.4, 1., t)
    g = GridField.centered(half, 512, gaussian)
    g_bar = GridField.centered(half, 512, lambda z: -2*z*gaussian(z))
    p = SeqCauchyProblem(0.7, 0.7, 1., g, g_bar)
    f = solve_sequential(p, t)
    f_wright = solve_sequential_wright(p, t)
    gap = np.max(np.abs(f.values - f_wright.values))
    print('route gap', gap)
    assert gap <= 1e-5


def test_coupling_residuals():
    g = GridField.centered(8., 64, gaussian)
    g_bar = GridField.centered(8., 64, lambda z: -2*z*gaussian(z))
    p = SeqCauchyProblem(0.5, 0.3, 1., g, g_bar)
    # L1 error of the lowest power t**order away from t = 0
    rate = dict(beta_eq=min(2 - p.beta, 1 + p.beta),
                alpha_eq=min(2 - p.alpha, 1 + p.alpha))
    previous = None
    for n_steps in [32, 64, 128]:
        res = coupling_residuals(p, 1., TimeMesh.over(1., n_steps))
        print(n_steps, res)
        if previous is not None:
            for name in ['beta_eq', 'alpha_eq']:
                assert previous[name]/res[name] >= 0.7*2**rate[name], name
        previous = res
    assert previous['beta_eq'] < 1e-2
    assert previous['alpha_eq'] < 1e-2


if __name__ == '__main__':
    test_fundamental_solution_examples()
    test_fundamental_solution_heat_kernel()
    test_fundamental_solution_even_and_positive()
    test_fundamental_solution_normalization()
    test_fundamental_solution_errors()
    test_default_half_width()
    test_solve_sequential_initial_time()
    test_solve_sequential_delta()
    test_solve_sequential_heat()
    test_solve_sequential_mass()
    test_solve_sequential_single_equation()
    test_fractional_diffusion_wave_limit()
    test_solve_sequential_errors()
    test_build_auxiliary_examples()
    test_build_auxiliary_errors()
    test_kappa_gauge()
    test_solve_auxiliary_zero()
    test_solve_auxiliary_region_d()
    test_wright_route()
    test_coupling_residuals()
