import math

import numpy as np
import pytest

from fracwave.fracops import (TimeMesh, SampledFn, caputo_grid, rl_integral_grid,
        check_law_of_exponents)
from fracwave.errors import (InvalidOrderError, MeshTooShortError,
        MeshMismatchError, InvalidParamsError)


def test_caputo_grid_examples():
    mesh = TimeMesh.over(1., 512)
    t = mesh.nodes
    f = SampledFn(mesh, t)
    out = caputo_grid(f, 0.5)
    assert np.max(np.abs(out.values - 1.1283791671*np.sqrt(t))) < 2e-3
    out = caputo_grid(SampledFn(mesh, np.full_like(t, 3.)), 0.7)
    assert np.all(out.values == 0.)
    out = caputo_grid(SampledFn(mesh, t**2), 1.5)
    assert np.max(np.abs(out.values - 2/math.gamma(1.5)*np.sqrt(t))) < 5e-3


def test_caputo_grid_integer_orders():
    mesh = TimeMesh.over(1., 64)
    t = mesh.nodes
    f = SampledFn(mesh, t**2)
    assert np.allclose(caputo_grid(f, 1.).values, 2*t, atol=1e-10)
    assert np.allclose(caputo_grid(f, 2.).values, 2., atol=1e-8)


def test_caputo_grid_supplied_derivative():
    mesh = TimeMesh.over(1., 256)
    t = mesh.nodes
    f = SampledFn(mesh, 1 + 2*t + t**2, init_derivs=[1., 2.])
    out = caputo_grid(f, 1.5)
    assert np.max(np.abs(out.values - 2/math.gamma(1.5)*np.sqrt(t))) < 5e-3


def test_caputo_grid_order():
    for alpha in [0.3, 0.5, 0.8]:
        errors = []
        for k in range(7, 12):
            mesh = TimeMesh.over(1., 2**k)
            t = mesh.nodes
            out = caputo_grid(SampledFn(mesh, t**3), alpha)
            exact = 6/math.gamma(4 - alpha)*t**(3 - alpha)
            errors.append(np.max(np.abs(out.values - exact)))
        orders = np.log2(np.array(errors[:-1])/np.array(errors[1:]))
        print('alpha', alpha, 'orders', orders)
        assert np.all(orders >= 2 - alpha - 0.15)


def test_rl_integral_grid_examples():
    mesh = TimeMesh.over(1., 512)
    t = mesh.nodes
    out = rl_integral_grid(SampledFn(mesh, np.ones_like(t)), 1.)
    assert np.allclose(out.values, t, rtol=1e-12, atol=1e-14)
    out = rl_integral_grid(SampledFn(mesh, t), 0.5)
    assert np.max(np.abs(out.values - 0.7522527781*t**1.5)) < 1e-5
    f = SampledFn(mesh, np.sin(t))
    composed = rl_integral_grid(rl_integral_grid(f, 0.25), 0.75)
    direct = rl_integral_grid(f, 1.)
    assert np.max(np.abs(composed.values - direct.values)) < 1e-4


def test_left_inverse_grid():
    mesh = TimeMesh.over(1., 512)
    t = mesh.nodes
    for alpha in [0.3, 0.5, 0.8, 1.5]:
        f = SampledFn(mesh, t**2)
        back = caputo_grid(rl_integral_grid(f, alpha), alpha)
        assert np.max(np.abs(back.values - t**2)) < 1e-3, alpha


def test_reconstruction_grid():
    mesh = TimeMesh.over(1., 512)
    t = mesh.nodes
    values = 1 + np.sin(2*t)
    f = SampledFn(mesh, values)
    for alpha in [0.4, 0.8]:
        back = rl_integral_grid(caputo_grid(f, alpha), alpha)
        # L1 truncation is O(dt**(2 - alpha))
        tol = max(1e-3, 10*mesh.dt**(2 - alpha))
        assert np.max(np.abs(back.values - (values - 1.))) < tol, alpha


def test_linearity():
    rng = np.random.default_rng(5)
    mesh = TimeMesh.over(1., 64)
    f = rng.normal(size=mesh.n_steps + 1)
    g = rng.normal(size=mesh.n_steps + 1)
    a, b = rng.normal(size=2)
    for alpha in [0.3, 0.9, 1.4]:
        lhs = caputo_grid(SampledFn(mesh, a*f + b*g), alpha).values
        rhs = (a*caputo_grid(SampledFn(mesh, f), alpha).values
               + b*caputo_grid(SampledFn(mesh, g), alpha).values)
        assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-9)
        lhs = rl_integral_grid(SampledFn(mesh, a*f + b*g), alpha).values
        rhs = (a*rl_integral_grid(SampledFn(mesh, f), alpha).values
               + b*rl_integral_grid(SampledFn(mesh, g), alpha).values)
        assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)


def test_trailing_dimensions():
    mesh = TimeMesh.over(1., 128)
    t = mesh.nodes
    columns = np.stack([t, t**2, np.cos(t)], axis=1)
    for alpha in [0.6, 1.3]:
        block = caputo_grid(SampledFn(mesh, columns), alpha).values
        integral = rl_integral_grid(SampledFn(mesh, columns), alpha).values
        for j in range(3):
            single = caputo_grid(SampledFn(mesh, columns[:, j]), alpha).values
            assert np.allclose(block[:, j], single, rtol=1e-12, atol=1e-12)
            single = rl_integral_grid(SampledFn(mesh, columns[:, j]), alpha).values
            assert np.allclose(integral[:, j], single, rtol=1e-12, atol=1e-12)


def test_law_of_exponents_grid():
    mesh = TimeMesh.over(1., 512)
    t = mesh.nodes
    report = check_law_of_exponents(SampledFn(mesh, t**3), 0.3, 0.4)
    assert report['holds']
    report = check_law_of_exponents(SampledFn(mesh, t), 0.6, 0.6)
    assert not report['holds']


def test_grid_errors():
    mesh = TimeMesh.over(1., 16)
    f = SampledFn(mesh, mesh.nodes)
    with pytest.raises(InvalidOrderError):
        caputo_grid(f, 0.)
    with pytest.raises(InvalidOrderError):
        caputo_grid(f, 2.5)
    with pytest.raises(InvalidOrderError):
        rl_integral_grid(f, 0.)
    with pytest.raises(MeshTooShortError):
        caputo_grid(SampledFn(TimeMesh(0.1, 1), [0., 1.]), 0.5)
    with pytest.raises(MeshMismatchError):
        SampledFn(mesh, np.zeros(5))
    with pytest.raises(InvalidParamsError):
        TimeMesh(-1., 10)
    with pytest.raises(ValueError):
        TimeMesh(0.1, 0)
    assert not f.values.flags.writeable


if __name__ == '__main__':
    test_caputo_grid_examples()
    test_caputo_grid_integer_orders()
    test_caputo_grid_supplied_derivative()
    test_caputo_grid_order()
    test_rl_integral_grid_examples()
    test_left_inverse_grid()
    test_reconstruction_grid()
    test_linearity()
    test_trailing_dimensions()
    test_law_of_exponents_grid()
    test_grid_errors()
