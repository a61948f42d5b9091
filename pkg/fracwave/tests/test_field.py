import numpy as np
import pytest

from fracwave.errors import InvalidParamsError, GridMismatchError, NonZeroMeanError
from fracwave.field import GridField, discrete_delta


def test_grid():
    f = GridField.centered(4., 16)
    assert f.n == 16
    assert np.isclose(f.dz, 0.5)
    assert np.isclose(f.z[0], -4.)
    assert np.isclose(f.z[-1], 3.5)
    assert np.all(f.values == 0)
    assert not f.values.flags.writeable


def test_invalid_grid():
    with pytest.raises(InvalidParamsError):
        GridField(0., 1., np.zeros(12))
    with pytest.raises(InvalidParamsError):
        GridField(0., 1., np.zeros(4))
    with pytest.raises(InvalidParamsError):
        GridField(1., 1., np.zeros(16))
    with pytest.raises(InvalidParamsError):
        GridField(0., 1., np.zeros((16, 2)))


def test_derivative():
    length = 10.
    f = GridField.from_function(lambda z: np.sin(2*np.pi*z/length) + np.cos(6*np.pi*z/length),
                                0., length, 64)
    d = f.derivative()
    k = 2*np.pi/length
    expected = k*np.cos(k*f.z) - 3*k*np.sin(3*k*f.z)
    assert np.allclose(d.values, expected, atol=1e-12)


def test_derivative_gaussian():
    f = GridField.centered(10., 128, lambda z: np.exp(-z**2))
    d = f.derivative()
    assert np.max(np.abs(d.values + 2*f.z*np.exp(-f.z**2))) < 1e-12


def test_antiderivative():
    length = 2*np.pi
    f = GridField.from_function(np.cos, 0., length, 32)
    F = f.antiderivative()
    assert np.allclose(F.values, np.sin(f.z), atol=1e-13)
    assert abs(F.mean()) < 1e-14
    assert np.allclose(F.derivative().values, f.values, atol=1e-13)


def test_antiderivative_nonzero_mean():
    f = GridField.centered(1., 16, lambda z: 1 + z**2)
    with pytest.raises(NonZeroMeanError):
        f.antiderivative()


def test_arithmetic():
    f = GridField.centered(2., 16, lambda z: z)
    g = GridField.centered(2., 16, lambda z: z**2)
    assert np.allclose((f + g).values, f.z + f.z**2)
    assert np.allclose((g - f).values, f.z**2 - f.z)
    assert np.allclose((2*f).values, 2*f.z)
    assert np.allclose((f*3.).values, 3*f.z)
    other = GridField.centered(3., 16, lambda z: z)
    with pytest.raises(GridMismatchError):
        f + other
    other = GridField.centered(2., 32, lambda z: z)
    with pytest.raises(GridMismatchError):
        f - other


def test_discrete_delta():
    delta = discrete_delta(5., 64)
    assert np.isclose(np.sum(delta.values)*delta.dz, 1.)
    assert delta.values[32] == 1/delta.dz
    assert np.count_nonzero(delta.values) == 1
    # dz = 0.15625, the node closest to 1 is 0.9375
    delta = discrete_delta(5., 64, z0=1.)
    assert np.isclose(delta.z[np.argmax(delta.values)], 0.9375)
    delta = discrete_delta(4., 64, z0=1.)
    assert delta.z[np.argmax(delta.values)] == 1.


if __name__ == '__main__':
    test_derivative()
    test_antiderivative()
