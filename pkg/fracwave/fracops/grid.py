r"""
Caputo derivative and Riemann-Liouville integral on uniform meshes

The fractional derivative uses the L1 scheme

.. math::

    D^\alpha f(t_n) \approx \frac{\Delta t^{-\alpha}}{\Gamma(2-\alpha)}
        \sum_{k=0}^{n-1} b_k \left(f_{n-k} - f_{n-k-1}\right), \qquad
        b_k = (k+1)^{1-\alpha} - k^{1-\alpha}

for `0 < \alpha < 1`. For `1 < \alpha < 2` the linear initial part is
removed first and the L1 scheme of order `\alpha - 1` is applied to the
derivative of the remainder. The integral uses the product-trapezoidal
rule, exact for piecewise linear data.

"""
import math

import numpy as np

from fracwave.errors import InvalidOrderError, MeshTooShortError
from fracwave.logger import error
from .mesh import SampledFn, history_convolve


def _check_mesh(f, min_steps=2):
    if f.t_mesh.n_steps < min_steps:
        msg = error('Grid operator needs at least {0} steps, got {1}'.format(
                    min_steps, f.t_mesh.n_steps))
        raise MeshTooShortError(msg)


def _l1(values, alpha, t_mesh):
    out = np.zeros_like(values)
    d = np.diff(values, axis=0)
    b = t_mesh.l1_weights(alpha)
    out[1:] = history_convolve(b, d)*(t_mesh.dt**(-alpha)/math.gamma(2 - alpha))
    return out


def _first_derivative(values, dt):
    return np.gradient(values, dt, axis=0, edge_order=2)


def _second_derivative(values, dt):
    f = values
    out = np.empty_like(f)
    out[1:-1] = f[2:] - 2*f[1:-1] + f[:-2]
    out[0] = 2*f[0] - 5*f[1] + 4*f[2] - f[3]
    out[-1] = 2*f[-1] - 5*f[-2] + 4*f[-3] - f[-4]
    return out/dt**2


def caputo_grid(f, alpha):
    r"""Caputo derivative of sampled data

    Parameters
    ----------
    f : :class:`.SampledFn`
        Samples on a uniform mesh, time along axis 0.
    alpha : float
        Order, ``0 < alpha <= 2``. The integer orders 1 and 2 use plain
        second-order finite differences.

    Returns
    -------
    out : :class:`.SampledFn`
        `D^\alpha f` at the mesh nodes with `O(\Delta t^{2-\alpha})`
        truncation error. The node-0 value is ``0`` for fractional orders.

    Raises
    ------
    InvalidOrderError
        If ``alpha`` is outside ``(0, 2]``.
    MeshTooShortError
        If the mesh has fewer than 2 steps (3 for ``alpha = 2``).

    """
    if not 0 < alpha <= 2:
        msg = error('Caputo grid order must be in (0, 2], got {0}'.format(alpha))
        raise InvalidOrderError(msg)
    _check_mesh(f, 3 if alpha == 2 else 2)
    dt = f.t_mesh.dt
    values = f.values
    if alpha == 1:
        out = _first_derivative(values, dt)
    elif alpha == 2:
        out = _second_derivative(values, dt)
    elif alpha < 1:
        out = _l1(values, alpha, f.t_mesh)
    else:
        t = f.t.reshape((-1,) + (1,)*(values.ndim - 1))
        g = values - f.derivative_at_zero(0) - f.derivative_at_zero(1)*t
        dg = _first_derivative(g, dt)
        dg[0] = 0.
        out = _l1(dg, alpha - 1, f.t_mesh)
    return SampledFn(f.t_mesh, out)


def rl_integral_grid(f, alpha):
    r"""Riemann-Liouville integral of sampled data

    .. math::

        J^\alpha f(t_n) \approx \frac{\Delta t^\alpha}{\Gamma(\alpha+2)}
            \Big[a_{0,n} f_0 + \sum_{j=1}^{n} w_{n-j} f_j\Big]

    Parameters
    ----------
    f : :class:`.SampledFn`
    alpha : float
        Order, ``alpha > 0``.

    Returns
    -------
    out : :class:`.SampledFn`
        `J^\alpha f` at the nodes, ``0`` at node 0. Second order for smooth
        ``f``.

    """
    if not alpha > 0:
        msg = error('Integral grid order must be positive, got {0}'.format(alpha))
        raise InvalidOrderError(msg)
    _check_mesh(f, 1)
    mesh = f.t_mesh
    values = f.values
    shape = (-1,) + (1,)*(values.ndim - 1)
    rest = values.copy()
    rest[0] = 0.
    out = history_convolve(mesh.trapezoid_weights(alpha), rest)
    out += mesh.trapezoid_start_weights(alpha).reshape(shape)*values[0]
    out *= mesh.dt**alpha/math.gamma(alpha + 2)
    out[0] = 0.
    return SampledFn(mesh, out)
