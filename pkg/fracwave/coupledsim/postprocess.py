import numpy as np

from fracwave.errors import MeshMismatchError
from fracwave.field import derivative_spectrum
from fracwave.fracops import TimeMesh, SampledFn, caputo_grid, rl_integral_grid
from fracwave.logger import error, warn
from .simulator import History


def _dz(values, grid):
    """Spectral `\\partial_z` of each row"""
    spec = np.fft.rfft(values, axis=1)
    return np.fft.irfft(derivative_spectrum(spec, grid.wavenumbers, grid.n),
                        n=grid.n, axis=1)


def _check_times(times, cfg):
    dt = cfg.mesh.dt
    expected = times[0] + dt*np.arange(len(times))
    if not np.allclose(times, expected, rtol=1.e-9, atol=1.e-12*dt):
        msg = error('History is not sampled with dt = {0}'.format(dt))
        raise MeshMismatchError(msg)


def recover_velocity(rho_history, cfg, w0, w_dot=None):
    r"""Velocity from the density history

    .. math::

        w'(z, t) = w'(z, 0) + t\,\partial_t w'(z, 0)
            - \frac{c_s^2}{\rho_0} J_t^\beta \partial_z \rho'(z, t)

    the middle term being present only for ``beta > 1``.

    Parameters
    ----------
    rho_history : :class:`.History` or sequence of :class:`.GridField`
        Density at the nodes `k\,\Delta t`, `k = 0, 1, \dots`, of
        ``cfg.mesh``.
    cfg : :class:`.SimConfig`
    w0 : :class:`.GridField`
        Initial velocity.
    w_dot : :class:`.GridField`, optional
        Initial velocity derivative, zero by default.

    Returns
    -------
    w : :class:`.GridField`
        Velocity at the last time level.

    Raises
    ------
    MeshMismatchError
        If the history does not follow ``cfg.mesh``.

    """
    if isinstance(rho_history, History):
        _check_times(rho_history.times, cfg)
        rho = rho_history.rho
        rho_history.grid.check_same_grid(w0)
    else:
        for f in rho_history:
            w0.check_same_grid(f)
        rho = np.array([f.values for f in rho_history])
        if rho.shape[0] > cfg.mesh.n_steps + 1:
            msg = error('History has {0} levels, the mesh only {1}'.format(
                        rho.shape[0], cfg.mesh.n_steps + 1))
            raise MeshMismatchError(msg)
    n_steps = rho.shape[0] - 1
    if n_steps < 1:
        return w0
    beta = cfg.orders.beta
    mesh = TimeMesh(cfg.mesh.dt, n_steps)
    integral = rl_integral_grid(SampledFn(mesh, _dz(rho, w0)), beta).values[-1]
    values = w0.values - (cfg.fluid.c_s**2/cfg.fluid.rho0)*integral
    if beta > 1 and w_dot is not None:
        values = values + mesh.t_end*w_dot.values
    return w0.with_values(values)


def residual_report(history, cfg, skip_fraction=0.5):
    """Max-abs residuals of both equations along a simulated history

    Time derivatives use :func:`.caputo_grid`, spatial ones are spectral.
    Levels less than ``skip_fraction`` of the way through the run are left
    out, where the start-up error of the grid derivatives dominates. Histories
    too short for the grid derivatives, or with no level left after the skip,
    report zero residuals.

    Returns
    -------
    res : dict
        ``continuity_res`` and ``momentum_res``.

    """
    _check_times(history.times, cfg)
    zero = dict(continuity_res=0., momentum_res=0.)
    min_steps = 3 if 2 in (cfg.orders.alpha, cfg.orders.beta) else 2
    if len(history) - 1 < min_steps:
        warn('History of {0} levels is too short for residuals'.format(len(history)))
        return zero
    elapsed = history.times - history.times[0]
    keep = elapsed >= skip_fraction*elapsed[-1]
    keep[0] = False
    if not np.any(keep):
        return zero
    mesh = history.t_mesh
    rho = history.rho
    w = history.w
    grid = history.grid
    rho0 = cfg.fluid.rho0
    ratio = cfg.fluid.c_s**2/rho0
    d_rho = caputo_grid(SampledFn(mesh, rho, [rho[0], history.rho_dot]),
                        cfg.orders.alpha).values
    d_w = caputo_grid(SampledFn(mesh, w, [w[0], history.w_dot]),
                      cfg.orders.beta).values
    continuity = d_rho + rho0*_dz(w, grid)
    momentum = d_w + ratio*_dz(rho, grid)
    return dict(continuity_res=float(np.max(np.abs(continuity[keep]))),
                momentum_res=float(np.max(np.abs(momentum[keep]))))
