r"""
Direct simulation of the coupled system

.. math::

    \partial_t^\alpha \rho' = -\rho_0\,\partial_z w', \qquad
    \partial_t^\beta w' = -\frac{c_s^2}{\rho_0}\,\partial_z \rho'

on a periodic box. Each Fourier mode is a two-component linear fractional
system integrated in its Volterra form with product-trapezoidal memory
weights,

.. math::

    y(t_m) = T(t_m) + \frac{\Delta t^\alpha}{\Gamma(\alpha+2)}\Big[
        a_{0,m} F_0 + \sum_{j=1}^{m} w_{m-j} F_j \Big],

where `T` is the Taylor part of the Cauchy data.

"""
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from fracwave.constants import COMPLEX
from fracwave.errors import (InvalidConfigError, HistoryOverflowError,
                             NonConvergenceError)
from fracwave.field import derivative_spectrum
from fracwave.fracops import TimeMesh
from fracwave.logger import msg, warn, error
from fracwave.specfun import MLParams, mittag_leffler_array
from .config import CoupledState


class History(object):
    """Time levels of a simulation

    ``rho`` and ``w`` have one row per entry of ``times`` and one column per
    grid node. ``rho_dot`` and ``w_dot`` hold the first time derivatives at
    the first level (zeros when not supplied).

    """
    __slots__ = ['times', 'rho', 'w', 'grid', 'rho_dot', 'w_dot']

    def __init__(self, times, rho, w, grid, rho_dot=None, w_dot=None):
        self.times = np.asarray(times, dtype=float)
        self.rho = np.asarray(rho, dtype=float)
        self.w = np.asarray(w, dtype=float)
        self.grid = grid
        n = grid.n
        self.rho_dot = np.zeros(n) if rho_dot is None else np.asarray(rho_dot)
        self.w_dot = np.zeros(n) if w_dot is None else np.asarray(w_dot)

    def __len__(self):
        return self.times.shape[0]

    @property
    def t_mesh(self):
        n_steps = len(self) - 1
        if n_steps < 1:
            msg = error('History with a single time level has no mesh')
            raise InvalidConfigError(msg)
        return TimeMesh((self.times[-1] - self.times[0])/n_steps, n_steps)

    def state(self, k):
        return CoupledState(self.grid.with_values(self.rho[k]),
                            self.grid.with_values(self.w[k]), float(self.times[k]),
                            self.grid.with_values(self.rho_dot),
                            self.grid.with_values(self.w_dot))

    def last(self):
        return self.state(len(self) - 1)

    def snapshot_indices(self, count):
        """``count`` evenly spread level indices, first and last included"""
        count = max(1, min(int(count), len(self)))
        if count == 1:
            return [len(self) - 1]
        return sorted(set(np.rint(np.linspace(0, len(self) - 1, count)).astype(int)))


def _modal_derivative(grid):
    """`i\\omega` per rfft mode, zero at Nyquist"""
    ones = np.ones(grid.n//2 + 1, dtype=COMPLEX)
    return derivative_spectrum(ones, grid.wavenumbers, grid.n)


def _spectrum(field, grid):
    if field is None:
        return np.zeros(grid.n//2 + 1, dtype=COMPLEX)
    return field.spectrum()


def _integrate_modes(cfg, n_steps, window, ik, r0, w0, r1, w1):
    alpha = cfg.orders.alpha
    beta = cfg.orders.beta
    mesh = TimeMesh(cfg.mesh.dt, n_steps)
    dt = mesh.dt
    t = mesh.nodes
    a = -cfg.fluid.rho0*ik
    b = -(cfg.fluid.c_s**2/cfg.fluid.rho0)*ik
    ca = dt**alpha/math.gamma(alpha + 2)
    cb = dt**beta/math.gamma(beta + 2)
    wa = mesh.trapezoid_weights(alpha)
    wb = mesh.trapezoid_weights(beta)
    sa = mesh.trapezoid_start_weights(alpha)
    sb = mesh.trapezoid_start_weights(beta)
    pece = cfg.corrector == 'pece'
    if pece:
        ra = mesh.rectangle_weights(alpha)
        rb = mesh.rectangle_weights(beta)
        da = dt**alpha/math.gamma(alpha + 1)
        db = dt**beta/math.gamma(beta + 1)

    shape = (n_steps + 1, ik.size)
    rho = np.empty(shape, dtype=COMPLEX)
    w = np.empty(shape, dtype=COMPLEX)
    f_rho = np.empty(shape, dtype=COMPLEX)
    f_w = np.empty(shape, dtype=COMPLEX)
    rho[0] = r0
    w[0] = w0
    f_rho[0] = a*w0
    f_w[0] = b*r0
    p = ca*a
    q = cb*b
    denom = 1. - p*q

    for m in range(1, n_steps + 1):
        lo = 1 if window is None else max(1, m - window)
        taylor_r = r0 + t[m]*r1 if alpha > 1 else r0
        taylor_w = w0 + t[m]*w1 if beta > 1 else w0
        h_rho = taylor_r + ca*(sa[m]*f_rho[0] + wa[m-lo:0:-1] @ f_rho[lo:m])
        h_w = taylor_w + cb*(sb[m]*f_w[0] + wb[m-lo:0:-1] @ f_w[lo:m])
        if pece:
            jlo = lo - 1
            pred_r = taylor_r + da*(ra[m-1-jlo::-1] @ f_rho[jlo:m])
            pred_w = taylor_w + db*(rb[m-1-jlo::-1] @ f_w[jlo:m])
            rho[m] = h_rho + p*pred_w
            w[m] = h_w + q*pred_r
        else:
            rho[m] = (h_rho + p*h_w)/denom
            w[m] = h_w + q*rho[m]
        f_rho[m] = a*w[m]
        f_w[m] = b*rho[m]
    return rho, w


class CoupledSimulator(object):
    """Simulator of the coupled density/velocity system

    Parameters
    ----------
    cfg : :class:`.SimConfig`

    """
    __slots__ = ['cfg', 'history']

    def __init__(self, cfg):
        cfg.validate()
        self.cfg = cfg
        self.history = None

    def _n_steps(self, init, t_end):
        dt = self.cfg.mesh.dt
        if not (math.isfinite(t_end) and t_end >= init.t):
            msg = error('t_end must be >= {0}, got {1}'.format(init.t, t_end))
            raise InvalidConfigError(msg)
        span = t_end - init.t
        n_steps = int(round(span/dt))
        if abs(n_steps*dt - span) > 1.e-9*max(1., span):
            msg = error('t_end - t0 = {0} is not a multiple of dt = {1}'.format(span, dt))
            raise InvalidConfigError(msg)
        return n_steps

    def _window(self, n_steps, silent):
        cap = self.cfg.history_cap
        if cap is None or n_steps + 1 <= cap:
            return None
        if not self.cfg.truncate:
            msg = error('{0} time levels exceed history_cap = {1}'.format(
                        n_steps + 1, cap))
            raise HistoryOverflowError(msg)
        warn('Memory truncated to the last {0} time levels'.format(cap),
             level=1, silent=silent)
        return int(cap)

    def run(self, init, t_end=None, silent=False):
        """Integrate from ``init`` up to ``t_end``

        Parameters
        ----------
        init : :class:`.CoupledState`
            Cauchy data at ``init.t``. The memory of the fractional
            derivatives starts at ``init.t``: a restart from a mid-run state
            forgets the levels before it.
        t_end : float, optional
            Final time, ``init.t`` plus a multiple of ``cfg.mesh.dt``.
            Default ``init.t + cfg.mesh.t_end``.
        silent : bool, optional
            A boolean to tell whether the log messages should be printed.

        Returns
        -------
        history : :class:`.History`

        """
        cfg = self.cfg
        cfg.check_state(init)
        t_end = init.t + cfg.mesh.t_end if t_end is None else float(t_end)
        n_steps = self._n_steps(init, t_end)
        window = self._window(n_steps, silent)
        grid = cfg.grid
        rho_dot = None if init.rho_dot is None else init.rho_dot.values
        w_dot = None if init.w_dot is None else init.w_dot.values
        if n_steps == 0:
            self.history = History([init.t], init.rho_p.values[None, :],
                                   init.w_p.values[None, :], init.rho_p,
                                   rho_dot, w_dot)
            return self.history
        msg('Started coupled simulation', silent=silent)
        msg('orders ({0}, {1}), {2} steps, {3} modes'.format(cfg.orders.alpha,
            cfg.orders.beta, n_steps, grid.n//2 + 1), level=1, silent=silent)

        ik = _modal_derivative(grid)
        data = [init.rho_p.spectrum(), init.w_p.spectrum(),
                _spectrum(init.rho_dot, grid), _spectrum(init.w_dot, grid)]
        chunks = np.array_split(np.arange(ik.size), min(cfg.num_cores, ik.size))

        def work(idx):
            return _integrate_modes(cfg, n_steps, window, ik[idx],
                                    *[d[idx] for d in data])

        if len(chunks) == 1:
            results = [work(chunks[0])]
        else:
            with ThreadPoolExecutor(max_workers=len(chunks)) as executor:
                results = list(executor.map(work, chunks))
        rho_hat = np.concatenate([r[0] for r in results], axis=1)
        w_hat = np.concatenate([r[1] for r in results], axis=1)

        n = grid.n
        rho = np.fft.irfft(rho_hat, n=n, axis=1)
        w = np.fft.irfft(w_hat, n=n, axis=1)
        if not (np.all(np.isfinite(rho)) and np.all(np.isfinite(w))):
            raise NonConvergenceError(error('Coupled simulation produced '
                                            'non-finite values'))
        times = init.t + cfg.mesh.dt*np.arange(n_steps + 1)
        self.history = History(times, rho, w, init.rho_p, rho_dot, w_dot)
        msg('Finished coupled simulation', silent=silent)
        return self.history


def step_to(cfg, init, t_end, silent=True):
    """State at ``t_end`` of a run started from ``init``"""
    return CoupledSimulator(cfg).run(init, t_end, silent=silent).last()


def exact_modal_solution(cfg, init, t, tol=None):
    r"""Closed-form state at time ``t``

    Per mode, with `a = \rho_0 i\omega`, `b = (c_s^2/\rho_0) i\omega`,
    `\gamma = \alpha + \beta` and `E_\mu = E_{\gamma,\mu}(-c_s^2\omega^2 t^\gamma)`:

    .. math::

        \hat\rho = \hat\rho_0 E_1 - a\,\hat w_0\, t^\alpha E_{\alpha+1}, \qquad
        \hat w = \hat w_0 E_1 - b\,\hat\rho_0\, t^\beta E_{\beta+1}

    plus the terms of the first-derivative data for orders above 1. Time is
    counted from ``init.t``, where the memory starts.

    """
    if not t >= init.t:
        msg = error('Closed-form solution needs t >= {0}, got {1}'.format(init.t, t))
        raise InvalidConfigError(msg)
    if t == init.t:
        return init
    t_abs = float(t)
    t = t_abs - init.t
    alpha = cfg.orders.alpha
    beta = cfg.orders.beta
    gamma = alpha + beta
    grid = init.rho_p
    ik = _modal_derivative(grid)
    y = -cfg.fluid.diffusivity*ik.imag**2*t**gamma
    e = lambda mu: mittag_leffler_array(MLParams(gamma, mu), y, tol=tol)[0]
    a = -cfg.fluid.rho0*ik
    b = -(cfg.fluid.c_s**2/cfg.fluid.rho0)*ik
    r0 = init.rho_p.spectrum()
    w0 = init.w_p.spectrum()
    e1 = e(1.)
    rho = r0*e1 + a*w0*t**alpha*e(alpha + 1)
    w = w0*e1 + b*r0*t**beta*e(beta + 1)
    if alpha > 1 and init.rho_dot is not None:
        r1 = init.rho_dot.spectrum()
        rho += r1*t*e(2.)
        w += b*r1*t**(beta + 1)*e(beta + 2)
    if beta > 1 and init.w_dot is not None:
        w1 = init.w_dot.spectrum()
        w += w1*t*e(2.)
        rho += a*w1*t**(alpha + 1)*e(alpha + 2)
    return CoupledState(grid.from_spectrum(rho), grid.from_spectrum(w), t_abs,
                        init.rho_dot, init.w_dot)
