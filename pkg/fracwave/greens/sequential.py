r"""
Sequential-derivative Cauchy problems

The problem

.. math::

    \partial_t^\beta \partial_t^\alpha f = \lambda\,\partial_{zz} f, \qquad
    f(z, 0) = g(z), \qquad \partial_t^\beta f|_{t=0} = \bar g(z)

is paired with an auxiliary field `\varphi` of swapped orders so that

.. math::

    \partial_t^\beta f + \frac{\lambda}{\kappa}\partial_z \varphi = 0, \qquad
    \partial_t^\alpha \varphi + \kappa\,\partial_z f = 0

and is solved per Fourier mode with Mittag-Leffler multipliers,
`\gamma = \alpha + \beta`:

.. math::

    \hat f(\omega, t) = \hat g\, E_{\gamma,1}(-\lambda\omega^2 t^\gamma)
        + \hat{\bar g}\, t^\beta E_{\gamma,\beta+1}(-\lambda\omega^2 t^\gamma)

"""
import math
from dataclasses import dataclass

import numpy as np

from fracwave.errors import (InvalidOrderError, InvalidParamsError,
                             InvalidTimeError)
from fracwave.field import GridField, derivative_spectrum
from fracwave.fracops import TimeMesh, SampledFn, caputo_grid
from fracwave.logger import error, msg
from fracwave.regions import FracOrderPair, Region, classify
from fracwave.specfun import MLParams, WrightParams, mittag_leffler_array, wright_array
from fracwave.specfun.gamma import reciprocal_gamma


@dataclass(frozen=True, eq=False)
class SeqCauchyProblem:
    r"""Sequential Cauchy problem

    ===========  ==========================================================
    Attribute    Description
    ===========  ==========================================================
    ``alpha``    inner order
    ``beta``     outer order, also the order of the derivative datum
    ``lam``      diffusivity `\lambda`
    ``g``        initial value :class:`.GridField`
    ``g_bar``    initial value of `\partial_t^\beta f`
    ===========  ==========================================================

    """
    alpha: float
    beta: float
    lam: float
    g: GridField
    g_bar: GridField

    def __post_init__(self):
        report = classify(FracOrderPair(self.alpha, self.beta))
        if report.region == Region.OUTSIDE:
            msg = error('Orders ({0}, {1}) lie outside the regions A, B, C, D'.format(
                        self.alpha, self.beta))
            raise InvalidOrderError(msg)
        if not (math.isfinite(self.lam) and self.lam > 0):
            msg = error('Diffusivity must be positive, got {0}'.format(self.lam))
            raise InvalidParamsError(msg)
        self.g.check_same_grid(self.g_bar)

    @property
    def orders(self):
        return FracOrderPair(self.alpha, self.beta)

    @property
    def gamma(self):
        return self.alpha + self.beta

    @property
    def region(self):
        return classify(self.orders).region


@dataclass(frozen=True, eq=False)
class AuxiliaryData:
    """Initial data ``h``, ``h_bar`` of the auxiliary field and the
    coupling constant ``kappa``"""
    h: GridField
    h_bar: GridField
    kappa: float

    def residuals(self, p):
        """Max-abs mismatch of both defining relations"""
        g_bar = p.g_bar + (p.lam/self.kappa)*self.h.derivative()
        h_bar = self.h_bar + self.kappa*p.g.derivative()
        return dict(g_bar=g_bar.max_abs(), h_bar=h_bar.max_abs())


def _check_time(t):
    if not (math.isfinite(t) and t >= 0):
        msg = error('Time must be finite and >= 0, got {0}'.format(t))
        raise InvalidTimeError(msg)


def _multipliers(gamma, second, lam, k, t, tol):
    """`E_{\\gamma,1}(-x)` and `E_{\\gamma,second}(-x)`, `x = \\lambda k^2 t^\\gamma`"""
    y = -lam*k**2*t**gamma
    first, _ = mittag_leffler_array(MLParams(gamma, 1.), y, tol=tol)
    other, _ = mittag_leffler_array(MLParams(gamma, second), y, tol=tol)
    return first, other


def _evolve(value, datum, gamma, order, lam, t, tol):
    """Evolve ``value`` with derivative datum ``datum`` of order ``order``"""
    value.check_same_grid(datum)
    if t == 0:
        return value
    first, other = _multipliers(gamma, order + 1., lam, value.wavenumbers, t, tol)
    spec = value.spectrum()*first + datum.spectrum()*(t**order)*other
    return value.from_spectrum(spec)


def fractional_diffusion(g, gamma, lam, t, tol=None):
    r"""Evolution of `\partial_t^\gamma u = \lambda\,\partial_{zz} u` from
    ``u(., 0) = g`` with vanishing first time derivative"""
    if not 0 < gamma <= 2:
        msg = error('Diffusion order must be in (0, 2], got {0}'.format(gamma))
        raise InvalidOrderError(msg)
    if not (math.isfinite(lam) and lam > 0):
        msg = error('Diffusivity must be positive, got {0}'.format(lam))
        raise InvalidParamsError(msg)
    _check_time(t)
    if t == 0:
        return g
    first, _ = _multipliers(gamma, 1., lam, g.wavenumbers, t, tol)
    return g.from_spectrum(g.spectrum()*first)


def solve_sequential(p, t, tol=None, silent=False):
    """Field `f(., t)` of a :class:`.SeqCauchyProblem`

    Returns ``p.g`` itself at ``t = 0``.

    """
    _check_time(t)
    msg('Sequential solve at t={0:g}, alpha={1:g}, beta={2:g}, {3} modes'.format(
        t, p.alpha, p.beta, p.g.wavenumbers.size), level=1, silent=silent)
    return _evolve(p.g, p.g_bar, p.gamma, p.beta, p.lam, t, tol)


def build_auxiliary(p, kappa):
    r"""Auxiliary initial data

    ``h`` is the zero-mean solution of `\bar g = -(\lambda/\kappa)\partial_z h`
    and ``h_bar`` is `-\kappa\,\partial_z g`.

    Raises
    ------
    InvalidParamsError
        If ``kappa`` is zero or not finite.
    NonZeroMeanError
        If ``g_bar`` has a nonzero mean.

    """
    if not (math.isfinite(kappa) and kappa != 0):
        msg = error('Coupling constant must be finite and nonzero, got {0}'.format(kappa))
        raise InvalidParamsError(msg)
    h = p.g_bar.antiderivative()*(-kappa/p.lam)
    h_bar = p.g.derivative()*(-kappa)
    return AuxiliaryData(h, h_bar, kappa)


def solve_auxiliary(aux, p, t, tol=None):
    """Auxiliary field `\\varphi(., t)`, orders swapped"""
    _check_time(t)
    return _evolve(aux.h, aux.h_bar, p.gamma, p.alpha, p.lam, t, tol)


def _kernel_spectrum(p, mu, s, field, refine, tol):
    r"""Cosine transform of `W_{-\gamma/2,\mu}(-|y|/s)/(2s)` over the box

    Trapezoidal rule on a mesh ``refine`` times finer than the grid, with
    the end correction of the kink at `y = 0`.

    """
    k = field.wavenumbers
    h = field.dz/refine
    m = field.n*refine//2
    y = h*np.arange(m + 1)
    values, _ = wright_array(WrightParams(-p.gamma/2., mu), -y/s, tol=tol)
    values = values/(2*s)
    weights = np.full(m + 1, h)
    weights[0] = weights[-1] = h/2
    spec = np.cos(np.outer(k, y)) @ (weights*values)
    # one-sided slope at the origin
    slope = -reciprocal_gamma(mu - p.gamma/2.)/(2*s**2)
    return 2*(spec + h**2/12.*slope)


def solve_sequential_wright(p, t, refine=4, tol=None, silent=False):
    r"""Field `f(., t)` by convolution with the Wright kernels

    .. math::

        f = g * G_1 + t^\beta\,\bar g * G_2, \qquad
        G_j(z) = \frac{1}{2s} W_{-\gamma/2,\mu_j}\left(-\frac{|z|}{s}\right)

    with `s = \sqrt{\lambda t^\gamma}`, `\mu_1 = 1 - \gamma/2` and
    `\mu_2 = 1 + \beta - \gamma/2`. The periodic convolutions are carried
    out in Fourier space; the kernel transforms come from quadrature of the
    real-space kernels, not from Mittag-Leffler multipliers.

    """
    _check_time(t)
    if t == 0:
        return p.g
    if p.gamma >= 2:
        text = error('Wright kernels need alpha + beta < 2, got {0}'.format(p.gamma))
        raise InvalidOrderError(text)
    msg('Wright-kernel solve at t={0:g}, {1} quadrature nodes per kernel'.format(
        t, p.g.n*refine//2 + 1), level=1, silent=silent)
    s = math.sqrt(p.lam*t**p.gamma)
    k1 = _kernel_spectrum(p, 1. - p.gamma/2., s, p.g, refine, tol)
    k2 = _kernel_spectrum(p, 1. + p.beta - p.gamma/2., s, p.g, refine, tol)
    spec = p.g.spectrum()*k1 + p.g_bar.spectrum()*(t**p.beta)*k2
    return p.g.from_spectrum(spec)


def coupling_residuals(p, kappa, t_mesh, skip_fraction=0.5, tol=None,
                       silent=True):
    r"""Residuals of the coupled first-order pair on a time mesh

    `f` and `\varphi` are sampled at the nodes of ``t_mesh``, the time
    derivatives use :func:`.caputo_grid` and the spatial ones are spectral.
    Nodes with ``t < skip_fraction*t_end`` are left out of the maxima.

    Returns
    -------
    res : dict
        ``beta_eq`` and ``alpha_eq`` max-abs residuals.

    """
    aux = build_auxiliary(p, kappa)
    t = t_mesh.nodes
    msg('Coupling residuals on {0} steps'.format(t_mesh.n_steps), level=1,
        silent=silent)
    f = np.array([solve_sequential(p, ti, tol, silent=True).values for ti in t])
    phi = np.array([solve_auxiliary(aux, p, ti, tol).values for ti in t])
    n = p.g.n
    k = p.g.wavenumbers
    dz_f = np.fft.irfft(derivative_spectrum(np.fft.rfft(f, axis=1), k, n), n=n, axis=1)
    dz_phi = np.fft.irfft(derivative_spectrum(np.fft.rfft(phi, axis=1), k, n), n=n, axis=1)
    # first time derivatives vanish at t = 0 whenever an order exceeds 1
    dt_f = caputo_grid(SampledFn(t_mesh, f, [f[0], np.zeros(n)]), p.beta).values
    dt_phi = caputo_grid(SampledFn(t_mesh, phi, [phi[0], np.zeros(n)]), p.alpha).values
    keep = t >= skip_fraction*t_mesh.t_end
    keep[0] = False
    beta_eq = dt_f + (p.lam/kappa)*dz_phi
    alpha_eq = dt_phi + kappa*dz_f
    return dict(beta_eq=float(np.max(np.abs(beta_eq[keep]))),
                alpha_eq=float(np.max(np.abs(alpha_eq[keep]))))
