import math

import numpy as np
from scipy.integrate import quad

from fracwave.constants import BOX_WIDTHS
from fracwave.errors import InvalidOrderError, InvalidParamsError, InvalidTimeError
from fracwave.logger import error
from fracwave.specfun import WrightParams, wright_array


def _check_gamma_lam(gamma, lam):
    if not 0 < gamma < 2:
        # at gamma = 2 the kernel is a pair of travelling delta functions
        msg = error('Fundamental solution needs 0 < gamma < 2, got {0}'.format(gamma))
        raise InvalidOrderError(msg)
    if not (math.isfinite(lam) and lam > 0):
        msg = error('Diffusivity must be positive, got {0}'.format(lam))
        raise InvalidParamsError(msg)


def diffusion_length(gamma, lam, t):
    r"""`\sqrt{\lambda t^\gamma}`"""
    return math.sqrt(lam*t**gamma)


def default_half_width(gamma, lam, t_end):
    """Box half-width of :data:`fracwave.constants.BOX_WIDTHS` diffusion
    lengths at the final time"""
    return BOX_WIDTHS*diffusion_length(gamma, lam, t_end)


def fundamental_solution(gamma, lam, z, t, tol=None):
    r"""Green's function of `\partial_t^\gamma u = \lambda\,\partial_{zz} u`

    .. math::

        G(z, t) = \frac{1}{2\sqrt{\lambda t^\gamma}}
            W_{-\gamma/2,\,1-\gamma/2}\left(-\frac{|z|}{\sqrt{\lambda t^\gamma}}\right)

    Parameters
    ----------
    gamma : float
        Order, ``0 < gamma < 2``.
    lam : float
        Diffusivity.
    z : float or array_like
        Positions.
    t : float
        Time, ``t > 0``.
    tol : float, optional
        Accuracy of the Wright function evaluations.

    Returns
    -------
    G : float or np.ndarray
        Same shape as ``z``.

    Raises
    ------
    InvalidOrderError
        If ``gamma`` is outside ``(0, 2)``. The wave limit ``gamma = 2`` is
        rejected: its kernel `\frac{1}{2}[\delta(z - \sqrt\lambda t) +
        \delta(z + \sqrt\lambda t)]` is a pair of travelling delta functions
        with no pointwise values.
    InvalidParamsError
        If ``lam`` is not positive.
    InvalidTimeError
        If ``t <= 0``.

    """
    _check_gamma_lam(gamma, lam)
    if not t > 0:
        msg = error('Fundamental solution needs t > 0, got {0}'.format(t))
        raise InvalidTimeError(msg)
    s = diffusion_length(gamma, lam, t)
    p = WrightParams(-gamma/2., 1. - gamma/2.)
    z = np.asarray(z, dtype=float)
    values, _ = wright_array(p, -np.abs(z)/s, tol=tol)
    values = values/(2*s)
    if values.ndim == 0:
        return float(values)
    return values


def normalization(gamma, lam, t, widths=40., tol=None):
    """Integral of :func:`fundamental_solution` over ``|z| <= widths``
    diffusion lengths"""
    s = diffusion_length(gamma, lam, t)
    func = lambda z: fundamental_solution(gamma, lam, z, t, tol=tol)
    half, _ = quad(func, 0., widths*s, limit=200, epsabs=1.e-11, epsrel=1.e-11)
    return 2*half
