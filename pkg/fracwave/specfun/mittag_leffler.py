r"""
Two-parameter Mittag-Leffler function

.. math::

    E_{\eta,\gamma}(y) = \sum_{r=0}^\infty \frac{y^r}{\Gamma(\eta r + \gamma)}

"""
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, IntegrationWarning

from fracwave.constants import TOL, MAX_TERMS, Y0
from fracwave.errors import InvalidParamsError, NonConvergenceError
from fracwave.logger import warn, error
from .gamma import (reciprocal_gamma, log_abs_reciprocal_gamma,
                    log_reciprocal_gamma_bound)
from .series import SeriesCoefficients, sum_series, EPS


@dataclass(frozen=True)
class MLParams:
    """Parameters ``eta`` and ``gamma`` of `E_{\\eta,\\gamma}`, both > 0"""
    eta: float
    gamma: float

    def __post_init__(self):
        for name in ('eta', 'gamma'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                msg = error('Mittag-Leffler parameter {0} must be positive, '
                            'got {1}'.format(name, value))
                raise InvalidParamsError(msg)


@dataclass(frozen=True)
class EvalResult:
    """Value of a special function with its estimated absolute error

    ``method`` tells which branch produced the value: ``'exact'``,
    ``'series'``, ``'series-mp'``, ``'asymptotic'``, ``'integral'`` or
    ``'saddle'``.

    """
    value: float
    est_abs_error: float
    terms_used: int
    method: str = 'series'


def _exponential_part(eta, gamma, x):
    # residues at zeta**eta = -x with |arg zeta| = pi/eta < pi
    log_zeta = complex(math.log(x)/eta, math.pi/eta)
    expo = (1. - gamma)*log_zeta + np.exp(log_zeta)
    return 2./eta*math.exp(expo.real)*math.cos(expo.imag)


def _asymptotic(eta, gamma, y, max_terms):
    x = -y
    logx = math.log(x)
    k = np.arange(1, max_terms + 2, dtype=float)
    a = gamma - eta*k
    log_abs, sign = log_abs_reciprocal_gamma(a)
    log_bound = log_reciprocal_gamma_bound(a) - k*logx
    increasing = np.nonzero(np.diff(log_bound) > 0)[0]
    # stop at the smallest term
    n = int(increasing[0]) + 1 if increasing.size else max_terms
    alternating = np.where(k[:n] % 2 == 0, 1., -1.)
    with np.errstate(under='ignore'):
        terms = -sign[:n]*alternating*np.exp(log_abs[:n] - k[:n]*logx)
    value = math.fsum(terms)
    err = (10.*math.exp(log_bound[n])
           + EPS*float(np.sum(np.abs(terms)))*(3. + n*logx))
    if eta > 1:
        value += _exponential_part(eta, gamma, x)
    elif eta == 1:
        err += 2.*math.exp((1. - gamma)*logx - x)
    return EvalResult(value, err, n, 'asymptotic')


def _integral(eta, gamma, y, tol):
    # real-axis kernel for 0 < eta < 1, y < 0 and gamma < 1 + eta; larger
    # gamma go through E(eta, b + eta; y) = (E(eta, b; y) - 1/Gamma(b))/y
    x = -y
    steps = max(0, int(math.floor((gamma - 1.)/eta)))
    beta = gamma - steps*eta
    power = 1./eta
    s1 = math.sin(math.pi*(1. - beta))
    s2 = math.sin(math.pi*(1. - beta + eta))
    cos_eta = math.cos(math.pi*eta)

    def kernel(chi):
        return (math.exp(-chi**power)*(chi*s1 + x*s2)
                /(eta*math.pi*(chi*chi + 2.*chi*x*cos_eta + x*x)))

    rho = 0.1*tol
    chi0 = max(1., 2.*x, (-math.log(math.pi*rho/6.))**eta)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', IntegrationWarning)
        value, err = quad(kernel, 0., chi0, weight='alg',
                          wvar=((1. - beta)*power, 0.), epsabs=rho, epsrel=rho,
                          limit=200)
    err += rho
    for j in range(steps):
        value = (value - reciprocal_gamma(beta + j*eta))/y
        err /= x
    return EvalResult(value, err, steps + 1, 'integral')


def _accepted(res, y, tol):
    limit = tol*max(1., abs(res.value))
    if not res.est_abs_error <= limit:
        return False
    if res.method == 'asymptotic' and res.est_abs_error > 0.1*limit:
        warn('Asymptotic expansion at y={0} has error {1:.2g}, close to tol'.format(
             y, res.est_abs_error))
    return True


def mittag_leffler(p, y, tol=None, max_terms=None, y0=None):
    r"""Mittag-Leffler function `E_{\eta,\gamma}(y)` for real ``y``

    The series is summed directly for moderate arguments. For
    ``y < -y0`` and ``0 < eta < 2`` the asymptotic expansion in inverse
    powers of ``y``, truncated at its smallest term, is tried first. For
    ``0 < eta < 1`` and negative arguments out of reach of both, the function
    is integrated along the real axis with :func:`scipy.integrate.quad`. A
    branch is accepted only when its error estimate is below
    ``tol*max(1, |value|)``, otherwise the next one is used.

    Parameters
    ----------
    p : :class:`.MLParams`
        The parameters `\eta` and `\gamma`.
    y : float
        The argument.
    tol : float, optional
        Accuracy target, default :data:`fracwave.constants.TOL`.
    max_terms : int, optional
        Term cap, default :data:`fracwave.constants.MAX_TERMS`.
    y0 : float, optional
        Series/asymptotic switch, default :data:`fracwave.constants.Y0`.

    Returns
    -------
    result : :class:`.EvalResult`

    Raises
    ------
    NonConvergenceError
        If no branch reaches ``tol`` within ``max_terms`` terms.

    Examples
    --------
    >>> round(mittag_leffler(MLParams(1., 1.), 1.).value, 9)
    2.718281828

    """
    tol = TOL if tol is None else tol
    max_terms = MAX_TERMS if max_terms is None else max_terms
    y0 = Y0 if y0 is None else y0
    y = float(y)
    if not math.isfinite(y):
        msg = error('Mittag-Leffler argument must be finite, got {0}'.format(y))
        raise InvalidParamsError(msg)
    if y == 0:
        return EvalResult(reciprocal_gamma(p.gamma), 0., 1, 'exact')

    asymptotic = y < 0 and p.eta < 2
    if asymptotic and y < -y0:
        res = _asymptotic(p.eta, p.gamma, y, max_terms)
        if _accepted(res, y, tol):
            return res
        asymptotic = False

    coefs = SeriesCoefficients('ml', p.eta, p.gamma)
    try:
        value, err, n, method = sum_series(coefs, y, tol, max_terms)
        return EvalResult(value, err, n, method)
    except NonConvergenceError as e:
        if asymptotic:
            res = _asymptotic(p.eta, p.gamma, y, max_terms)
            if _accepted(res, y, tol):
                return res
        if y < 0 and p.eta < 1:
            res = _integral(p.eta, p.gamma, y, tol)
            if _accepted(res, y, tol):
                return res
        error(str(e))
        raise


def mittag_leffler_array(p, ys, tol=None, max_terms=None, y0=None):
    """Evaluate :func:`mittag_leffler` elementwise

    Returns
    -------
    values, errors : np.ndarray
        Arrays with the shape of ``ys``.

    """
    ys = np.asarray(ys, dtype=float)
    values = np.empty_like(ys)
    errors = np.empty_like(ys)
    cache = {}
    for idx, y in np.ndenumerate(ys):
        if y not in cache:
            res = mittag_leffler(p, y, tol=tol, max_terms=max_terms, y0=y0)
            cache[y] = (res.value, res.est_abs_error)
        values[idx], errors[idx] = cache[y]
    return values, errors
