r"""
Wright function

.. math::

    W_{\kappa,\eta}(y) = \sum_{r=0}^\infty \frac{y^r}{r!\,\Gamma(\kappa r + \eta)},
    \qquad \kappa > -1

"""
import math
from dataclasses import dataclass

import numpy as np
import mpmath

from fracwave.constants import TOL, MAX_TERMS
from fracwave.errors import InvalidParamsError, NonConvergenceError
from fracwave.logger import error
from .gamma import reciprocal_gamma
from .mittag_leffler import EvalResult
from .series import SeriesCoefficients, sum_series


#: minimum saddle exponent and saddle location for the large-argument branch
SADDLE_EXPONENT = 25.
SADDLE_LOCATION = 10.
#: largest integration range of the real-axis integral
INTEGRAL_RANGE = 1.e5


@dataclass(frozen=True)
class WrightParams:
    """Parameters ``kappa > -1`` and ``eta2`` of `W_{\\kappa,\\eta}`"""
    kappa: float
    eta2: float

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa > -1):
            msg = error('Wright parameter kappa must be > -1, got {0}'.format(
                        self.kappa))
            raise InvalidParamsError(msg)
        if not math.isfinite(self.eta2):
            msg = error('Wright parameter eta2 must be finite, got {0}'.format(
                        self.eta2))
            raise InvalidParamsError(msg)


def _saddle(nu, mu, x):
    # W_{-nu,mu}(-x) ~ s0**(1/2-mu)*exp(-Y)/sqrt(2*pi*(1-nu))
    s0 = (nu*x)**(1./(1. - nu))
    Y = s0*(1. - nu)/nu
    if Y < SADDLE_EXPONENT or s0 < SADDLE_LOCATION:
        return None
    value = math.exp((0.5 - mu)*math.log(s0) - Y)/math.sqrt(2*math.pi*(1. - nu))
    return EvalResult(value, abs(value), 1, 'saddle')


def _integral(nu, mu, x, tol):
    r"""`W_{-\nu,\mu}(-x)` for `0 < \nu < 1`, `\mu \le 1` from

    .. math::

        \frac{1}{\pi}\int_0^\infty r^{-\mu} e^{-r - x r^\nu \cos\pi\nu}
        \sin(x r^\nu \sin\pi\nu + \pi\mu)\,dr

    The working precision covers the cancellation of the oscillating
    integrand, whose peak grows with `x` for `\nu > 1/2`. Returns ``None``
    when the integrand extends beyond :data:`INTEGRAL_RANGE`.

    """
    c = math.cos(math.pi*nu)
    s = math.sin(math.pi*nu)

    def exponent(r):
        return -r - x*c*r**nu

    r_peak = (nu*x*(-c))**(1./(1. - nu)) if c < 0 else 0.
    log_peak = max(0., exponent(r_peak))
    log_cut = math.log(0.01*tol) - 20.
    r_end = max(1., 2.*r_peak)
    while exponent(r_end) > log_cut:
        r_end *= 2.
        if r_end > INTEGRAL_RANGE:
            return None
    digits = (15 + math.log10(r_end) + log_peak/math.log(10.)
              - math.log10(tol))
    dps = 10*int(math.ceil(digits/10.))
    pieces = 8 + int(x*s*r_end**nu/math.pi)
    with mpmath.workdps(dps):
        xm, num, mum = mpmath.mpf(x), mpmath.mpf(nu), mpmath.mpf(mu)
        cm = mpmath.cospi(num)
        sm = mpmath.sinpi(num)

        def integrand(r):
            rn = r**num
            return r**(-mum)*mpmath.exp(-r - xm*cm*rn)*mpmath.sin(xm*sm*rn + mpmath.pi*mum)

        points = mpmath.linspace(0, r_end, pieces + 1)
        value, err = mpmath.quad(integrand, points, error=True)
        value = float(value/mpmath.pi)
        err = float(err) + math.exp(log_cut)
    return EvalResult(value, err, pieces, 'integral')


def wright(p, y, tol=None, max_terms=None):
    r"""Wright function `W_{\kappa,\eta}(y)` for real ``y``

    Terms whose Gamma argument `\kappa r + \eta` is a nonpositive integer
    vanish exactly. For `-1 < \kappa < 0` and far negative arguments the
    function is exponentially small and the leading saddle-point estimate
    is returned when it is below ``tol``. Between the reach of the series
    and of that estimate, with `\eta \le 1`, the real-axis integral of
    :func:`_integral` is used.

    Parameters
    ----------
    p : :class:`.WrightParams`
        The parameters `\kappa` and `\eta`.
    y : float
        The argument.
    tol : float, optional
        Accuracy target, default :data:`fracwave.constants.TOL`.
    max_terms : int, optional
        Term cap, default :data:`fracwave.constants.MAX_TERMS`.

    Returns
    -------
    result : :class:`.EvalResult`

    """
    tol = TOL if tol is None else tol
    max_terms = MAX_TERMS if max_terms is None else max_terms
    y = float(y)
    if not math.isfinite(y):
        msg = error('Wright argument must be finite, got {0}'.format(y))
        raise InvalidParamsError(msg)
    if y == 0:
        return EvalResult(reciprocal_gamma(p.eta2), 0., 1, 'exact')

    if p.kappa < 0 and y < 0:
        res = _saddle(-p.kappa, p.eta2, -y)
        if res is not None and res.est_abs_error <= tol*max(1., res.value):
            return res

    coefs = SeriesCoefficients('wright', p.kappa, p.eta2)
    try:
        value, err, n, method = sum_series(coefs, y, tol, max_terms)
    except NonConvergenceError as e:
        if p.kappa < 0 and y < 0 and p.eta2 <= 1:
            res = _integral(-p.kappa, p.eta2, -y, tol)
            if res is not None and res.est_abs_error <= tol*max(1., abs(res.value)):
                return res
        error(str(e))
        raise
    return EvalResult(value, err, n, method)


def wright_array(p, ys, tol=None, max_terms=None):
    """Evaluate :func:`wright` elementwise

    Returns
    -------
    values, errors : np.ndarray
        Arrays with the shape of ``ys``.

    """
    ys = np.asarray(ys, dtype=float)
    values = np.empty_like(ys)
    errors = np.empty_like(ys)
    for idx, y in np.ndenumerate(ys):
        res = wright(p, y, tol=tol, max_terms=max_terms)
        values[idx] = res.value
        errors[idx] = res.est_abs_error
    return values, errors


def mainardi(nu, x, tol=None):
    r"""M-Wright function `M_\nu(x) = W_{-\nu,1-\nu}(-x)`, `0 < \nu < 1`

    It is the self-similar profile of the fundamental solution of the
    time-fractional diffusion equation of order `2\nu`.

    """
    if not 0 < nu < 1:
        msg = error('M-Wright order must be in (0, 1), got {0}'.format(nu))
        raise InvalidParamsError(msg)
    return wright(WrightParams(-nu, 1. - nu), -x, tol=tol).value
