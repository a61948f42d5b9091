r"""
Power-series summation shared by the Mittag-Leffler and Wright functions

Both functions are entire series `\sum_r a_r y^r` whose coefficients are
reciprocal Gamma values. The number of terms is fixed from a smooth bound of
`|a_r y^r|`, the sum is formed in double precision with :func:`math.fsum` and
repeated with :mod:`mpmath` when the rounding estimate is above the
tolerance (large cancelling terms for negative arguments).

"""
import math
from functools import lru_cache

import numpy as np
import mpmath
from scipy.special import gammaln

from fracwave.constants import DOUBLE
from fracwave.errors import NonConvergenceError
from fracwave.logger import debug
from .gamma import log_abs_reciprocal_gamma, log_reciprocal_gamma_bound


EPS = float(np.finfo(DOUBLE).eps)
LOG_MAX = 690.
LN10 = math.log(10.)


@lru_cache(maxsize=32)
def _mp_coefficients(kind, p1, p2, dps, n):
    with mpmath.workdps(dps):
        a = mpmath.mpf(p1)
        b = mpmath.mpf(p2)
        if kind == 'ml':
            return tuple(mpmath.rgamma(a*r + b) for r in range(n))
        return tuple(mpmath.rgamma(a*r + b)*mpmath.rgamma(r + 1)
                     for r in range(n))


class SeriesCoefficients(object):
    r"""Coefficients of the Mittag-Leffler or Wright series

    ``kind='ml'`` gives `a_r = 1/\Gamma(p_1 r + p_2)` and ``kind='wright'``
    gives `a_r = 1/(r!\,\Gamma(p_1 r + p_2))`.

    """
    __slots__ = ['kind', 'p1', 'p2']

    def __init__(self, kind, p1, p2):
        if kind not in ('ml', 'wright'):
            raise ValueError('Invalid series kind: {0}'.format(kind))
        self.kind = kind
        self.p1 = float(p1)
        self.p2 = float(p2)

    def log_coefficients(self, r):
        log_abs, sign = log_abs_reciprocal_gamma(self.p1*r + self.p2)
        if self.kind == 'wright':
            log_abs = log_abs - gammaln(r + 1.)
        return log_abs, sign

    def log_bound(self, r):
        bound = log_reciprocal_gamma_bound(self.p1*r + self.p2)
        if self.kind == 'wright':
            bound = bound - gammaln(r + 1.)
        return bound

    def mp_coefficients(self, dps, n):
        return _mp_coefficients(self.kind, self.p1, self.p2, dps, n)


def _truncation(coefs, y, tol, max_terms):
    """Index ``k`` of the last term kept and the log of the tail bound

    The tail after ``k`` is bounded by a geometric series: the bound ratio
    `\rho` of the first dropped terms must be below 1 and nonincreasing
    over the rest of the window.

    """
    if max_terms < 2:
        raise NonConvergenceError('Series needs at least 2 terms, got a cap of {0}'.format(
                                  max_terms))
    logy = math.log(abs(y))
    n = min(64, max_terms)
    log_tol = math.log(0.1*tol)
    while True:
        r = np.arange(n + 1, dtype=float)
        bound = coefs.log_bound(r) + r*logy
        log_abs, sign = coefs.log_coefficients(r)
        if y < 0:
            sign = sign*np.where(r % 2 == 0, 1., -1.)
        with np.errstate(over='ignore', under='ignore'):
            terms = sign*np.exp(np.minimum(log_abs + r*logy, LOG_MAX))
        log_target = np.full(n - 1, log_tol)
        if y > 0 and np.all(sign >= 0):
            partial = np.maximum(1., np.cumsum(terms))
            log_target = log_target + np.log(partial[:n-1])
        # log_ratio[k] compares terms k + 2 and k + 1
        log_ratio = np.diff(bound)[1:]
        later_max = np.maximum.accumulate(log_ratio[::-1])[::-1]
        ok = (log_ratio < 0) & (later_max <= log_ratio)
        with np.errstate(divide='ignore', invalid='ignore'):
            log_tail = bound[1:n] - np.log1p(-np.exp(np.minimum(log_ratio, 0.)))
        stop = np.nonzero(ok & (log_tail <= log_target))[0]
        if stop.size > 0:
            k = int(stop[0])
            return (k, float(log_tail[k]), r[:k+1], bound[:k+1], log_abs[:k+1],
                    terms[:k+1])
        if n >= max_terms:
            raise NonConvergenceError(
                'Series did not converge within {0} terms (y={1})'.format(
                max_terms, y))
        n = min(4*n, max_terms)


def sum_series(coefs, y, tol, max_terms):
    """Sum the series at ``y != 0``

    Returns
    -------
    out : tuple
        ``(value, est_abs_error, terms_used, method)`` where ``method`` is
        ``'series'`` (double precision) or ``'series-mp'``.

    Raises
    ------
    NonConvergenceError
        When the truncation bound is not met within ``max_terms`` terms or
        the sum overflows.

    """
    k, log_tail, r, bound, log_abs, terms = _truncation(coefs, y, tol, max_terms)
    logy = math.log(abs(y))
    tail = math.exp(log_tail)
    max_log = float(np.max(bound))

    if max_log < LOG_MAX:
        value = math.fsum(terms)
        finite = np.where(np.isfinite(log_abs), log_abs, 0.)
        rel = EPS*(3. + np.abs(r*logy) + np.abs(finite))
        err = float(np.sum(np.abs(terms)*rel)) + tail
        if err <= tol*max(1., abs(value)):
            return value, err, k + 1, 'series'

    digits = 20 + int(math.ceil(max(0., max_log)/LN10))
    dps = 10*int(math.ceil(digits/10.))
    n_coef = min(128*int(math.ceil((k + 1)/128.)), max_terms)
    debug('Re-summing {0} terms at {1} digits (y={2})'.format(k + 1, dps, y))
    coefs_mp = coefs.mp_coefficients(dps, n_coef)
    with mpmath.workdps(dps):
        value = float(mpmath.polyval(coefs_mp[k::-1], mpmath.mpf(y)))
    if not math.isfinite(value):
        raise NonConvergenceError(
            'Series value overflows double precision (y={0})'.format(y))
    err = tail + math.exp(max_log + math.log(k + 1.) + (2 - dps)*LN10)
    return value, err, k + 1, 'series-mp'
