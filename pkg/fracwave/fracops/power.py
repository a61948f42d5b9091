r"""
Exact fractional calculus on power functions `c\,t^e`, `e > -1`

"""
import math
from dataclasses import dataclass

import numpy as np

from fracwave.errors import InvalidOrderError, InvalidParamsError
from fracwave.logger import error
from fracwave.specfun import reciprocal_gamma


@dataclass(frozen=True)
class PowerTerm:
    """The power function ``coeff*t**exponent``, ``exponent > -1``"""
    coeff: float
    exponent: float

    def __post_init__(self):
        if not (math.isfinite(self.coeff) and math.isfinite(self.exponent)):
            msg = error('PowerTerm must be finite, got {0}*t**{1}'.format(
                        self.coeff, self.exponent))
            raise InvalidParamsError(msg)
        if self.exponent <= -1 and self.coeff != 0:
            msg = error('PowerTerm exponent must be > -1, got {0}'.format(
                        self.exponent))
            raise InvalidParamsError(msg)

    @property
    def is_zero(self):
        return self.coeff == 0

    def __call__(self, t):
        if self.is_zero:
            return np.zeros_like(np.asarray(t, dtype=float))
        return self.coeff*np.power(t, self.exponent)


ZERO = PowerTerm(0., 0.)


def _is_integer(x):
    return float(x).is_integer()


def caputo_power(term, alpha):
    r"""Caputo derivative of a power term

    .. math::

        D^\alpha t^e = \frac{\Gamma(e+1)}{\Gamma(e-\alpha+1)} t^{e-\alpha}

    A monomial `t^k` with integer `0 \le k < \lceil\alpha\rceil` is
    annihilated, since the Caputo derivative differentiates `\lceil\alpha
    \rceil` times first.

    Parameters
    ----------
    term : :class:`.PowerTerm`
    alpha : float
        Order, ``alpha > 0``.

    Returns
    -------
    out : :class:`.PowerTerm`
        :data:`ZERO` when the derivative vanishes identically.

    """
    if not alpha > 0:
        msg = error('Caputo order must be positive, got {0}'.format(alpha))
        raise InvalidOrderError(msg)
    if term.is_zero:
        return ZERO
    e = term.exponent
    if _is_integer(e) and 0 <= e < math.ceil(alpha):
        return ZERO
    factor = math.gamma(e + 1)*reciprocal_gamma(e - alpha + 1)
    if factor == 0:
        return ZERO
    exponent = e - alpha
    if exponent <= -1:
        msg = error('D^{0} t^{1} is not integrable at the origin'.format(alpha, e))
        raise InvalidOrderError(msg)
    return PowerTerm(term.coeff*factor, exponent)


def rl_integral_power(term, alpha):
    r"""Riemann-Liouville integral of a power term

    .. math::

        J^\alpha t^e = \frac{\Gamma(e+1)}{\Gamma(e+\alpha+1)} t^{e+\alpha}

    ``alpha = 0`` is the identity.

    """
    if not alpha >= 0:
        msg = error('Integral order must be nonnegative, got {0}'.format(alpha))
        raise InvalidOrderError(msg)
    if alpha == 0 or term.is_zero:
        return term
    e = term.exponent
    factor = math.gamma(e + 1)*reciprocal_gamma(e + alpha + 1)
    return PowerTerm(term.coeff*factor, e + alpha)


def strip_initial_part(term, alpha):
    r"""`f - \sum_{k<m} f^{(k)}(0) t^k/k!` for a single power term,
    `m = \lceil\alpha\rceil`

    This is what `J^\alpha D^\alpha` returns.

    """
    e = term.exponent
    if term.is_zero or (_is_integer(e) and 0 <= e < math.ceil(alpha)):
        return ZERO
    return term
