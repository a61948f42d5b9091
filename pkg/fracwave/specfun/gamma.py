import math

import numpy as np
from scipy.special import rgamma, gammaln, gammasgn


def is_pole(x):
    """True where ``x`` is a nonpositive integer (a pole of the Gamma
    function)."""
    x = np.asarray(x, dtype=float)
    return (x <= 0) & (x == np.floor(x))


def reciprocal_gamma(x):
    r"""Reciprocal Gamma function `1/\Gamma(x)`

    Parameters
    ----------
    x : float
        Finite real argument.

    Returns
    -------
    rg : float
        The value of `1/\Gamma(x)`, exactly ``0.`` at the nonpositive
        integers.

    """
    x = float(x)
    if is_pole(x):
        return 0.
    return float(rgamma(x))


def log_abs_reciprocal_gamma(x):
    """Return ``(log|1/Gamma(x)|, sign(1/Gamma(x)))`` elementwise

    At the poles the logarithm is ``-inf`` and the sign is ``0``.

    """
    x = np.asarray(x, dtype=float)
    poles = is_pole(x)
    safe = np.where(poles, 0.5, x)
    log_abs = np.where(poles, -np.inf, -gammaln(safe))
    sign = np.where(poles, 0., gammasgn(safe))
    return log_abs, sign


def log_reciprocal_gamma_bound(x):
    r"""Smooth upper bound of `\log|1/\Gamma(x)|`

    Uses the reflection formula, `|1/\Gamma(x)| \le \Gamma(1-x)/\pi` for
    `x \le 0`, so that the bound stays finite across the poles.

    """
    x = np.asarray(x, dtype=float)
    positive = x > 0
    return np.where(positive, -gammaln(np.where(positive, x, 1.)),
                    gammaln(np.where(positive, 1., 1. - x)) - math.log(math.pi))
