import numpy as np

from fracwave.constants import DOUBLE
from fracwave.errors import InvalidOrderError
from fracwave.logger import error
from .mesh import SampledFn
from .power import PowerTerm, caputo_power
from .grid import caputo_grid


#: default tolerances of check_law_of_exponents
POWER_TOL = 1.e-12
GRID_TOL = 1.e-2

EPS = np.finfo(DOUBLE).eps


def check_law_of_exponents(f, alpha, beta, tol=None, t_eval=1.):
    r"""Compare `D^\beta D^\alpha f` with `D^{\alpha+\beta} f`

    On a :class:`.PowerTerm` both sides are exact and compared at
    ``t_eval/2`` and ``t_eval``; differences at the rounding level of the
    Gamma-ratio coefficients are reported as zero. On a
    :class:`.SampledFn` both sides come from :func:`.caputo_grid` and the
    gap is the maximum over all mesh nodes, so it carries the
    discretization error of the grid operator. The smoothness required for
    the law to hold is not verified.

    Parameters
    ----------
    f : :class:`.PowerTerm` or :class:`.SampledFn`
    alpha, beta : float
        The orders, both positive.
    tol : float, optional
        Tolerance of ``holds``; defaults to :data:`POWER_TOL` or
        :data:`GRID_TOL`.
    t_eval : float, optional
        Evaluation time of the power-term path.

    Returns
    -------
    report : dict
        ``{'max_abs_gap': float, 'holds': bool}``

    """
    if not (alpha > 0 and beta > 0):
        msg = error('Orders must be positive, got ({0}, {1})'.format(alpha, beta))
        raise InvalidOrderError(msg)
    if isinstance(f, PowerTerm):
        tol = POWER_TOL if tol is None else tol
        ts = np.array([0.5*t_eval, t_eval])
        lhs = caputo_power(caputo_power(f, alpha), beta)(ts)
        rhs = caputo_power(f, alpha + beta)(ts)
        gaps = np.abs(lhs - rhs)
        roundoff = 64*EPS*np.maximum(np.abs(lhs), np.abs(rhs))
        gap = float(np.max(np.where(gaps <= roundoff, 0., gaps)))
    elif isinstance(f, SampledFn):
        tol = GRID_TOL if tol is None else tol
        lhs = caputo_grid(caputo_grid(f, alpha), beta).values
        rhs = caputo_grid(f, alpha + beta).values
        gap = float(np.max(np.abs(lhs - rhs)))
    else:
        raise TypeError('f must be a PowerTerm or a SampledFn')
    return dict(max_abs_gap=gap, holds=bool(gap <= tol))
