r"""
Regions of the `(\alpha, \beta)` order plane

=========  ==========================================================
Region     Constraint
=========  ==========================================================
``A``      `0 < \alpha < 1`, `0 < \beta \le 1 - \alpha`
``D``      `1 < \alpha < 2`, `0 < \beta \le 2 - \alpha`
``C``      `1 < \beta < 2`, `0 < \alpha \le 2 - \beta`
``B``      `0 < \alpha \le 1`, `0 < \beta \le 1`, `\alpha + \beta > 1`
``Outside``  anything else
=========  ==========================================================

In region A the law of exponents holds for both equations of the coupled
system, each field obeys a fractional diffusion equation of order
`\gamma = \alpha + \beta`. In D it holds for the density only and in C for
the velocity only. In B neither field decouples and the problem is a
sequential one.

"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from fracwave.errors import InvalidOrderError
from fracwave.logger import error


class Region(str, Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'
    OUTSIDE = 'Outside'


class Equation(str, Enum):
    FRACTIONAL_DIFFUSION = 'FractionalDiffusion'
    SEQUENTIAL = 'Sequential'


class Regime(str, Enum):
    SUBDIFFUSIVE = 'Subdiffusive'
    DIFFUSIVE = 'Diffusive'
    SUPERDIFFUSIVE = 'Superdiffusive'
    WAVE = 'Wave'
    OUTSIDE = 'Outside'


@dataclass(frozen=True)
class FracOrderPair:
    """Orders ``alpha`` (density equation) and ``beta`` (velocity equation)"""
    alpha: float
    beta: float

    def __post_init__(self):
        for name in ('alpha', 'beta'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                msg = error('Order {0} must be positive and finite, got {1}'.format(
                            name, value))
                raise InvalidOrderError(msg)

    @property
    def gamma(self):
        return self.alpha + self.beta

    def swapped(self):
        return FracOrderPair(self.beta, self.alpha)


@dataclass(frozen=True)
class RegionReport:
    region: Region
    gamma: float
    density_eq: Equation
    velocity_eq: Equation
    regime: Regime


_EQUATIONS = {
    Region.A: (Equation.FRACTIONAL_DIFFUSION, Equation.FRACTIONAL_DIFFUSION),
    Region.D: (Equation.FRACTIONAL_DIFFUSION, Equation.SEQUENTIAL),
    Region.C: (Equation.SEQUENTIAL, Equation.FRACTIONAL_DIFFUSION),
    Region.B: (Equation.SEQUENTIAL, Equation.SEQUENTIAL),
    Region.OUTSIDE: (Equation.SEQUENTIAL, Equation.SEQUENTIAL),
}


def _region(alpha, beta):
    # the sum is computed once so that swapping the orders is exact
    gamma = alpha + beta
    if alpha < 1 and beta < 1 and gamma <= 1:
        return Region.A
    if 1 < alpha < 2 and gamma <= 2:
        return Region.D
    if 1 < beta < 2 and gamma <= 2:
        return Region.C
    if alpha <= 1 and beta <= 1 and gamma > 1:
        return Region.B
    return Region.OUTSIDE


def regime(gamma):
    """Diffusion regime of the order ``gamma``"""
    if gamma < 1:
        return Regime.SUBDIFFUSIVE
    if gamma == 1:
        return Regime.DIFFUSIVE
    if gamma < 2:
        return Regime.SUPERDIFFUSIVE
    if gamma == 2:
        return Regime.WAVE
    return Regime.OUTSIDE


def classify(p):
    r"""Classify an order pair

    Parameters
    ----------
    p : :class:`.FracOrderPair`

    Returns
    -------
    report : :class:`.RegionReport`

    Examples
    --------
    >>> classify(FracOrderPair(0.5, 0.3)).region
    <Region.A: 'A'>

    """
    region = _region(p.alpha, p.beta)
    density_eq, velocity_eq = _EQUATIONS[region]
    return RegionReport(region, p.gamma, density_eq, velocity_eq,
                        regime(p.gamma))


def boundary_pairs(gamma, n):
    r"""``n`` pairs evenly spaced on the line `\alpha + \beta = \gamma`
    inside `(0, 2)^2`

    The segment is split in ``n + 1`` equal parts and its interior
    division points are returned, ordered by increasing `\alpha`.

    """
    if not 0 < gamma <= 2:
        msg = error('gamma must be in (0, 2], got {0}'.format(gamma))
        raise InvalidOrderError(msg)
    if int(n) != n or n < 1:
        msg = error('n must be a positive integer, got {0}'.format(n))
        raise InvalidOrderError(msg)
    lo = max(0., gamma - 2.)
    hi = min(2., gamma)
    alphas = lo + (hi - lo)*np.arange(1, n + 1)/(n + 1.)
    return [FracOrderPair(float(a), float(gamma - a)) for a in alphas]


def region_raster(resolution):
    """Region labels on the nodes ``2*i/resolution``, ``i = 1, ...,
    resolution - 1``, along both axes

    Returns
    -------
    rows : list of tuple
        ``(alpha, beta, label)`` with ``alpha`` varying slowest.

    """
    if int(resolution) != resolution or resolution < 2:
        msg = error('resolution must be an integer >= 2, got {0}'.format(resolution))
        raise InvalidOrderError(msg)
    axis = 2.*np.arange(1, resolution)/resolution
    return [(float(a), float(b), _region(a, b).value)
            for a in axis for b in axis]


def region_masks(alpha, beta):
    """Membership of each region, one boolean array per label

    Every region is tested with its own inequalities, without the
    precedence used by :func:`classify`, so that the masks can be checked
    for mutual exclusion.

    """
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    gamma = alpha + beta
    positive = (alpha > 0) & (beta > 0)
    masks = {
        Region.A: positive & (alpha < 1) & (beta < 1) & (gamma <= 1),
        Region.D: positive & (alpha > 1) & (alpha < 2) & (gamma <= 2),
        Region.C: positive & (beta > 1) & (beta < 2) & (gamma <= 2),
        Region.B: positive & (alpha <= 1) & (beta <= 1) & (gamma > 1),
    }
    inside = masks[Region.A] | masks[Region.B] | masks[Region.C] | masks[Region.D]
    masks[Region.OUTSIDE] = ~inside
    return masks
