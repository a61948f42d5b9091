import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.signal import fftconvolve

from fracwave.constants import DOUBLE
from fracwave.errors import InvalidParamsError, MeshMismatchError
from fracwave.logger import error


@lru_cache(maxsize=64)
def _l1_weights(alpha, n):
    k = np.arange(n + 1, dtype=DOUBLE)
    p = k**(1. - alpha)
    return np.diff(p)


@lru_cache(maxsize=64)
def _trapezoid_weights(alpha, n):
    k = np.arange(n + 1, dtype=DOUBLE)
    w = np.ones(n + 1, dtype=DOUBLE)
    a1 = alpha + 1.
    w[1:] = (k[1:] + 1)**a1 - 2*k[1:]**a1 + (k[1:] - 1)**a1
    return w


@lru_cache(maxsize=64)
def _trapezoid_start_weights(alpha, n):
    m = np.arange(n + 1, dtype=DOUBLE)
    a = np.zeros(n + 1, dtype=DOUBLE)
    a[1:] = (m[1:] - 1)**(alpha + 1) - (m[1:] - 1 - alpha)*m[1:]**alpha
    return a


@lru_cache(maxsize=64)
def _rectangle_weights(alpha, n):
    k = np.arange(n + 1, dtype=DOUBLE)
    return np.diff(k**alpha)


def _readonly(a):
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TimeMesh:
    r"""Uniform time mesh `t_k = k\,\Delta t`, `k = 0, \dots, n_{steps}`

    The mesh also hands out the memory weights of the convolution
    quadratures used on it. All weight arrays are cached and read-only.

    """
    dt: float
    n_steps: int

    def __post_init__(self):
        if not (math.isfinite(self.dt) and self.dt > 0):
            msg = error('TimeMesh dt must be positive, got {0}'.format(self.dt))
            raise InvalidParamsError(msg)
        if int(self.n_steps) != self.n_steps or self.n_steps < 1:
            msg = error('TimeMesh n_steps must be a positive integer, got {0}'.format(
                        self.n_steps))
            raise InvalidParamsError(msg)
        object.__setattr__(self, 'n_steps', int(self.n_steps))

    @classmethod
    def over(cls, t_end, n_steps):
        return cls(float(t_end)/n_steps, n_steps)

    @property
    def nodes(self):
        return self.dt*np.arange(self.n_steps + 1, dtype=DOUBLE)

    @property
    def t_end(self):
        return self.dt*self.n_steps

    def l1_weights(self, alpha):
        r"""`b_k = (k+1)^{1-\alpha} - k^{1-\alpha}`, `k = 0, \dots, N-1`"""
        return _readonly(_l1_weights(float(alpha), self.n_steps))

    def trapezoid_weights(self, alpha):
        r"""Product-trapezoidal weights `w_0 = 1`,
        `w_k = (k+1)^{\alpha+1} - 2k^{\alpha+1} + (k-1)^{\alpha+1}`"""
        return _readonly(_trapezoid_weights(float(alpha), self.n_steps))

    def trapezoid_start_weights(self, alpha):
        r"""Weight of the initial node for target node `m`,
        `(m-1)^{\alpha+1} - (m-1-\alpha) m^\alpha`"""
        return _readonly(_trapezoid_start_weights(float(alpha), self.n_steps))

    def rectangle_weights(self, alpha):
        r"""Product-rectangle weights `(k+1)^\alpha - k^\alpha`"""
        return _readonly(_rectangle_weights(float(alpha), self.n_steps))


def history_convolve(weights, x):
    r"""Discrete memory sum `y_n = \sum_{k=0}^{n} w_k x_{n-k}` along axis 0

    ``x`` may carry trailing (spatial) dimensions.

    """
    x = np.asarray(x)
    n = x.shape[0]
    w = np.asarray(weights)[:n].reshape((-1,) + (1,)*(x.ndim - 1))
    return fftconvolve(w, x, mode='full', axes=0)[:n]


@dataclass(frozen=True, eq=False)
class SampledFn:
    r"""Function sampled on a :class:`.TimeMesh`

    ``values`` has the time along axis 0 and may carry trailing dimensions
    (one column per spatial point, for instance). ``init_derivs[k]`` holds
    `f^{(k)}(0)` when supplied; missing derivatives are estimated by
    one-sided second-order finite differences.

    """
    t_mesh: TimeMesh
    values: np.ndarray
    init_derivs: np.ndarray = field(default=None)

    def __post_init__(self):
        values = np.array(self.values, dtype=DOUBLE)
        if values.ndim == 0 or values.shape[0] != self.t_mesh.n_steps + 1:
            msg = error('SampledFn expects {0} values along axis 0, got shape {1}'.format(
                        self.t_mesh.n_steps + 1, values.shape))
            raise MeshMismatchError(msg)
        object.__setattr__(self, 'values', _readonly(values))
        if self.init_derivs is not None:
            init = np.array(self.init_derivs, dtype=DOUBLE)
            if init.ndim == 0:
                init = init.reshape(1)
            object.__setattr__(self, 'init_derivs', _readonly(init))

    @classmethod
    def from_function(cls, func, t_mesh, init_derivs=None):
        return cls(t_mesh, func(t_mesh.nodes), init_derivs)

    @property
    def t(self):
        return self.t_mesh.nodes

    def derivative_at_zero(self, k):
        """Value of `f^{(k)}(0)`, ``k`` in ``0, 1``"""
        if k == 0:
            return self.values[0]
        if self.init_derivs is not None and len(self.init_derivs) > k:
            return self.init_derivs[k]
        if k != 1:
            raise NotImplementedError('only the first derivative is estimated')
        f = self.values
        if f.shape[0] < 3:
            return (f[1] - f[0])/self.t_mesh.dt
        return (-3*f[0] + 4*f[1] - f[2])/(2*self.t_mesh.dt)

    def with_values(self, values, init_derivs=None):
        return SampledFn(self.t_mesh, values, init_derivs)
