r"""
Periodic spatial fields

A :class:`GridField` samples a real field at the ``n`` nodes
`z_k = z_{min} + k\,\Delta z`, `\Delta z = (z_{max} - z_{min})/n`, with
`z_{max}` identified with `z_{min}`. Spatial derivatives are spectral.

"""
import math
from dataclasses import dataclass

import numpy as np

from fracwave.constants import DOUBLE
from fracwave.errors import InvalidParamsError, GridMismatchError, NonZeroMeanError
from fracwave.logger import error


@dataclass(frozen=True, eq=False)
class GridField:
    z_min: float
    z_max: float
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=DOUBLE)
        n = values.shape[0] if values.ndim == 1 else 0
        if not (math.isfinite(self.z_min) and math.isfinite(self.z_max)
                and self.z_max > self.z_min):
            msg = error('GridField needs z_max > z_min, got [{0}, {1}]'.format(
                        self.z_min, self.z_max))
            raise InvalidParamsError(msg)
        if n < 8 or n & (n - 1):
            msg = error('GridField needs a power-of-two number >= 8 of samples, '
                        'got shape {0}'.format(values.shape))
            raise InvalidParamsError(msg)
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_function(cls, func, z_min, z_max, n):
        z = z_min + (z_max - z_min)*np.arange(n)/n
        return cls(z_min, z_max, func(z))

    @classmethod
    def centered(cls, half_width, n, func=None):
        """Box ``[-half_width, half_width)``, zero field by default"""
        if func is None:
            return cls(-half_width, half_width, np.zeros(n))
        return cls.from_function(func, -half_width, half_width, n)

    @property
    def n(self):
        return self.values.shape[0]

    @property
    def length(self):
        return self.z_max - self.z_min

    @property
    def dz(self):
        return self.length/self.n

    @property
    def z(self):
        return self.z_min + self.dz*np.arange(self.n)

    @property
    def wavenumbers(self):
        """Angular wavenumbers of :func:`numpy.fft.rfft`"""
        return 2*np.pi*np.fft.rfftfreq(self.n, d=self.dz)

    def with_values(self, values):
        return GridField(self.z_min, self.z_max, values)

    def same_grid(self, other):
        return (self.n == other.n and self.z_min == other.z_min
                and self.z_max == other.z_max)

    def check_same_grid(self, other):
        if not self.same_grid(other):
            msg = error('Fields live on different grids: [{0}, {1}]/{2} and '
                        '[{3}, {4}]/{5}'.format(self.z_min, self.z_max, self.n,
                        other.z_min, other.z_max, other.n))
            raise GridMismatchError(msg)

    def mean(self):
        return float(np.mean(self.values))

    def spectrum(self):
        return np.fft.rfft(self.values)

    def from_spectrum(self, spectrum):
        return self.with_values(np.fft.irfft(spectrum, n=self.n))

    def derivative(self):
        """Spectral `\\partial_z`; the Nyquist mode is dropped"""
        return self.from_spectrum(derivative_spectrum(self.spectrum(), self.wavenumbers, self.n))

    def antiderivative(self, tol=1.e-12):
        """Zero-mean periodic antiderivative

        Raises
        ------
        NonZeroMeanError
            If the field has a nonzero mean, which admits no periodic
            antiderivative.

        """
        scale = max(1., float(np.max(np.abs(self.values))))
        if abs(self.mean()) > tol*scale:
            msg = error('Field mean {0:g} is not zero, no periodic antiderivative'.format(
                        self.mean()))
            raise NonZeroMeanError(msg)
        spec = self.spectrum()
        k = self.wavenumbers
        out = np.zeros_like(spec)
        out[1:] = spec[1:]/(1j*k[1:])
        if self.n % 2 == 0:
            out[-1] = 0.
        return self.from_spectrum(out)

    def __add__(self, other):
        self.check_same_grid(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other):
        self.check_same_grid(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar):
        return self.with_values(self.values*scalar)

    __rmul__ = __mul__

    def max_abs(self):
        return float(np.max(np.abs(self.values)))


def derivative_spectrum(spectrum, wavenumbers, n):
    """Multiply rfft coefficients (last axis) by ``1j*k``, zeroing Nyquist"""
    out = 1j*wavenumbers*spectrum
    if n % 2 == 0:
        out[..., -1] = 0.
    return out


def discrete_delta(half_width, n, z0=0.):
    """Kronecker delta scaled by ``1/dz`` at the node closest to ``z0``"""
    field = GridField.centered(half_width, n)
    values = np.zeros(n)
    values[int(np.argmin(np.abs(field.z - z0)))] = 1./field.dz
    return field.with_values(values)
