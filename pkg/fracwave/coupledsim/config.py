import math
from dataclasses import dataclass, field

import numpy as np

from fracwave.constants import DEFAULT_STEPS
from fracwave.errors import InvalidParamsError, InvalidConfigError
from fracwave.field import GridField
from fracwave.fracops import TimeMesh
from fracwave.logger import error
from fracwave.regions import FracOrderPair, Region, classify


@dataclass(frozen=True)
class FluidParams:
    """Background density ``rho0`` and sound speed ``c_s``"""
    rho0: float = 1.
    c_s: float = 1.

    def __post_init__(self):
        for name in ('rho0', 'c_s'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                msg = error('Fluid parameter {0} must be positive, got {1}'.format(
                            name, value))
                raise InvalidParamsError(msg)

    @property
    def diffusivity(self):
        """`c_s^2`, the diffusivity of the decoupled equations"""
        return self.c_s**2


@dataclass(frozen=True, eq=False)
class CoupledState:
    """Density and velocity perturbations at time ``t``

    ``rho_dot`` and ``w_dot`` are the first time derivatives at ``t``,
    used only when the matching order exceeds 1. ``None`` stands for zero.

    """
    rho_p: GridField
    w_p: GridField
    t: float = 0.
    rho_dot: GridField = field(default=None)
    w_dot: GridField = field(default=None)

    def __post_init__(self):
        self.rho_p.check_same_grid(self.w_p)
        for other in (self.rho_dot, self.w_dot):
            if other is not None:
                self.rho_p.check_same_grid(other)
        if not (math.isfinite(self.t) and self.t >= 0):
            msg = error('State time must be finite and >= 0, got {0}'.format(self.t))
            raise InvalidParamsError(msg)
        for f in (self.rho_p, self.w_p):
            if not np.all(np.isfinite(f.values)):
                msg = error('State fields must be finite')
                raise InvalidParamsError(msg)

    @property
    def grid(self):
        return self.rho_p

    def scaled(self, factor):
        scale = lambda f: None if f is None else f*factor
        return CoupledState(self.rho_p*factor, self.w_p*factor, self.t,
                            scale(self.rho_dot), scale(self.w_dot))


class SimConfig(object):
    r"""Configuration of a coupled simulation

    ================  =========================================================
    Attribute         Description
    ================  =========================================================
    ``orders``        :class:`.FracOrderPair`, orders of the density and
                      velocity equations
    ``fluid``         :class:`.FluidParams`
    ``mesh``          :class:`.TimeMesh`, only ``mesh.dt`` fixes the step;
                      ``mesh.t_end`` is the default final time
    ``grid``          :class:`.GridField` whose box and size define the
                      spatial grid, its values are ignored
    ``history_cap``   ``int`` or ``None``, maximum number of stored time
                      levels in the memory sums
    ``truncate``      ``bool``, when ``True`` a run longer than
                      ``history_cap`` keeps only the last ``history_cap``
                      levels in the memory (fixed window); this reduces
                      accuracy. When ``False`` the run fails instead
    ``corrector``     ``str``, ``'implicit'`` solves the product-trapezoidal
                      corrector exactly per mode, ``'pece'`` uses the
                      Adams-Bashforth-Moulton predictor-corrector
    ``num_cores``     ``int``, threads sharing the Fourier modes
    ================  =========================================================

    """
    __slots__ = ['orders', 'fluid', 'mesh', 'grid', 'history_cap', 'truncate',
                 'corrector', 'num_cores']

    def __init__(self, orders, fluid=None, mesh=None, grid=None, **kwargs):
        self.orders = orders
        self.fluid = FluidParams() if fluid is None else fluid
        self.mesh = TimeMesh.over(1., DEFAULT_STEPS) if mesh is None else mesh
        self.grid = grid
        self.history_cap = None
        self.truncate = False
        self.corrector = 'implicit'
        self.num_cores = 1
        for k, v in kwargs.items():
            if k not in self.__slots__:
                msg = error('Invalid SimConfig attribute: {0}'.format(k))
                raise InvalidConfigError(msg)
            setattr(self, k, v)
        self.validate()

    def validate(self):
        if not isinstance(self.orders, FracOrderPair):
            msg = error('orders must be a FracOrderPair')
            raise InvalidConfigError(msg)
        if classify(self.orders).region == Region.OUTSIDE:
            msg = error('Orders ({0}, {1}) lie outside the regions A, B, C, D'.format(
                        self.orders.alpha, self.orders.beta))
            raise InvalidConfigError(msg)
        if not isinstance(self.grid, GridField):
            msg = error('grid must be a GridField')
            raise InvalidConfigError(msg)
        if self.history_cap is not None and (int(self.history_cap) != self.history_cap
                                             or self.history_cap < 2):
            msg = error('history_cap must be an integer >= 2, got {0}'.format(
                        self.history_cap))
            raise InvalidConfigError(msg)
        if self.corrector not in ('implicit', 'pece'):
            msg = error('Invalid corrector: {0}'.format(self.corrector))
            raise InvalidConfigError(msg)
        if int(self.num_cores) != self.num_cores or self.num_cores < 1:
            msg = error('num_cores must be a positive integer, got {0}'.format(
                        self.num_cores))
            raise InvalidConfigError(msg)

    @classmethod
    def over(cls, alpha, beta, half_width, n, t_end, n_steps, rho0=1., c_s=1.,
             **kwargs):
        """Shortcut building every member from plain numbers"""
        return cls(FracOrderPair(alpha, beta), FluidParams(rho0, c_s),
                   TimeMesh.over(t_end, n_steps), GridField.centered(half_width, n),
                   **kwargs)

    def check_state(self, state):
        self.grid.check_same_grid(state.rho_p)
