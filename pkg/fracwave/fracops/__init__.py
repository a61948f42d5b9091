r"""
===================================================
Fractional Operators (:mod:`fracwave.fracops`)
===================================================

.. currentmodule:: fracwave.fracops

Caputo derivatives `D^\alpha` and Riemann-Liouville integrals `J^\alpha`,
exact on power functions and discretized on uniform time meshes.

.. autoclass:: TimeMesh
    :members:

.. autoclass:: SampledFn
    :members:

.. autoclass:: PowerTerm

.. autofunction:: caputo_power

.. autofunction:: rl_integral_power

.. autofunction:: strip_initial_part

.. autofunction:: caputo_grid

.. autofunction:: rl_integral_grid

.. autofunction:: check_law_of_exponents

.. autofunction:: history_convolve

"""
from .mesh import TimeMesh, SampledFn, history_convolve
from .power import PowerTerm, ZERO, caputo_power, rl_integral_power, strip_initial_part
from .grid import caputo_grid, rl_integral_grid
from .exponents import check_law_of_exponents
