r"""
==================================================
Green's Functions (:mod:`fracwave.greens`)
==================================================

.. currentmodule:: fracwave.greens

Fundamental solution of the time-fractional diffusion equation and the
solver of sequential-derivative Cauchy problems on a periodic box.

.. autofunction:: fundamental_solution

.. autofunction:: default_half_width

.. autofunction:: normalization

.. autoclass:: SeqCauchyProblem

.. autoclass:: AuxiliaryData

.. autofunction:: solve_sequential

.. autofunction:: build_auxiliary

.. autofunction:: solve_auxiliary

.. autofunction:: solve_sequential_wright

.. autofunction:: fractional_diffusion

.. autofunction:: coupling_residuals

"""
from .fundamental import (fundamental_solution, default_half_width,
                          diffusion_length, normalization)
from .sequential import (SeqCauchyProblem, AuxiliaryData, solve_sequential,
                         build_auxiliary, solve_auxiliary, solve_sequential_wright,
                         fractional_diffusion, coupling_residuals)
