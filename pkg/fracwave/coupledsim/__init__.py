r"""
==================================================
Coupled Simulation (:mod:`fracwave.coupledsim`)
==================================================

.. currentmodule:: fracwave.coupledsim

Direct time integration of the coupled density/velocity system with
fractional time derivatives, independent of the analytic solvers of
:mod:`fracwave.greens`.

.. autoclass:: FluidParams

.. autoclass:: CoupledState

.. autoclass:: SimConfig

.. autoclass:: History

.. autoclass:: CoupledSimulator
    :members:

.. autofunction:: step_to

.. autofunction:: exact_modal_solution

.. autofunction:: recover_velocity

.. autofunction:: residual_report

"""
from .config import FluidParams, CoupledState, SimConfig
from .simulator import History, CoupledSimulator, step_to, exact_modal_solution
from .postprocess import recover_velocity, residual_report
