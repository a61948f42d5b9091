r"""
==================================================
Special Functions (:mod:`fracwave.specfun`)
==================================================

.. currentmodule:: fracwave.specfun

Mittag-Leffler and Wright functions evaluated to a controlled accuracy.
Every evaluation returns an :class:`.EvalResult` carrying its own error
estimate.

.. autoclass:: MLParams

.. autoclass:: WrightParams

.. autoclass:: EvalResult

.. autofunction:: mittag_leffler

.. autofunction:: mittag_leffler_array

.. autofunction:: wright

.. autofunction:: wright_array

.. autofunction:: mainardi

.. autofunction:: reciprocal_gamma

"""
from .gamma import reciprocal_gamma
from .mittag_leffler import MLParams, EvalResult, mittag_leffler, mittag_leffler_array
from .wright import WrightParams, wright, wright_array, mainardi
