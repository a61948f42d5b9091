r"""
=================================================
Fractional Wave Propagation (:mod:`fracwave`)
=================================================

.. currentmodule:: fracwave

Python-based toolkit for the time-fractional acoustics of a 1D compressible
fluid.

The fracwave package contains:

- Mittag-Leffler and Wright special functions
- Caputo derivatives and Riemann-Liouville integrals, exact on power
  functions and discretized on uniform time meshes
- the classification of the order plane into the regions where the law of
  exponents holds
- analytic solutions of fractional diffusion-wave and sequential Cauchy
  problems on periodic boxes
- a spectral simulator of the coupled density/velocity system

"""
from fracwave.version import __version__
