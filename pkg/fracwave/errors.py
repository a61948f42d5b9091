r"""
Exceptions raised by :mod:`fracwave`.

Invalid inputs derive from :class:`ValueError`, numerical failures from
:class:`RuntimeError`, so callers that only know the builtin hierarchy keep
working.

"""


class FracwaveError(Exception):
    pass


class InvalidParamsError(FracwaveError, ValueError):
    pass


class InvalidOrderError(FracwaveError, ValueError):
    pass


class InvalidTimeError(FracwaveError, ValueError):
    pass


class MeshTooShortError(FracwaveError, ValueError):
    pass


class GridMismatchError(FracwaveError, ValueError):
    pass


class MeshMismatchError(FracwaveError, ValueError):
    pass


class NonZeroMeanError(FracwaveError, ValueError):
    pass


class InvalidConfigError(FracwaveError, ValueError):
    pass


class NonConvergenceError(FracwaveError, RuntimeError):
    pass


class HistoryOverflowError(FracwaveError, RuntimeError):
    pass


class InvariantViolationError(FracwaveError, AssertionError):
    pass
