"""Exception hierarchy for the step-scattering simulator."""


class DiracStepError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEnergyError(DiracStepError, ValueError):
    """Energy below the mass shell (e < 1) or non-finite input."""


class DegenerateIncidenceError(DiracStepError, ValueError):
    """Grazing incidence e == 1 (p = 0) where a matching parameter is undefined."""


class ContractViolationError(DiracStepError, ValueError):
    """An operation was called outside its zone of validity."""


class EmptyZoneError(DiracStepError, ValueError):
    """The requested zone is empty for the given step height."""


class MixedZoneError(DiracStepError, ValueError):
    """A packet momentum window spans a zone boundary."""


class StencilError(DiracStepError, ValueError):
    """A finite-difference stencil crosses a zone boundary."""


class ConvergenceError(DiracStepError, RuntimeError):
    """The quadrature doubling check failed to stabilize."""
