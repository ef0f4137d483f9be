"""Exception types shared across the package."""


class LambdaProbeError(Exception):
    """Base class for all errors raised by this package."""


class SingularSystem(LambdaProbeError):
    """The steady-state linear system is numerically singular.

    Raised when the drive parameters leave a degenerate dark manifold, so
    the stationary density matrix is not unique (for example all drives and
    the pump switched off at once).
    """


class NonPhysicalState(LambdaProbeError):
    """Time evolution drifted off the physical manifold (trace no longer 1).

    Signals an integration step too large for the fastest rate in the
    generator.
    """


class DomainError(LambdaProbeError):
    """A closed-form expression was requested outside its derivation regime."""


class DerivativeUnstable(LambdaProbeError):
    """The finite-difference cross-check failed.

    The 3-point and 5-point dispersion-slope estimates disagree, which means
    the step size is unsuited to the local feature scale.
    """
