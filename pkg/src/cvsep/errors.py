"""Exception types raised by the toolkit."""


class CvsepError(Exception):
    """Base class for package-specific errors."""


class InvalidInput(CvsepError):
    """A matrix or vector argument is malformed or non-finite."""


class InvalidTransform(CvsepError):
    """A claimed symplectic transformation fails the symplectic check."""


class DegenerateBlock(CvsepError):
    """A covariance block is too close to singular to reduce."""


class InvalidEnsemble(CvsepError):
    """Ensemble weights are negative or do not sum to one."""


class InvalidEnsembleMatrix(CvsepError):
    """An ensemble second-moment matrix is not positive semidefinite."""


class NotPRepresentable(CvsepError):
    """The state admits no Glauber-Sudarshan P representation."""


class BoundaryPRep(CvsepError):
    """The P-representation weight degenerates to a boundary Gaussian."""


class OutOfDomain(CvsepError):
    """Squeezing or bound parameters left their valid domain."""


class InvalidSpec(CvsepError):
    """A state-generator parameter is outside its allowed range."""
