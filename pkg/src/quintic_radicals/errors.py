"""Exception hierarchy shared by the solvers and the CLI."""


class RootSolverError(Exception):
    """Base class for every solver failure."""


class ZeroPolynomial(RootSolverError, ValueError):
    """All coefficients are zero, so there is nothing to normalize or solve."""


class DegenerateError(RootSolverError):
    """A closed-form path hit a vanishing denominator or radical."""


class DegenerateCubic(DegenerateError):
    pass


class DegenerateQuartic(DegenerateError):
    pass


class DegenerateResolvent(DegenerateError):
    pass


class SelectionFailed(RootSolverError):
    pass


class NoConvergence(RootSolverError):
    pass


class ProviderFailed(RootSolverError):
    pass
