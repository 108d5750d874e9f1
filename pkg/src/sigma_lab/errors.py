"""Exception hierarchy shared by every module."""


class SigmaLabError(Exception):
    """Base class for all library errors."""


class DomainError(SigmaLabError, ValueError):
    """An argument lies outside the domain of an operation."""


class DimensionError(DomainError):
    pass


class ArityError(DomainError):
    """Polynomials or sets over different moduli / variable counts were combined."""


class HypothesisError(DomainError):
    """A theorem's hypothesis is violated by the supplied parameters."""


class NotApplicable(DomainError):
    """The quantity is undefined for these parameters (e.g. acr for p < 7)."""


class BudgetExceeded(SigmaLabError):
    """An exhaustive sweep would enumerate more instances than allowed."""

    def __init__(self, required, budget, what="instances"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"refusing sweep: needs {required} {what}, budget is {budget} "
            f"(raise --budget or SIGMA_LAB_BUDGET)"
        )


class InternalConsistencyError(SigmaLabError, AssertionError):
    """An identity that must hold by construction did not."""
