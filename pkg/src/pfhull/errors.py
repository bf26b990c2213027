"""Exception types shared across the package."""


class PfhullError(Exception):
    """Base class."""


class ContractError(PfhullError, ValueError):
    """An argument violates an operation's precondition."""


class DegenerateDimensionError(ContractError):
    """The requested construction needs n >= 2 (P_1 is a single point)."""


class DomainError(ContractError):
    """A value lies outside the domain an operation is defined on."""


class ResourceBoundError(PfhullError):
    """A scan or enumeration would exceed the configured work budget."""

    def __init__(self, method: str, needed: int, budget: int,
                 unit: str = "box points"):
        self.method = method
        self.needed = needed
        self.budget = budget
        self.unit = unit
        super().__init__(f"{method}: {unit} {needed} exceeds limit {budget}")


class IntegrityError(PfhullError, ArithmeticError):
    """An internal exactness check failed; this indicates a bug."""
