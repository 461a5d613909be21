"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of the operation."""


class DegenerateMatrixError(ValueError):
    """A matrix that must be invertible (or positive definite) is not."""


class PreconditionError(ValueError):
    """An operation was called on input that violates its precondition."""


class UnknownTransformError(KeyError):
    """Transform name not present in the catalog."""

    def __init__(self, name, available):
        self.name = name
        self.available = tuple(available)
        super().__init__(name)

    def __str__(self):
        return f"unknown transform {self.name!r}; available: {', '.join(self.available)}"


class InfeasibleSequenceError(RuntimeError):
    """No nonzero candidate is orthogonal to every row already placed."""

    def __init__(self, order, row):
        self.order = tuple(order)
        self.row = row
        super().__init__(f"order {self.order}: no feasible candidate for row {row}")
