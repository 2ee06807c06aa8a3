"""
Exceptions raised by ncposet.

Malformed input raises plain :code:`ValueError` or :code:`TypeError`. The classes
here cover failures a caller may want to tell apart.
"""


class EmptyPosetFamilyError(ValueError):
    """
    Raised when NC^d_n is requested for n not congruent to 1 modulo d.
    """

    def __init__(self, n: int, d: int) -> None:
        self.n = n
        self.d = d
        super().__init__(
            f"Empty poset family: NC^{d}_{n} has no elements since {n} is not 1 modulo {d}."
        )


class BudgetExceededError(RuntimeError):
    """
    Raised when a computation is predicted to exceed the configured budget.
    """

    def __init__(self, what: str, predicted: int, budget: int) -> None:
        self.what = what
        self.predicted = predicted
        self.budget = budget
        super().__init__(
            f"Refusing to build {what}: {predicted} predicted against a budget of {budget}."
            " Raise it with --budget or the NCPOSET_BUDGET environment variable."
        )


class LabelConditionError(ValueError):
    def __init__(self, condition: int, detail: str) -> None:
        self.condition = condition
        super().__init__(f"Label property ({condition}) violated: {detail}")


class NotACoverError(ValueError):
    pass


class VerificationError(AssertionError):
    pass
