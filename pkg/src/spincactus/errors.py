"""Exception taxonomy shared across the package.

Validation problems (bad user input, violated structural invariants) raise
ValidationError; resource-bounded scans that would exceed the configured
budget raise BudgetExceededError so callers can tell "wrong" from "too big".
Internal consistency guards use plain AssertionError: if one fires, a design
assumption is falsified and the code must be revisited, not the input.
"""


class ValidationError(ValueError):
    """Input violates a documented precondition or structural invariant."""


class BudgetExceededError(RuntimeError):
    """A whole-crystal or per-component scan would exceed the node budget."""

    def __init__(self, needed_bits, budget_bits):
        self.needed_bits = needed_bits
        self.budget_bits = budget_bits
        super().__init__(
            f"scan needs about 2^{needed_bits} nodes, budget is 2^{budget_bits} "
            f"(raise the budget explicitly to proceed)"
        )
