"""Exception types shared across the package."""


class AwDahaError(Exception):
    """Base class for all errors raised by awdaha."""


class DegenerateParams(AwDahaError):
    """A parameter pack violates a nondegeneracy condition.

    ``reason`` names the violated condition, e.g. ``"q^3 = 1"``.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotDivisible(AwDahaError):
    """Exact Laurent division left a nonzero remainder."""


class AlgebraMismatch(AwDahaError):
    """Operands belong to different algebras."""


class NonTermination(AwDahaError):
    """Rewriting exceeded its step bound."""

    def __init__(self, steps: int, bound: int):
        super().__init__(f"rewriting exceeded {bound} steps ({steps} taken)")
        self.steps = steps
        self.bound = bound
