class CapExceeded(ValueError):
    """An exhaustive search was refused because its input exceeds a size cap."""

    def __init__(self, what: str, size: int, cap: int, best=None):
        super().__init__(f"{what}: {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap
        self.best = best


class PremiseViolation(ValueError):
    """A graph has an odd vertex subset with no vertex of odd induced out-degree."""

    def __init__(self, subset, message: str = ""):
        subset = sorted(subset)
        super().__init__(message or f"odd subset {subset} has no vertex of odd out-degree")
        self.subset = subset
