class SolverOverflowError(Exception):
    """Values left the representable range, the blow-up surrogate

    non_finite is True when NaN or inf appeared, False when the values
    merely exceeded the overflow threshold"""

    def __init__(self, message: str, non_finite: bool = False):
        super().__init__(message)
        self.non_finite: bool = non_finite


__all__ = ["SolverOverflowError"]
