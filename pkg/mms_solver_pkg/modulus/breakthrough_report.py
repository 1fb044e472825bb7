from typing import Optional

from ..fields import PairSample


class BreakthroughReport:
    """Worst pair of a breakthrough scan at one time

    worst_margin = Omega(t, xi) - |theta(x) - theta(y)| at worst_pair,
    the smallest over the scanned pairs"""

    __slots__ = ("found", "worst_pair", "worst_margin", "time")

    def __init__(self,
                 found: bool,
                 worst_pair: Optional[PairSample],
                 worst_margin: float,
                 time: float):

        self.found: bool = found
        self.worst_pair: Optional[PairSample] = worst_pair
        self.worst_margin: float = float(worst_margin)
        self.time: float = float(time)

    def __repr__(self) -> str:
        return (f"BreakthroughReport(found={self.found},"
                f" worst_pair={self.worst_pair},"
                f" worst_margin={self.worst_margin:.6g},"
                f" t={self.time:.6g})")


__all__ = ["BreakthroughReport"]
