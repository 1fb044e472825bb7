from typing import Sequence, TYPE_CHECKING, Union

import numpy as np

from .breakthrough_report import BreakthroughReport
from ..fields import PairBatch, PairSample, TorusField

if TYPE_CHECKING:
    from .time_modulus import TimeModulus


Pairs = Union[PairBatch, Sequence[PairSample]]


def breakthrough_scan(theta: TorusField,
                      tm: "TimeModulus",
                      t: float,
                      pairs: Pairs) -> BreakthroughReport:
    """min over pairs of Omega(t, xi) - |theta(x) - theta(y)|

    found is True once the margin reaches zero. Ties go to the first
    pair in scan order"""

    batch = pairs if isinstance(pairs, PairBatch) else \
        PairBatch(theta.grid, pairs)
    values = theta.values.ravel()
    jumps = np.abs(values[batch.flat_x] - values[batch.flat_y])
    margins = tm.value(t, batch.separations) - jumps
    worst = int(np.argmin(margins))
    margin = float(margins[worst])
    return BreakthroughReport(margin <= 0, batch.pairs[worst], margin, t)


def scan(self, theta: TorusField, t: float,
         pairs: Pairs) -> BreakthroughReport:
    return breakthrough_scan(theta, self, t, pairs)


__all__ = ["breakthrough_scan", "scan"]
