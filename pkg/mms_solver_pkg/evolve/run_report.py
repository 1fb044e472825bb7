from math import nan
from typing import Any, Dict, Iterator, List, Optional

import numpy as np

from .stop_reason import StopReason
from ..fields import TorusField


class RunReport:
    """Time series recorded by a solver run

    theory_bound and modulus_min_margin are NaN when no modulus hook was
    attached, holder is NaN unless the config asked for it"""

    # Time series columns, in file order
    columns = ("t", "linf", "lip", "theory_bound", "modulus_min_margin")

    def __init__(self, constants: Optional[Any] = None):
        self.times: List[float] = list()
        self.linf: List[float] = list()
        self.lip: List[float] = list()
        self.theory_bound: List[float] = list()
        self.modulus_min_margin: List[float] = list()
        self.holder: List[float] = list()
        self.breakthrough: List[bool] = list()
        self.states: List[TorusField] = list()
        self.stopped_reason: Optional[StopReason] = None
        # TheoryConstants of the attached modulus, if any
        self.constants: Optional[Any] = constants

    def append(self,
               t: float,
               linf: float,
               lip: float,
               theory_bound: float = nan,
               modulus_min_margin: float = nan,
               holder: float = nan,
               breakthrough: bool = False):

        self.times.append(float(t))
        self.linf.append(float(linf))
        self.lip.append(float(lip))
        self.theory_bound.append(float(theory_bound))
        self.modulus_min_margin.append(float(modulus_min_margin))
        self.holder.append(float(holder))
        self.breakthrough.append(bool(breakthrough))

    @property
    def completed(self) -> bool:
        return self.stopped_reason == StopReason.COMPLETED

    def array(self, name: str) -> np.ndarray:
        return np.array(getattr(self, name), dtype=float)

    def rows(self) -> Iterator[Dict[str, float]]:
        """One dict per record, keyed by the time series columns"""

        series = (self.times, self.linf, self.lip, self.theory_bound,
                  self.modulus_min_margin)
        for values in zip(*series):
            yield dict(zip(self.columns, values))

    def __len__(self) -> int:
        return len(self.times)

    def __repr__(self) -> str:
        reason = None if self.stopped_reason is None else \
            self.stopped_reason.value
        return f"RunReport(records={len(self)}, stopped_reason={reason})"


__all__ = ["RunReport"]
