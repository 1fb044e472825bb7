from typing import Any, Dict, List, Optional


class MarginReport:
    """Outcome of comparing a computed quantity against a bound

    margin = rhs - lhs and the check passes when margin >= -tol, or
    margin > 0 for a strict check"""

    __slots__ = ("name", "lhs", "rhs", "margin", "tol", "strict", "detail")

    def __init__(self,
                 name: str,
                 lhs: float,
                 rhs: float,
                 tol: float = 0.0,
                 detail: Optional[Dict[str, Any]] = None,
                 strict: bool = False):

        self.name: str = name
        self.lhs: float = float(lhs)
        self.rhs: float = float(rhs)
        self.margin: float = self.rhs - self.lhs
        self.tol: float = float(tol)
        self.strict: bool = strict
        self.detail: Dict[str, Any] = detail or dict()

    @property
    def passed(self) -> bool:
        if self.strict:
            return bool(self.margin > 0)
        return bool(self.margin >= -self.tol)

    def __repr__(self) -> str:
        return (f"MarginReport({self.name}: lhs={self.lhs:.6g},"
                f" rhs={self.rhs:.6g}, passed={self.passed})")


class CheckGroup:
    """Several MarginReports plus the numbers computed along the way"""

    def __init__(self,
                 checks: List[MarginReport],
                 values: Optional[Dict[str, Any]] = None):
        self.checks: List[MarginReport] = checks
        self.values: Dict[str, Any] = values or dict()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def worst_margin(self) -> float:
        if not self.checks:
            return float("inf")
        return min(check.margin for check in self.checks)

    def __getitem__(self, name: str) -> MarginReport:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)

    def __repr__(self) -> str:
        failed = [c.name for c in self.checks if not c.passed]
        return f"{type(self).__name__}(passed={self.passed}, failed={failed})"


__all__ = ["MarginReport", "CheckGroup"]
