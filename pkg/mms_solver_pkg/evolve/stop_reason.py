from enum import Enum


class StopReason(Enum):
    COMPLETED = "completed"
    GRADIENT_THRESHOLD = "gradient_threshold"
    NAN = "nan"
    OVERFLOW = "overflow"


__all__ = ["StopReason"]
