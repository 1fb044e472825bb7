from enum import Enum


class Suite(Enum):
    LEMMAS = "lemmas"
    KERNEL = "kernel"
    PICARD = "picard"
    EVOLVE = "evolve"
    THEOREM12 = "theorem12"
    ALL = "all"


__all__ = ["Suite"]
