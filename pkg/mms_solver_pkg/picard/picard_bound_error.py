class PicardBoundError(Exception):
    """An iterate left the M0/M1 box, i.e. dt is too coarse for T0"""


__all__ = ["PicardBoundError"]
