class QuadratureError(Exception):
    """Adaptive quadrature did not reach its tolerance"""


__all__ = ["QuadratureError"]
