class ModulusConstructionError(Exception):
    """B or delta0 could not be certified for the given data"""

    pass


__all__ = ["ModulusConstructionError"]
