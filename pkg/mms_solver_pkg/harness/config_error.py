class ConfigError(Exception):
    """Unknown key or invalid value in an experiment config"""

    pass


__all__ = ["ConfigError"]
