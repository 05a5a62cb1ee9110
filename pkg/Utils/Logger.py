import logging
from Config.Configs import VConfigs

_ROOT_NAME = 'cvmdi'
_configured = False


def _configureRoot() -> logging.Logger:
    global _configured
    root = logging.getLogger(_ROOT_NAME)
    if not _configured:
        config = VConfigs()
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(config.LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(config.LOG_LEVEL)
        root.propagate = False
        _configured = True
    return root


def get_logger(name: str) -> logging.Logger:
    """Logger under the package root, so one call to set_level drives every module."""
    _configureRoot()
    return logging.getLogger(f'{_ROOT_NAME}.{name}')


def set_level(level) -> None:
    _configureRoot().setLevel(level)
