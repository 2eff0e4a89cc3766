import logging
import os

logging.basicConfig(format="[pyteach] %(levelname)s: %(message)s")
log = logging.getLogger("pyteach")

LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


def set_verbosity(level: int):
    """
    Set the package log level: 0 for warnings, 1 for progress, 2 or more
    for solver details.
    """
    log.setLevel(LEVELS[min(max(level, 0), 2)])


if os.environ.get("PYTEACH_DEBUG", os.environ.get("DEBUG", "")).lower() in ("1", "true", "on"):
    set_verbosity(2)
    log.debug("debug messages enabled")
