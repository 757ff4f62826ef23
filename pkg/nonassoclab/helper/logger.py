"""Console and file logging for the lab CLI."""
import logging
import os
import sys
import tempfile
from logging import Formatter
from logging.handlers import RotatingFileHandler
from typing import Optional

from colorlog import ColoredFormatter

from nonassoclab.version import __version__

_LOGGER = logging.getLogger(__name__)
LEVELS = {
    name: getattr(logging, name)
    for name in ("CRITICAL", "FATAL", "ERROR", "WARN", "WARNING", "INFO", "DEBUG", "NOTSET")
}
# Third party loggers that only speak up with -dd.
NOISY_LOGGERS = ("matplotlib", "sympy")
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
DATE_FORMAT = "%H:%M:%S"
LOG_FILE = os.path.join(tempfile.gettempdir(), "nonassoclab.log")


def _level(name: Optional[str]) -> Optional[int]:
    return LEVELS.get(str(name or "").upper())


def _apply_debug(debug: int) -> None:
    root = logging.getLogger()
    if debug == 0:
        root.setLevel(logging.INFO)
        return
    if debug < 0:
        return
    root.setLevel(logging.DEBUG)
    noisy = logging.DEBUG if debug > 1 else logging.WARNING
    for name in NOISY_LOGGERS:
        logging.getLogger(name).setLevel(noisy)
    _LOGGER.debug("Debug mode active, nonassoclab %s", __version__)


def configure_logger(log_config: Optional[dict], debug: int) -> None:
    """Apply the `logger:` section of a spec, then the -d count.

    An explicit default level wins over the implicit INFO of a run without -d.
    """
    log_config = log_config or {}
    default = _level(log_config.get("default"))
    if default is not None:
        logging.getLogger().setLevel(default)
        if debug == 0:
            debug = -1
    for name, raw in (log_config.get("logs") or {}).items():
        level = _level(raw)
        if level is None:
            _LOGGER.warning("Ignoring unknown level %r for logger %s", raw, name)
            continue
        logging.getLogger(name).setLevel(level)
    _apply_debug(debug)


def get_log_formatter(color: bool = True) -> Formatter:
    if not color:
        return Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    return ColoredFormatter(
        fmt="%(log_color)s" + LOG_FORMAT + "%(reset)s",
        datefmt=DATE_FORMAT,
        reset=True,
        log_colors={
            "DEBUG": "cyan",
            "INFO": "green",
            "WARNING": "yellow",
            "ERROR": "red",
            "CRITICAL": "bold_red",
        },
    )


class StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is at emit time."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _):
        pass


def _has_handler(kind: type) -> bool:
    return any(type(handler) is kind for handler in logging.getLogger().handlers)


def setup_logging(debug_level: int = 0) -> None:
    """Console handler on stderr, so reports on stdout stay parseable; -dd adds a rotating file."""
    root = logging.getLogger()
    root.setLevel(logging.WARNING if debug_level == 0 else logging.DEBUG)
    if not _has_handler(StderrHandler):
        console = StderrHandler()
        console.setFormatter(get_log_formatter(color=sys.stderr.isatty()))
        root.addHandler(console)
    if debug_level > 1 and not _has_handler(RotatingFileHandler):
        file_handler = RotatingFileHandler(LOG_FILE, maxBytes=10 * 1024 * 1024, backupCount=3, encoding="utf-8")
        file_handler.setFormatter(get_log_formatter(color=False))
        file_handler.setLevel(logging.DEBUG)
        root.addHandler(file_handler)
        _LOGGER.info("File logging enabled at: %s", LOG_FILE)
