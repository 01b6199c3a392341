"""Logging module for planeauto."""
from __future__ import annotations

import logging
import os
from typing import TYPE_CHECKING, Any, Optional

from colorama import Fore

if TYPE_CHECKING:
    from planeauto.config import Config

from .formatters import JsonFormatter, PlaneAutoFormatter
from .handlers import ConsoleHandler, JsonFileHandler

CONSOLE_FORMAT = "%(title_color)s %(message)s"
ACTIVITY_FORMAT = "%(asctime)s %(levelname)s %(title)s %(message_no_color)s"
ERROR_FORMAT = (
    "%(asctime)s %(levelname)s %(module)s:%(funcName)s:%(lineno)d %(title)s"
    " %(message_no_color)s"
)


def _file_handler(path: str, level: int, fmt: str) -> logging.FileHandler:
    handler = logging.FileHandler(path, "a", "utf-8", delay=True)
    handler.setLevel(level)
    handler.setFormatter(PlaneAutoFormatter(fmt))
    return handler


class Logger:
    """
    Colored titles on stderr, algorithmic progress in activity.log, failures in
    error.log. Run reports go through ``log_json``.

    Use the module-level ``logger``; handlers are attached per instance.
    """

    def __init__(self):
        log_dir = self.get_log_directory()
        os.makedirs(log_dir, exist_ok=True)

        self.console_handler = ConsoleHandler()
        self.console_handler.setLevel(logging.INFO)
        self.console_handler.setFormatter(PlaneAutoFormatter(CONSOLE_FORMAT))

        self.file_handler = _file_handler(
            os.path.join(log_dir, "activity.log"), logging.DEBUG, ACTIVITY_FORMAT
        )
        error_handler = _file_handler(
            os.path.join(log_dir, "error.log"), logging.ERROR, ERROR_FORMAT
        )

        self.logger = logging.getLogger("PLANEAUTO")
        for handler in (self.console_handler, self.file_handler, error_handler):
            self.logger.addHandler(handler)
        self.logger.setLevel(logging.INFO)
        self.logger.propagate = False

        self.json_logger = logging.getLogger("PLANEAUTO_JSON")
        self.json_logger.addHandler(error_handler)
        self.json_logger.setLevel(logging.DEBUG)
        self.json_logger.propagate = False

        self._config: Optional[Config] = None

    @property
    def config(self) -> Config | None:
        return self._config

    @config.setter
    def config(self, config: Config):
        self._config = config
        if config.plain_output:
            self.console_handler.setFormatter(PlaneAutoFormatter("%(message)s"))

    def log_choice(self, title: str, content: Any, color: str = Fore.GREEN) -> None:
        """Announce a run setting, e.g. the seed or the escape radius in use."""
        self._log(content, title, color, logging.INFO)

    def debug(self, message: Any, title: str = "", color: str = "") -> None:
        self._log(message, title, color, logging.DEBUG)

    def info(self, message: Any, title: str = "", color: str = "") -> None:
        self._log(message, title, color, logging.INFO)

    def warn(self, message: Any, title: str = "", color: str = "") -> None:
        self._log(message, title, color, logging.WARN)

    def error(self, message: Any, title: str = "") -> None:
        self._log(message, title, Fore.RED, logging.ERROR)

    def _log(self, message: Any, title: str, color: str, level: int) -> None:
        if isinstance(message, (list, tuple)):
            message = " ".join(str(m) for m in message)
        self.logger.log(
            level, str(message or ""), extra={"title": str(title), "color": str(color)}
        )

    def set_level(self, level: int) -> None:
        self.logger.setLevel(level)
        self.console_handler.setLevel(level)

    def log_json(self, data: Any, file_name: str) -> None:
        """Write an already serialized JSON document to ``file_name``.

        Relative names land in the log directory.
        """
        if not os.path.isabs(file_name):
            file_name = os.path.join(self.get_log_directory(), file_name)
        os.makedirs(os.path.dirname(file_name) or ".", exist_ok=True)

        handler = JsonFileHandler(file_name)
        handler.setFormatter(JsonFormatter())
        self.json_logger.addHandler(handler)
        try:
            self.json_logger.debug(data)
        finally:
            self.json_logger.removeHandler(handler)
            handler.close()

    def get_log_directory(self) -> str:
        if log_dir := os.getenv("PLANEAUTO_LOG_DIR"):
            return os.path.abspath(log_dir)
        return os.path.abspath(os.path.join(os.path.dirname(__file__), "../../logs"))


logger = Logger()
