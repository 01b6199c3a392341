import logging
import re

from colorama import Style

ANSI_ESCAPE = re.compile(r"\x1B(?:[@-Z\\-_]|\[[0-?]*[ -/]*[@-~])")


def remove_color_codes(s: str) -> str:
    return ANSI_ESCAPE.sub("", s)


class PlaneAutoFormatter(logging.Formatter):
    """
    Fills the ``title_color`` and ``message_no_color`` placeholders from the
    ``title`` and ``color`` extras passed by ``Logger``.
    """

    def format(self, record: logging.LogRecord) -> str:
        title = getattr(record, "title", "")
        color = getattr(record, "color", "")
        record.title = title
        record.title_color = f"{color}{title} {Style.RESET_ALL}" if color else title
        record.message_no_color = remove_color_codes(str(record.msg))
        return super().format(record)


class JsonFormatter(logging.Formatter):
    """Passes a pre-serialized report through untouched."""

    def format(self, record: logging.LogRecord):
        return record.msg
