import logging
import sys


class ConsoleHandler(logging.StreamHandler):
    """Writes to stderr so stdout stays reserved for JSON reports."""

    def emit(self, record: logging.LogRecord) -> None:
        msg = self.format(record)
        try:
            print(msg, file=sys.stderr)
        except Exception:
            self.handleError(record)


class JsonFileHandler(logging.FileHandler):
    def __init__(self, filename: str, mode="w", encoding="utf-8", delay=False):
        super().__init__(filename, mode, encoding, delay)

    def emit(self, record: logging.LogRecord):
        data = self.format(record)
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        with open(self.baseFilename, "w", encoding="utf-8") as f:
            f.write(data)
            if not data.endswith("\n"):
                f.write("\n")
