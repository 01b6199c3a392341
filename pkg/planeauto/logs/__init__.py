from .formatters import JsonFormatter, PlaneAutoFormatter, remove_color_codes
from .handlers import ConsoleHandler, JsonFileHandler
from .logger import Logger, logger
