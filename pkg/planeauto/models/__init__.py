from .command import Command
from .command_parameter import CommandParameter
from .command_result import CommandResult

__all__ = ["Command", "CommandParameter", "CommandResult"]
