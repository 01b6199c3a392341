from __future__ import annotations

import importlib
from typing import Iterable, Optional

from planeauto.command_decorator import PLANEAUTO_COMMAND_IDENTIFIER
from planeauto.logs import logger
from planeauto.models.command import Command


class CommandRegistry:
    """
    Name lookup for the planeauto subcommands.

    Commands are the functions decorated with ``@command`` in the modules of
    ``COMMAND_CATEGORIES``; ``with_categories`` imports all enabled ones.
    """

    commands: dict[str, Command]

    def __init__(self):
        self.commands = {}

    @classmethod
    def with_categories(
        cls, categories: Iterable[str], disabled: Iterable[str] = ()
    ) -> CommandRegistry:
        registry = cls()
        disabled = set(disabled)
        for category in categories:
            if category in disabled:
                logger.debug(f"skipping disabled category {category}", "COMMANDS")
                continue
            registry.import_commands(category)
        return registry

    def __contains__(self, command_name: str):
        return command_name in self.commands

    def register(self, cmd: Command) -> None:
        if cmd.name in self.commands:
            logger.warn(f"Command '{cmd.name}' is registered twice; keeping the last one")
        self.commands[cmd.name] = cmd

    def unregister(self, command: Command) -> None:
        if command.name not in self.commands:
            raise KeyError(f"Command '{command.name}' not found in registry.")
        del self.commands[command.name]

    def get_command(self, name: str) -> Optional[Command]:
        return self.commands.get(name)

    def import_commands(self, module_name: str) -> None:
        """Import ``module_name`` and register every ``@command`` function in it."""
        module = importlib.import_module(module_name)
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            if getattr(attr, PLANEAUTO_COMMAND_IDENTIFIER, False):
                self.register(attr.command)
