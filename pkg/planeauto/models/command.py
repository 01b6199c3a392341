from __future__ import annotations

from typing import TYPE_CHECKING, Any, Callable, Optional

from .command_parameter import CommandParameter

if TYPE_CHECKING:
    from planeauto.config import Config


class Command:
    """A class representing a command.

    Attributes:
        name (str): The name of the command, also the CLI subcommand.
        description (str): A brief description of what the command does.
        parameters (list): The parameters of the function that the command executes.
        category (str): The module the command was collected from.
    """

    def __init__(
        self,
        name: str,
        description: str,
        method: Callable[..., Any],
        parameters: list[CommandParameter],
        enabled: bool | Callable[[Config], bool] = True,
        disabled_reason: Optional[str] = None,
    ):
        self.name = name
        self.description = description
        self.method = method
        self.parameters = parameters
        self.enabled = enabled
        self.disabled_reason = disabled_reason
        self.category = getattr(method, "__module__", "")

    def is_enabled(self, config: Config) -> bool:
        if callable(self.enabled):
            return bool(self.enabled(config))
        return bool(self.enabled)

    def missing_parameters(self, arguments: dict[str, Any]) -> list[str]:
        return [
            p.name
            for p in self.parameters
            if p.required and arguments.get(p.name) is None
        ]

    def argument_errors(self, arguments: dict[str, Any]) -> list[str]:
        """Unknown argument names and values that do not fit the declared types."""
        declared = {p.name: p for p in self.parameters}
        errors = [f"unknown parameter {name}" for name in arguments if name not in declared]
        errors += [
            f"{name} must be {declared[name].type}, got {value!r}"
            for name, value in arguments.items()
            if name in declared and value is not None and not declared[name].accepts(value)
        ]
        return errors

    def __call__(self, *args, **kwargs) -> Any:
        return self.method(*args, **kwargs)

    def __str__(self) -> str:
        params = [
            f"{param.name}: {param.type if param.required else f'Optional[{param.type}]'}"
            for param in self.parameters
        ]
        return f"{self.name}: {self.description}, params: ({', '.join(params)})"
