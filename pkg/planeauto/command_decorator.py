"""The ``@command`` decorator that turns command functions into registry entries."""
from __future__ import annotations

import inspect
from typing import Any, Callable, Optional, TypedDict

from planeauto.config import Config
from planeauto.models.command import Command
from planeauto.models.command_parameter import PARAMETER_TYPES, CommandParameter

# Marks functions the registry should collect
PLANEAUTO_COMMAND_IDENTIFIER = "planeauto_command"


class CommandParameterSpec(TypedDict, total=False):
    type: str
    description: str
    required: bool
    default: Any


def _parameter(
    command_name: str, name: str, spec: CommandParameterSpec, declared: inspect.Parameter
) -> CommandParameter:
    kind = spec.get("type", "string")
    if kind not in PARAMETER_TYPES:
        raise TypeError(f"command {command_name}: parameter {name} has unknown type {kind!r}")

    has_default = declared.default is not inspect.Parameter.empty
    required = spec.get("required", not has_default)
    if required and has_default:
        raise TypeError(f"command {command_name}: required parameter {name} has a default")

    default = declared.default if has_default else None
    if "default" in spec and spec["default"] != default:
        raise TypeError(
            f"command {command_name}: parameter {name} declares default "
            f"{spec['default']!r} but the function uses {default!r}"
        )
    return CommandParameter(
        name=name,
        type=kind,
        description=spec.get("description", ""),
        required=required,
        default=default,
    )


def command(
    name: str,
    description: str,
    parameters: dict[str, CommandParameterSpec],
    enabled: bool | Callable[[Config], bool] = True,
    disabled_reason: Optional[str] = None,
) -> Callable[..., Any]:
    """Attach a :class:`Command` to a function.

    ``parameters`` must name exactly the arguments of the function other than
    ``config``. Defaults come from the signature; a declared default has to
    agree with it.
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        signature = inspect.signature(func).parameters
        accepted = {p for p in signature if p != "config"}
        if accepted != set(parameters):
            raise TypeError(
                f"command {name}: declared parameters {sorted(parameters)} "
                f"do not match the arguments {sorted(accepted)} of {func.__name__}"
            )

        func.command = Command(
            name=name,
            description=description,
            method=func,
            parameters=[
                _parameter(name, param_name, spec, signature[param_name])
                for param_name, spec in parameters.items()
            ],
            enabled=enabled,
            disabled_reason=disabled_reason,
        )
        setattr(func, PLANEAUTO_COMMAND_IDENTIFIER, True)
        return func

    return decorator
