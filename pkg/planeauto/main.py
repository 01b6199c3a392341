"""The application entry point.  Can be invoked by a CLI or any other front end application."""
from __future__ import annotations

import logging
import os
import random
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Optional

import click
import numpy as np
from colorama import Fore

from planeauto.algebra.limits import limits
from planeauto.commands import COMMAND_CATEGORIES
from planeauto.config import Config, ConfigBuilder
from planeauto.configurator import check_settings_file, create_config
from planeauto.exceptions import InvalidInput, PlaneAutoError, ResourceCapExceeded, UndecidedAtCap
from planeauto.json_utils.utilities import dump_json, schema_errors, validate_json
from planeauto.logs import logger
from planeauto.models import CommandResult
from planeauto.models.command_registry import CommandRegistry
from planeauto.utils import inputs_digest

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass
class RunReport:
    command: str
    arguments: dict[str, Any]
    inputs_digest: str
    status: str
    exit_code: int
    outputs: dict[str, Any] = field(default_factory=dict)
    parameters: dict[str, Any] = field(default_factory=dict)
    caps_hit: list[dict[str, Any]] = field(default_factory=list)
    error: Optional[dict[str, Any]] = None
    timing: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "command": {"name": self.command, "arguments": self.arguments},
            "inputs_digest": self.inputs_digest,
            "status": self.status,
            "exit_code": self.exit_code,
            "outputs": self.outputs,
            "parameters": self.parameters,
            "caps_hit": self.caps_hit,
            "error": self.error,
            "timing": self.timing,
        }


def build_registry(config: Config) -> CommandRegistry:
    return CommandRegistry.with_categories(
        COMMAND_CATEGORIES, config.disabled_command_categories
    )


def _error_status(error: PlaneAutoError) -> tuple[str, int]:
    if isinstance(error, InvalidInput):
        return "invalid-input", EXIT_USAGE
    if isinstance(error, (ResourceCapExceeded, UndecidedAtCap)):
        return "cap-exceeded", EXIT_CAP
    return "error", EXIT_ERROR


def _json_safe(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (str, bool, int, float)) or value is None:
        return value
    return str(value)


def run_command(
    command_name: str,
    arguments: dict[str, Any],
    debug: bool = False,
    settings_file: Optional[str] = None,
    seed: Optional[int] = None,
    output_format: Optional[str] = None,
    out: Optional[str] = None,
    max_iter: Optional[int] = None,
    escape_radius: Optional[float] = None,
) -> RunReport:
    """Run one registered command and write its report.

    Usage errors propagate as ``click.UsageError``; library errors end up in
    the report with their exit code.
    """
    # Configure logging before we do anything else.
    logger.set_level(logging.DEBUG if debug else logging.INFO)

    if settings_file:
        check_settings_file(settings_file)
    config = ConfigBuilder.build_config_from_env(settings_file)
    # Give the logger access to the plain output setting.
    logger.config = config
    create_config(config, command_name, debug, seed, output_format, out, max_iter, escape_radius)
    limits.configure(config)
    if config.seed is not None:
        random.seed(config.seed)
        np.random.seed(config.seed)

    command_registry = build_registry(config)
    command = command_registry.get_command(command_name)
    if command is None or not command.is_enabled(config):
        reason = command.disabled_reason if command and command.disabled_reason else "disabled"
        raise click.UsageError(f"Command '{command_name}' is not available: {reason}")
    if missing := command.missing_parameters(arguments):
        raise click.UsageError(f"Missing parameters for {command_name}: {', '.join(missing)}")
    if errors := command.argument_errors(arguments):
        raise click.UsageError(f"Bad arguments for {command_name}: {'; '.join(errors)}")

    call_arguments = {k: v for k, v in arguments.items() if v is not None}
    if command_name == "raster":
        call_arguments["out"] = out
    parameters = config.numeric_parameters()
    echo = _json_safe(arguments)
    started = datetime.now(timezone.utc)
    clock = time.perf_counter()

    result: Optional[CommandResult] = None
    error: Optional[PlaneAutoError] = None
    try:
        result = command(config=config, **call_arguments)
    except PlaneAutoError as e:
        error = e
        logger.warn(f"{type(e).__name__}: {e.message}", command_name.upper(), Fore.YELLOW)

    timing = {"started": started.isoformat(), "seconds": time.perf_counter() - clock}
    if result is not None:
        parameters = result.parameters or parameters
        report = RunReport(
            command=command_name,
            arguments=echo,
            inputs_digest=inputs_digest(result.inputs, parameters),
            status=result.status,
            exit_code=EXIT_OK,
            outputs=_json_safe(result.outputs),
            parameters=parameters,
            timing=timing,
        )
    else:
        status, exit_code = _error_status(error)
        caps_hit = []
        if isinstance(error, (ResourceCapExceeded, UndecidedAtCap)):
            caps_hit.append({"cap": error.cap, "limit": _json_safe(error.limit)})
        report = RunReport(
            command=command_name,
            arguments=echo,
            inputs_digest=inputs_digest(echo, parameters),
            status=status,
            exit_code=exit_code,
            parameters=parameters,
            caps_hit=caps_hit,
            error=_json_safe(error.to_dict()),
            timing=timing,
        )

    write_report(report, config, out)
    return report


def write_report(report: RunReport, config: Config, out: Optional[str] = None) -> bytes:
    data = report.to_json()
    if not validate_json(data, config):
        raise PlaneAutoError(
            "run report failed schema validation: " + "; ".join(schema_errors(data, "run_report"))
        )
    payload = dump_json(data)
    if out and config.output_format == "json":
        logger.log_json(payload, os.path.abspath(out))
    elif config.report_dir:
        name = f"{report.command}-{report.inputs_digest[:12]}.json"
        logger.log_json(payload, os.path.join(os.path.abspath(config.report_dir), name))
    else:
        click.echo(payload.decode("utf-8"), nl=False)
    return payload
