"""Configurator module."""
from __future__ import annotations

from typing import TYPE_CHECKING, Optional

import click
from colorama import Fore

from planeauto import utils
from planeauto.logs import logger

if TYPE_CHECKING:
    from planeauto.config import Config

RASTER_FORMATS = ("pgm", "csv")


def check_settings_file(settings_file: str) -> None:
    (validated, message) = utils.validate_yaml_file(settings_file)
    if not validated:
        logger.log_choice("FAILED FILE VALIDATION", message, Fore.RED)
        raise click.UsageError(message)
    logger.log_choice("Using Settings File:", settings_file)


def create_config(
    config: Config,
    command_name: str,
    debug: bool,
    seed: Optional[int],
    output_format: Optional[str],
    out: Optional[str],
    max_iter: Optional[int],
    escape_radius: Optional[float],
) -> None:
    """Updates the config object with the given arguments.

    Args:
        command_name (str): The subcommand being run
        debug (bool): Whether to enable debug mode
        seed (int): Seed for randomized corpora, recorded in the report
        output_format (str): json, pgm or csv
        out (str): Where the report (json) or the raster (pgm, csv) is written
        max_iter (int): Iteration cap for the Green function kernel
        escape_radius (float): Escape radius; None keeps the filtration radius
    """
    if debug:
        logger.log_choice("Debug Mode: ", "ENABLED")
        config.debug_mode = True

    if seed is not None:
        logger.log_choice("Seed: ", str(seed))
        config.seed = seed

    if output_format:
        config.output_format = output_format

    if config.output_format in RASTER_FORMATS:
        if command_name != "raster":
            raise click.UsageError(
                f"--format {config.output_format} can only be used with the raster command"
            )
        if not out:
            raise click.UsageError(f"--format {config.output_format} needs --out")
        logger.log_choice("Raster Output: ", f"{out} ({config.output_format})")

    if max_iter is not None:
        if max_iter < 1:
            raise click.UsageError("--max-iter must be positive")
        logger.log_choice("Max Iterations: ", str(max_iter))
        config.max_iter = max_iter

    if escape_radius is not None:
        if not escape_radius > 0:
            raise click.UsageError("--escape-radius must be positive")
        logger.log_choice("Escape Radius: ", str(escape_radius))
        config.escape_radius = escape_radius
