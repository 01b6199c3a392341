"""
This module contains the configuration classes for planeauto.
"""
from .config import Config, ConfigBuilder

__all__ = [
    "Config",
    "ConfigBuilder",
]
