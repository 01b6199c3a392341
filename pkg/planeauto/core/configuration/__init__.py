"""The configuration encapsulates settings for all planeauto subsystems."""
from planeauto.core.configuration.schema import (
    Configurable,
    SystemSettings,
    UserConfigurable,
    deep_update,
)

__all__ = ["Configurable", "SystemSettings", "UserConfigurable", "deep_update"]
