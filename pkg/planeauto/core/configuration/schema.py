import abc
import typing
from typing import Any, Generic, TypeVar

from pydantic import BaseModel, Field


def UserConfigurable(*args, **kwargs):
    """A settings field that ``make-settings`` writes out for users to edit."""
    return Field(*args, **kwargs, user_configurable=True)


class SystemSettings(BaseModel):
    """Validated settings; unknown keys are rejected and assignments re-validated."""

    name: str
    description: str

    class Config:
        extra = "forbid"
        use_enum_values = True
        validate_assignment = True


S = TypeVar("S", bound=SystemSettings)


class Configurable(abc.ABC, Generic[S]):
    default_settings: typing.ClassVar[S]

    @classmethod
    def get_user_config(cls) -> dict[str, Any]:
        return get_user_config_fields(cls.default_settings)

    @classmethod
    def build_configuration(cls, overrides: dict) -> S:
        """Merge ``overrides`` over the defaults and validate the result."""
        merged = deep_update(cls.default_settings.dict(), overrides)
        return type(cls.default_settings).parse_obj(merged)


def get_user_config_fields(instance: BaseModel) -> dict[str, Any]:
    return {
        name: getattr(instance, name)
        for name, field in instance.__fields__.items()
        if field.field_info.extra.get("user_configurable")
    }


def deep_update(original: dict, update: dict) -> dict:
    """Return ``original`` with ``update`` merged in; nested dicts merge key by key."""
    merged = dict(original)
    for key, value in update.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = deep_update(merged[key], value)
        else:
            merged[key] = value
    return merged
