from __future__ import annotations

import dataclasses
from typing import Any

# Declared parameter types and the Python values each accepts
PARAMETER_TYPES: dict[str, tuple[type, ...]] = {
    "path": (str,),
    "string": (str,),
    "integer": (int,),
    "number": (int, float),
    "boolean": (bool,),
}


@dataclasses.dataclass
class CommandParameter:
    name: str
    type: str
    description: str
    required: bool
    default: Any = None

    def accepts(self, value: Any) -> bool:
        """Whether ``value`` fits the declared type; ``None`` fits optional parameters."""
        if value is None:
            return not self.required
        kinds = PARAMETER_TYPES.get(self.type)
        if kinds is None:
            return True
        # bool is an int subclass; only boolean parameters take flags
        if isinstance(value, bool) and self.type != "boolean":
            return False
        return isinstance(value, kinds)

    def __repr__(self):
        return f"CommandParameter('{self.name}', '{self.type}', '{self.description}', {self.required})"
