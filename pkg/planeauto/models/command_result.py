from dataclasses import dataclass, field
from typing import Any

STATUSES = ("ok", "refuted", "undecided")


@dataclass
class CommandResult:
    """What a command hands back to the run report.

    ``inputs`` holds the parsed inputs in canonical JSON form; together with
    ``parameters`` they make up the inputs digest.
    """

    outputs: dict[str, Any]
    inputs: dict[str, Any] = field(default_factory=dict)
    parameters: dict[str, Any] = field(default_factory=dict)
    status: str = "ok"

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown command status {self.status!r}")
