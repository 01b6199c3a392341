from planeauto.command_decorator import command


@command(
    "function_based",
    "Function-based test command",
    {
        "degree": {"type": "integer", "description": "degree", "required": True},
        "field": {"type": "string", "description": "field", "required": True},
    },
)
def function_based(degree: int, field: str) -> str:
    """A function-based test command that joins its two arguments with a dash."""
    return f"{degree} - {field}"
