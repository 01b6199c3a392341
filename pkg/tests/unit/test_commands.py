import os
import shutil
import sys
from pathlib import Path

import pytest

from planeauto.command_decorator import command
from planeauto.commands import COMMAND_CATEGORIES
from planeauto.config import Config
from planeauto.main import build_registry
from planeauto.models.command import Command, CommandParameter
from planeauto.models.command_registry import CommandRegistry
from planeauto.models.command_result import CommandResult

PARAMETERS = [
    CommandParameter("degree", "integer", description="Degree", required=True),
    CommandParameter("field", "string", description="Field", required=False),
]


def example_command_method(degree: int, field: str) -> str:
    """Example function for testing the Command class."""
    return f"{degree} - {field}"


@pytest.fixture
def example_command():
    yield Command(
        name="example",
        description="Example command",
        method=example_command_method,
        parameters=PARAMETERS,
    )


def test_command_creation(example_command: Command):
    """Test that a Command object can be created with the correct attributes."""
    assert example_command.name == "example"
    assert example_command.description == "Example command"
    assert example_command.method == example_command_method
    assert example_command.category == __name__
    assert (
        str(example_command)
        == "example: Example command, params: (degree: integer, field: Optional[string])"
    )


def test_command_call(example_command: Command):
    """Test that Command(*args) calls and returns the result of method(*args)."""
    assert example_command(degree=3, field="Q") == "3 - Q"


def test_command_call_with_invalid_arguments(example_command: Command):
    with pytest.raises(TypeError):
        example_command(degree="invalid", does_not_exist="test")


def test_missing_parameters(example_command: Command):
    assert example_command.missing_parameters({"field": "Q"}) == ["degree"]
    assert example_command.missing_parameters({"degree": 2}) == []


def test_argument_errors(example_command: Command):
    assert example_command.argument_errors({"degree": 2, "field": "Q"}) == []
    assert example_command.argument_errors({"degree": None}) == []
    assert example_command.argument_errors({"degree": "2", "radius": 1.0}) == [
        "unknown parameter radius",
        "degree must be integer, got '2'",
    ]
    # flags are not integers
    assert example_command.argument_errors({"degree": True}) == [
        "degree must be integer, got True",
    ]


def test_enabled_callable(config: Config):
    cmd = Command("gated", "Gated command", example_command_method, PARAMETERS, enabled=lambda c: c.seed == 5)
    assert not cmd.is_enabled(config)
    config.seed = 5
    assert cmd.is_enabled(config)


def test_register_command(example_command: Command):
    registry = CommandRegistry()

    registry.register(example_command)

    assert registry.get_command(example_command.name) == example_command
    assert len(registry.commands) == 1


def test_unregister_command(example_command: Command):
    registry = CommandRegistry()

    registry.register(example_command)
    registry.unregister(example_command)

    assert len(registry.commands) == 0
    assert example_command.name not in registry
    with pytest.raises(KeyError):
        registry.unregister(example_command)


def test_get_nonexistent_command():
    registry = CommandRegistry()

    assert registry.get_command("nonexistent_command") is None
    assert "nonexistent_command" not in registry


def test_import_mock_commands_module():
    """Test that the registry can import a module with mock command plugins."""
    registry = CommandRegistry()

    registry.import_commands("tests.mocks.mock_commands")

    assert "function_based" in registry
    command = registry.commands["function_based"]
    assert command.description == "Function-based test command"
    assert [p.name for p in command.parameters] == ["degree", "field"]
    assert registry.get_command("function_based")(degree=3, field="Q") == "3 - Q"


def test_import_temp_command_file_module(tmp_path: Path):
    """
    Test that the registry can import a command module from a temp file.
    Args:
        tmp_path (pathlib.Path): Path to a temporary directory.
    """
    registry = CommandRegistry()

    src = Path(os.getcwd()) / "tests/mocks/mock_commands.py"
    temp_commands_file = tmp_path / "mock_commands.py"
    shutil.copyfile(src, temp_commands_file)

    sys.path.append(str(tmp_path))
    registry.import_commands("mock_commands")
    sys.path.remove(str(tmp_path))

    assert "function_based" in registry


def test_builtin_registry(config: Config):
    registry = build_registry(config)
    expected = {
        "classify",
        "decompose",
        "normal-form",
        "invert",
        "green",
        "raster",
        "periodic",
        "conjugate",
        "bound",
        "example",
    }
    assert expected <= set(registry.commands)


def test_disabled_categories(config: Config):
    config.disabled_command_categories = [COMMAND_CATEGORIES[-1]]
    registry = build_registry(config)
    assert "conjugate" not in registry
    assert "classify" in registry


def test_command_result_status():
    assert CommandResult({"a": 1}).status == "ok"
    with pytest.raises(ValueError):
        CommandResult({}, status="maybe")


def test_decorator_reads_defaults_from_the_signature():
    @command(
        "orbit",
        "Iterate a map",
        {
            "input": {"type": "path", "description": "Map JSON file"},
            "steps": {"type": "integer", "description": "Iterations"},
            "radius": {"type": "number", "description": "Escape radius", "default": 10.0},
        },
    )
    def orbit(config: Config, input: str, steps: int = 4, radius: float = 10.0) -> str:
        return f"{input}:{steps}:{radius}"

    params = {p.name: p for p in orbit.command.parameters}
    assert params["input"].required and params["input"].default is None
    assert not params["steps"].required and params["steps"].default == 4
    assert params["radius"].type == "number" and params["radius"].default == 10.0
    assert orbit(None, "f.json") == "f.json:4:10.0"
    assert orbit.command.missing_parameters({"steps": 2}) == ["input"]


@pytest.mark.parametrize(
    "parameters",
    [
        # not an argument of the function
        {"degree": {"type": "integer"}, "seed": {"type": "integer"}},
        # field is missing
        {},
        {"degree": {"type": "matrix"}},
        {"degree": {"type": "integer", "default": 3}},
        {"degree": {"type": "integer", "required": True}},
    ],
)
def test_decorator_rejects_mismatched_declarations(parameters):
    def run(config: Config, degree: int = 2) -> int:
        return degree

    with pytest.raises(TypeError):
        command("run", "Mismatched", parameters)(run)


def test_builtin_parameters_are_typed(config: Config):
    registry = build_registry(config)
    conjugate = registry.get_command("conjugate")
    params = {p.name: p for p in conjugate.parameters}
    assert params["f"].type == "path" and params["f"].required
    assert params["degree_cap"].type == "integer" and params["degree_cap"].default == 1
    assert params["tol"].type == "number" and not params["tol"].required
    assert conjugate.argument_errors({"f": "f.json", "g": "g.json", "tol": 1e-6}) == []
    assert conjugate.argument_errors({"degree_cap": 1.5}) == ["degree_cap must be integer, got 1.5"]
