"""Exit 1 when requirements.txt names a package that is missing or outdated.

run.sh calls this before starting planeauto and installs the requirements on
failure.
"""
import sys
from typing import Iterable

import pkg_resources


def parse_requirements(lines: Iterable[str]) -> list[pkg_resources.Requirement]:
    requirements = []
    for line in lines:
        line = line.split("#")[0].strip()
        if line:
            requirements.append(pkg_resources.Requirement.parse(line))
    return requirements


def missing_requirements(
    requirements: Iterable[pkg_resources.Requirement],
    installed: dict[str, str],
) -> list[str]:
    """Requirements whose package is absent or whose version is outside the specifier."""
    missing = []
    for requirement in requirements:
        version = installed.get(requirement.key)
        if version is None or pkg_resources.parse_version(version) not in requirement.specifier:
            missing.append(str(requirement))
    return missing


def main() -> None:
    with open(sys.argv[1], "r") as f:
        requirements = parse_requirements(f)
    installed = {pkg.key: pkg.version for pkg in pkg_resources.working_set}
    missing = missing_requirements(requirements, installed)
    if missing:
        print("Missing packages:")
        print(", ".join(missing))
        sys.exit(1)
    print("All packages are installed.")


if __name__ == "__main__":
    main()
