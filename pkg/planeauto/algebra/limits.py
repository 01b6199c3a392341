"""Process-wide caps for exact arithmetic.

The command line installs the caps from the active ``Config``; library code
only reads them.
"""
from __future__ import annotations

from typing import TYPE_CHECKING

from planeauto.exceptions import ResourceCapExceeded

if TYPE_CHECKING:
    from planeauto.config import Config


class ArithmeticLimits:
    def __init__(self):
        self.exponent_cap = 10**6
        self.term_cap = 2048 * 1024

    def configure(self, config: Config) -> None:
        self.exponent_cap = config.exponent_cap
        self.term_cap = config.term_cap

    def check_degree(self, degree: int | float, what: str = "polynomial") -> None:
        if degree > self.exponent_cap:
            raise ResourceCapExceeded(
                f"{what} degree {degree} exceeds the exponent cap {self.exponent_cap}",
                cap="exponent",
                limit=self.exponent_cap,
            )

    def check_terms(self, n_terms: int) -> None:
        if n_terms > self.term_cap:
            raise ResourceCapExceeded(
                f"{n_terms} stored terms exceed the memory cap",
                cap="memory",
                limit=self.term_cap,
            )


limits = ArithmeticLimits()
