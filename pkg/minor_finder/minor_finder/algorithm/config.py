"""Run configuration: t, epsilon and the extremal-function table."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from ..constants import DEFAULT_G_CONSTANT, EXACT_G_MAX_T, MIN_T
from ..exceptions import ValidationError
from ..graph.trace import Tracer
from ..handlers import throw
from ..logger import minor_logger
from ..utils import format_fraction


def default_g(t: int, c: Fraction = Fraction(DEFAULT_G_CONSTANT)) -> Fraction:
    """Default value of g(t), the average degree forcing a K_t minor.

    Exact values 2(t-2) are used for 3 <= t <= 7 and c*t*sqrt(log2 t)
    (rationalised) above that. K_1 and K_2 minors are trivial.

    Args:
        t (int): The clique order
        c (Fraction, optional): Leading constant for large t. Defaults to 4.

    Returns:
        Fraction: The value of g(t)
    """
    if t < 1:
        throw(f"g(t) is undefined for t={t}", ValidationError)
    if t < MIN_T:
        return Fraction(1)
    if t <= EXACT_G_MAX_T:
        return Fraction(2 * (t - 2))

    root = Fraction(math.sqrt(math.log2(t))).limit_denominator(1000)
    return c * t * root


class GFunction:
    """g(t) with optional per-t overrides loaded from a g-table file."""

    def __init__(
        self,
        table: Mapping[int, Fraction] | None = None,
        c: Fraction = Fraction(DEFAULT_G_CONSTANT),
    ) -> None:
        self.table = dict(table or {})
        self.c = Fraction(c)
        self._warn_if_decreasing()

    def __call__(self, t: int) -> Fraction:
        if t in self.table:
            return self.table[t]

        return default_g(t, self.c)

    def _warn_if_decreasing(self) -> None:
        if not self.table:
            return

        ts = range(1, max(self.table) + 2)
        values = [self(t) for t in ts]
        for t, previous, current in zip(ts[1:], values, values[1:]):
            if current < previous:
                minor_logger.warning(
                    f"g-table is decreasing at t={t}: "
                    f"{format_fraction(current)} < {format_fraction(previous)}"
                )


@dataclass
class Config:
    t: int
    epsilon: Fraction
    g: GFunction = field(default_factory=GFunction)
    strict: bool = False
    # seeds the generated graph of a bench row; the finder itself is deterministic
    seed: int = 0
    trace: Tracer | None = None

    def __post_init__(self) -> None:
        self.epsilon = Fraction(self.epsilon)

    @property
    def g_value(self) -> Fraction:
        return self.g(self.t)

    @property
    def threshold(self) -> Fraction:
        """D = (2 + epsilon) * g(t), the average degree the input must reach."""
        return (2 + self.epsilon) * self.g_value

    @property
    def strict_bound(self) -> Fraction:
        return max(Fraction(self.t), 2 * self.t / self.epsilon)

    def meets_strict_bound(self) -> bool:
        return self.g_value >= self.strict_bound

    def validate(self) -> None:
        if self.t < MIN_T:
            throw(f"t must be at least {MIN_T}, got {self.t}", ValidationError)
        if self.epsilon <= 0:
            throw(f"epsilon must be positive, got {self.epsilon}", ValidationError)

        if not self.meets_strict_bound():
            message = (
                f"g({self.t}) = {format_fraction(self.g_value)} is below "
                f"max(t, 2t/epsilon) = {format_fraction(self.strict_bound)}"
            )
            if self.strict:
                throw(message, ValidationError)
            minor_logger.warning(f"{message}; proceeding without the guarantee")
