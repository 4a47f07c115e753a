from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class MinorModel:
    """Certificate of a K_t minor: t branch sets over input vertex ids."""

    branch_sets: tuple[frozenset[int], ...]

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> MinorModel:
        return cls(tuple(frozenset(members) for members in sets))

    @property
    def t(self) -> int:
        return len(self.branch_sets)

    def sorted_sets(self) -> list[list[int]]:
        return [sorted(members) for members in self.branch_sets]
