"""Finite probability distributions with exact rational weights.

Outcomes are integers or tuples of integers; weights are
``fractions.Fraction`` values. Instances are immutable once built, so
they can be cached and shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .errors import DomainError

Outcome = int | tuple[int, ...]


class Dist:
    """An exact finite probability distribution.

    The weights need not sum to one; partial distributions arise as
    intermediate values. Consumers that require normalization check
    :attr:`is_normalized` (the statistics helpers do).
    """

    __slots__ = ("_weights",)

    def __init__(self, weights: Mapping[Outcome, Fraction | int]):
        cleaned: dict[Outcome, Fraction] = {}
        for outcome, weight in weights.items():
            w = Fraction(weight)
            if w < 0:
                raise DomainError(f"negative weight {w} for outcome {outcome!r}")
            if w != 0:
                cleaned[outcome] = w
        self._weights = cleaned

    @classmethod
    def point(cls, outcome: Outcome) -> "Dist":
        """Unit mass on a single outcome."""
        return cls({outcome: Fraction(1)})

    @classmethod
    def from_counts(cls, counts: Mapping[Outcome, int], total: int) -> "Dist":
        """Distribution from occurrence counts out of ``total`` equally likely cases."""
        if total <= 0:
            raise DomainError(f"total must be positive, got {total}", field="total")
        return cls({outcome: Fraction(c, total) for outcome, c in counts.items()})

    def __getitem__(self, outcome: Outcome) -> Fraction:
        return self._weights.get(outcome, Fraction(0))

    def __iter__(self) -> Iterator[Outcome]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dist):
            return NotImplemented
        return self._weights == other._weights

    def __hash__(self) -> int:
        return hash(frozenset(self._weights.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{o!r}: {w}" for o, w in self.items())
        return f"Dist({{{inner}}})"

    def support(self) -> tuple[Outcome, ...]:
        """Outcomes with nonzero weight, in sorted order."""
        return tuple(sorted(self._weights))

    def items(self) -> tuple[tuple[Outcome, Fraction], ...]:
        """(outcome, weight) pairs in sorted outcome order."""
        return tuple((o, self._weights[o]) for o in self.support())

    @property
    def total_mass(self) -> Fraction:
        return sum(self._weights.values(), Fraction(0))

    @property
    def is_normalized(self) -> bool:
        return self.total_mass == 1
