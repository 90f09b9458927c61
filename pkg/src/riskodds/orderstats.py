"""Exact order statistics for repeated rolls of a fair die.

For n independent rolls, X_(k) denotes the k-th smallest value. The
attacker's and defender's best and second-best dice are X_(n) and
X_(n-1), so everything combat needs reduces to these statistics plus
the joint law of the top two dice.

All probabilities are exact ``fractions.Fraction`` values; floats never
appear here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .dist import Dist
from .errors import DomainError


@dataclass(frozen=True)
class DieSpec:
    """A batch of identical fair dice.

    Attributes:
        faces: Number of faces, each equally likely. 6 in the standard game;
            smaller dice are useful for cross-checking formulas in tests.
        count: How many dice are rolled together.
    """

    faces: int = 6
    count: int = 1

    def __post_init__(self):
        if self.faces < 1:
            raise DomainError(f"faces must be at least 1, got {self.faces}", field="faces")
        if self.count < 1:
            raise DomainError(f"count must be at least 1, got {self.count}", field="count")

    def face_pmf(self, m: int) -> Fraction:
        """P(single die shows exactly m)."""
        if 1 <= m <= self.faces:
            return Fraction(1, self.faces)
        return Fraction(0)

    def face_cdf(self, m: int) -> Fraction:
        """P(single die shows at most m), clamped outside 1..faces."""
        if m < 1:
            return Fraction(0)
        if m >= self.faces:
            return Fraction(1)
        return Fraction(m, self.faces)


@dataclass(frozen=True)
class OrderStatQuery:
    """Identifies one probability of one order statistic.

    Attributes:
        n: Sample size (number of dice rolled).
        k: Rank, 1 for the smallest value up to n for the largest.
        m: Face value the statistic is compared against.
        faces: Number of faces on each die.
    """

    n: int
    k: int
    m: int
    faces: int = 6

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be at least 1, got {self.n}", field="n")
        if not 1 <= self.k <= self.n:
            raise DomainError(f"k must be between 1 and n={self.n}, got {self.k}", field="k")
        if self.faces < 1:
            raise DomainError(f"faces must be at least 1, got {self.faces}", field="faces")
        if not 1 <= self.m <= self.faces:
            raise DomainError(
                f"m must be between 1 and faces={self.faces}, got {self.m}", field="m"
            )


def _cdf_value(n: int, k: int, m: int, faces: int) -> Fraction:
    # P(X_(k) <= m) = P(at least k of n dice are <= m); the sum runs over
    # j dice landing above m. Accepts m = 0 so pmf can difference at m - 1.
    big = DieSpec(faces=faces, count=n).face_cdf(m)
    small = 1 - big
    return sum(
        (comb(n, j) * small**j * big ** (n - j) for j in range(0, n - k + 1)),
        Fraction(0),
    )


def order_stat_cdf(q: OrderStatQuery) -> Fraction:
    """P(X_(k) <= m) for the k-th smallest of n fair dice.

    Args:
        q: Validated query naming n, k, m and the die.

    Returns:
        The exact probability as a Fraction.
    """
    return _cdf_value(q.n, q.k, q.m, q.faces)


def order_stat_pmf(q: OrderStatQuery) -> Fraction:
    """P(X_(k) = m), computed as the CDF difference at m and m - 1."""
    return _cdf_value(q.n, q.k, q.m, q.faces) - _cdf_value(q.n, q.k, q.m - 1, q.faces)


@lru_cache(maxsize=None)
def top_two_joint_pmf(n: int, faces: int = 6) -> Dist:
    """Joint distribution of (highest, second highest) among n dice.

    No closed form is attempted; the n-dice outcome space is small enough
    to enumerate outright, and the result is cached per (n, faces).

    Args:
        n: Sample size, at least 2.
        faces: Number of faces on each die.

    Returns:
        Dist over pairs (highest, second highest), highest >= second.
    """
    if n < 2:
        raise DomainError(f"n must be at least 2 for a top-two law, got {n}", field="n")
    if faces < 1:
        raise DomainError(f"faces must be at least 1, got {faces}", field="faces")
    counts: dict[tuple[int, int], int] = {}
    for roll in product(range(1, faces + 1), repeat=n):
        ordered = sorted(roll)
        pair = (ordered[-1], ordered[-2])
        counts[pair] = counts.get(pair, 0) + 1
    return Dist.from_counts(counts, faces**n)


def attacker_wins_best(n_a: int, n_d: int, faces: int = 6) -> Fraction:
    """Probability the attacker's best die beats the defender's best.

    Ties go to the defender, so the attacker needs a strictly larger
    maximum. With m ranging over the attacker's winning face, the count
    of favorable outcomes is m^n_a * (m-1)^n_d - (m-1)^(n_a+n_d): the
    attacker's dice all at most m, the defender's all below m, minus the
    cases where the attacker never actually reaches m.

    Args:
        n_a: Attacker dice count, at least 1.
        n_d: Defender dice count, at least 1.
        faces: Number of faces on each die.

    Returns:
        Exact win probability for the single best-die comparison.
    """
    if n_a < 1:
        raise DomainError(f"n_a must be at least 1, got {n_a}", field="n_a")
    if n_d < 1:
        raise DomainError(f"n_d must be at least 1, got {n_d}", field="n_d")
    if faces < 1:
        raise DomainError(f"faces must be at least 1, got {faces}", field="faces")
    numerator = sum(
        m**n_a * (m - 1) ** n_d - (m - 1) ** (n_a + n_d) for m in range(2, faces + 1)
    )
    return Fraction(numerator, faces ** (n_a + n_d))
