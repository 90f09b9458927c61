"""Order statistic laws checked against brute-force enumeration.

The closed forms under test are verified two ways: frozen values from
an independent enumeration over the full outcome space, and literal
transcriptions of the binomial-sum and power-difference formulas.
"""

from fractions import Fraction
from math import comb

import pytest

from riskodds import (
    DieSpec,
    DomainError,
    OrderStatQuery,
    attacker_wins_best,
    order_stat_cdf,
    order_stat_pmf,
    top_two_joint_pmf,
)

from oracles import best_die_win_probability, order_stat_counts, top_two_counts


def test_die_spec_pmf_cdf():
    d = DieSpec()
    assert d.face_pmf(3) == Fraction(1, 6)
    assert d.face_pmf(0) == 0
    assert d.face_pmf(7) == 0
    assert d.face_cdf(0) == 0
    assert d.face_cdf(3) == Fraction(1, 2)
    assert d.face_cdf(6) == 1
    assert d.face_cdf(9) == 1


def test_die_spec_validation():
    with pytest.raises(DomainError) as e:
        DieSpec(faces=0)
    assert e.value.field == "faces"
    with pytest.raises(DomainError) as e:
        DieSpec(count=0)
    assert e.value.field == "count"


def test_query_validation_fields():
    with pytest.raises(DomainError) as e:
        OrderStatQuery(n=0, k=1, m=1)
    assert e.value.field == "n"
    with pytest.raises(DomainError) as e:
        OrderStatQuery(n=2, k=3, m=1)
    assert e.value.field == "k"
    with pytest.raises(DomainError) as e:
        OrderStatQuery(n=2, k=1, m=7)
    assert e.value.field == "m"
    with pytest.raises(DomainError) as e:
        OrderStatQuery(n=2, k=1, m=1, faces=0)
    assert e.value.field == "faces"


# Frozen from the enumeration oracle: median of three dice.
def test_median_of_three_frozen():
    assert order_stat_cdf(OrderStatQuery(n=3, k=2, m=4)) == Fraction(20, 27)
    assert order_stat_pmf(OrderStatQuery(n=3, k=2, m=3)) == Fraction(13, 54)


def test_max_of_two_frozen():
    assert order_stat_pmf(OrderStatQuery(n=2, k=2, m=6)) == Fraction(11, 36)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("faces", [3, 6])
def test_pmf_normalizes(n, faces):
    for k in range(1, n + 1):
        total = sum(
            order_stat_pmf(OrderStatQuery(n=n, k=k, m=m, faces=faces))
            for m in range(1, faces + 1)
        )
        assert total == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_cdf_is_running_pmf_sum(n):
    for k in range(1, n + 1):
        running = Fraction(0)
        for m in range(1, 7):
            running += order_stat_pmf(OrderStatQuery(n=n, k=k, m=m))
            assert running == order_stat_cdf(OrderStatQuery(n=n, k=k, m=m))
        assert running == 1


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("faces", [3, 6])
def test_matches_enumeration(n, faces):
    total = faces**n
    for k in range(1, n + 1):
        counts = order_stat_counts(n, k, faces)
        for m in range(1, faces + 1):
            expected = Fraction(counts[m], total)
            assert order_stat_pmf(OrderStatQuery(n=n, k=k, m=m, faces=faces)) == expected


def test_strict_inequality_form():
    # P(X_(k) < m) has its own binomial sum with success probability
    # shifted by one face; it must agree with the CDF evaluated at m - 1.
    for n in range(1, 5):
        for k in range(1, n + 1):
            for m in range(1, 7):
                printed = sum(
                    comb(n, j)
                    * Fraction(7 - m, 6) ** j
                    * Fraction(m - 1, 6) ** (n - j)
                    for j in range(0, n - k + 1)
                )
                below = (
                    order_stat_cdf(OrderStatQuery(n=n, k=k, m=m - 1))
                    if m > 1
                    else Fraction(0)
                )
                assert printed == below
                assert (
                    order_stat_pmf(OrderStatQuery(n=n, k=k, m=m))
                    == order_stat_cdf(OrderStatQuery(n=n, k=k, m=m)) - below
                )


def test_maximum_closed_forms():
    # The largest of n dice admits power forms: P(X_(n) < m) = ((m-1)/6)^n
    # and P(X_(n) = m) = (m^n - (m-1)^n) / 6^n.
    for n in range(1, 6):
        for m in range(1, 7):
            below = Fraction(m - 1, 6) ** n
            at = Fraction(m**n - (m - 1) ** n, 6**n)
            if m > 1:
                assert order_stat_cdf(OrderStatQuery(n=n, k=n, m=m - 1)) == below
            assert order_stat_pmf(OrderStatQuery(n=n, k=n, m=m)) == at


def test_second_highest_closed_form():
    # P(X_(n-1) = m) written out with the two correction terms for the
    # highest die sitting at or above m.
    for n in range(2, 6):
        for m in range(1, 7):
            closed = (
                Fraction(m, 6) ** n
                - Fraction(m - 1, 6) ** n
                + n
                * (
                    (1 - Fraction(m, 6)) * Fraction(m, 6) ** (n - 1)
                    - Fraction(7 - m, 6) * Fraction(m - 1, 6) ** (n - 1)
                )
            )
            assert order_stat_pmf(OrderStatQuery(n=n, k=n - 1, m=m)) == closed


def test_top_two_joint_frozen():
    three = top_two_joint_pmf(3)
    assert three[(6, 4)] == Fraction(7, 72)
    assert three[(6, 6)] == Fraction(2, 27)
    two = top_two_joint_pmf(2)
    assert two[(6, 6)] == Fraction(1, 36)
    assert two[(5, 3)] == Fraction(1, 18)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_top_two_matches_enumeration(n):
    joint = top_two_joint_pmf(n)
    counts = top_two_counts(n)
    assert dict(joint.items()) == {
        pair: Fraction(c, 6**n) for pair, c in counts.items()
    }
    assert joint.is_normalized


@pytest.mark.parametrize("n", [2, 3, 4])
def test_top_two_marginals_are_order_stats(n):
    joint = top_two_joint_pmf(n)
    for m in range(1, 7):
        highest = sum(p for (h, _), p in joint.items() if h == m)
        second = sum(p for (_, s), p in joint.items() if s == m)
        assert highest == order_stat_pmf(OrderStatQuery(n=n, k=n, m=m))
        assert second == order_stat_pmf(OrderStatQuery(n=n, k=n - 1, m=m))


def test_top_two_requires_two_dice():
    with pytest.raises(DomainError) as e:
        top_two_joint_pmf(1)
    assert e.value.field == "n"


def test_best_die_frozen_values():
    assert attacker_wins_best(1, 1) == Fraction(15, 36)
    assert attacker_wins_best(3, 1) == Fraction(855, 1296)
    assert attacker_wins_best(3, 2) == Fraction(3667, 7776)


def test_best_die_matches_enumeration():
    for n_a in range(1, 5):
        for n_d in range(1, 4):
            assert attacker_wins_best(n_a, n_d) == best_die_win_probability(n_a, n_d)


def test_best_die_complementarity():
    # Either the attacker's maximum is strictly larger or the defender's
    # is at least as large; on a fair die the tie mass is what separates
    # the two directions.
    for n_a in range(1, 4):
        for n_d in range(1, 4):
            a_beats = attacker_wins_best(n_a, n_d)
            d_holds = best_die_win_probability(n_d, n_a) + _tie_mass(n_a, n_d)
            assert a_beats + d_holds == 1


def _tie_mass(n_a: int, n_d: int) -> Fraction:
    return sum(
        order_stat_pmf(OrderStatQuery(n=n_a, k=n_a, m=m))
        * order_stat_pmf(OrderStatQuery(n=n_d, k=n_d, m=m))
        for m in range(1, 7)
    )


def test_best_die_small_faces_cross_check():
    for n_a in range(1, 4):
        for n_d in range(1, 4):
            assert attacker_wins_best(n_a, n_d, faces=3) == best_die_win_probability(
                n_a, n_d, faces=3
            )


def test_best_die_validation():
    with pytest.raises(DomainError) as e:
        attacker_wins_best(0, 1)
    assert e.value.field == "n_a"
    with pytest.raises(DomainError) as e:
        attacker_wins_best(1, 0)
    assert e.value.field == "n_d"
