import pytest
from hypothesis import given
from hypothesis import strategies as st

from kax.errors import BudgetExceededError
from kax.words import (
    CyclicWord,
    brute_force_orbits,
    canonicalize,
    count_aperiodic,
    count_axes,
    count_by_enumeration,
    enumerate_aperiodic,
    enumerate_axes,
    parse_word,
    period,
    render_word,
)


def w(text):
    return parse_word(text, 26)


def test_period_examples():
    assert period(w("aaaa")) == 1
    assert period(w("abab")) == 2
    assert period(w("aab")) == 3


def test_period_rejects_empty():
    with pytest.raises(ValueError):
        period(())


def test_canonicalize_examples():
    assert canonicalize(w("ba")) == CyclicWord(w("ab"), 2)
    assert canonicalize(w("bab")) == CyclicWord(w("abb"), 3)
    assert canonicalize(w("aa")) == CyclicWord(w("aa"), 1)


words_strategy = st.lists(
    st.integers(min_value=0, max_value=3), min_size=1, max_size=12
).map(tuple)


@given(words_strategy, st.integers(min_value=0, max_value=11))
def test_canonicalize_rotation_invariant(word, k):
    k %= len(word)
    rotated = word[k:] + word[:k]
    assert canonicalize(rotated) == canonicalize(word)


@given(words_strategy)
def test_period_divides_length(word):
    assert len(word) % period(word) == 0


@given(words_strategy)
def test_canonical_is_least_rotation(word):
    canon = canonicalize(word).canonical
    rotations = [word[k:] + word[:k] for k in range(len(word))]
    assert canon == min(rotations)


def test_count_aperiodic_examples():
    for d in (1, 2, 5):
        assert count_aperiodic(1, d) == d
    assert count_aperiodic(4, 2) == 3
    assert count_aperiodic(6, 2) == 9


def test_count_axes_examples():
    for d in (1, 2, 7):
        assert count_axes(1, d) == 0
    assert count_axes(2, 2) == 1
    assert count_axes(3, 3) == 2


def test_enumerate_aperiodic_examples():
    assert [str(x) for x in enumerate_aperiodic(2, 2)] == ["ab"]
    assert [str(x) for x in enumerate_aperiodic(1, 3)] == ["a", "b", "c"]
    assert [str(x) for x in enumerate_aperiodic(3, 2)] == ["aab", "abb"]


def test_enumerate_axes_examples():
    assert [str(x) for x in enumerate_axes(2, 2)] == ["ab"]
    assert enumerate_axes(1, 2) == []
    assert enumerate_axes(4, 2) == []


def test_enumeration_matches_brute_force():
    # cross-check the necklace generator against the dumb scan
    for d in (1, 2, 3):
        for s in range(1, 8):
            assert enumerate_aperiodic(s, d) == brute_force_orbits(s, d)
            assert enumerate_axes(s, d) == brute_force_orbits(s, d, axes=True)


def test_counts_match_enumeration_small_grid():
    for d in (1, 2, 3, 4):
        for s in range(1, 9):
            assert count_aperiodic(s, d) == len(enumerate_aperiodic(s, d))
            assert count_axes(s, d) == len(enumerate_axes(s, d))


def test_partition_identity():
    from kax.numtheory import divisors

    for d in (1, 2, 3, 4):
        for m in range(1, 13):
            assert sum(s * count_aperiodic(s, d) for s in divisors(m)) == d**m


def test_budget_enforced():
    with pytest.raises(BudgetExceededError):
        enumerate_aperiodic(30, 3, budget=10**4)
    with pytest.raises(BudgetExceededError):
        count_by_enumeration(30, 3, budget=10**4)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("KAX_BUDGET", "3")
    with pytest.raises(BudgetExceededError):
        enumerate_aperiodic(2, 2)
    monkeypatch.setenv("KAX_BUDGET", "100")
    assert len(enumerate_aperiodic(2, 2)) == 1


def test_render_parse_roundtrip():
    assert render_word((0, 1, 2)) == "abc"
    assert parse_word("abc", 3) == (0, 1, 2)
    big = tuple(range(30))
    assert parse_word(render_word(big), 30) == big
    with pytest.raises(ValueError):
        parse_word("abc", 2)
