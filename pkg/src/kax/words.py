"""Cyclic-word combinatorics.

Words are tuples of integer letters 0..d-1.  A cyclic word is the orbit of
a word under rotation; its period is the orbit size, which always divides
the length.  Two counting families live here:

* aperiodic cyclic words of length s on d letters (period exactly s),
  counted by Mobius inversion over d^u;
* the coordinate-axes variant: same, restricted to words with no two
  cyclically adjacent equal letters, counted by Mobius inversion over the
  proper-coloring count of a u-cycle.

Both counts are verified against direct enumeration by the oracle suite.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import BudgetExceededError, InternalError
from .numtheory import divisors, mobius

DEFAULT_BUDGET = 10**7

Word = tuple[int, ...]


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("KAX_BUDGET")
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


@dataclass(frozen=True, order=True)
class CyclicWord:
    """Rotation orbit of a word, keyed by its least rotation."""

    canonical: Word
    period: int

    @property
    def length(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        return render_word(self.canonical)


def render_word(w: Word) -> str:
    """Letters a..z for alphabets up to 26 letters, else dotted integers."""
    d = max(w) + 1 if w else 1
    if d <= 26:
        return "".join(chr(ord("a") + c) for c in w)
    return ".".join(str(c) for c in w)


def parse_word(text: str, d: int) -> Word:
    """Inverse of render_word for a given alphabet size."""
    if d <= 26:
        w = tuple(ord(c) - ord("a") for c in text)
    else:
        w = tuple(int(c) for c in text.split("."))
    if not w:
        raise ValueError("empty word")
    if any(c < 0 or c >= d for c in w):
        raise ValueError(f"letter out of range for alphabet of size {d}")
    return w


def period(w: Word) -> int:
    """Smallest s dividing len(w) with w invariant under rotation by s."""
    m = len(w)
    if m == 0:
        raise ValueError("empty word has no period")
    for s in divisors(m):
        if w == w[s:] + w[:s]:
            return s
    raise AssertionError("unreachable: rotation by m is the identity")


def least_rotation(w: Word) -> Word:
    """Lexicographically least rotation, Booth's algorithm, O(len(w))."""
    m = len(w)
    ww = w + w
    f = [-1] * (2 * m)
    k = 0
    for j in range(1, 2 * m):
        sj = ww[j]
        i = f[j - k - 1]
        while i != -1 and sj != ww[k + i + 1]:
            if sj < ww[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ww[k + i + 1]:
            if sj < ww[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return ww[k:k + m]


def canonicalize(w: Word) -> CyclicWord:
    """Orbit representative: least rotation plus attached period."""
    if not w:
        raise ValueError("empty word")
    return CyclicWord(least_rotation(w), period(w))


def count_aperiodic(s: int, d: int) -> int:
    """Number of cyclic words of length s on d letters with period exactly s.

    Computed as (sum over u | s of mu(s/u) d^u) / s; the sum is always
    divisible by s, which is asserted.
    """
    if s < 1 or d < 1:
        raise ValueError("count_aperiodic requires s >= 1 and d >= 1")
    total = sum(mobius(s // u) * d**u for u in divisors(s))
    if total % s != 0:
        raise InternalError(f"Mobius sum {total} not divisible by s={s}")
    return total // s


def _cycle_colorings(u: int, d: int) -> int:
    # proper colorings of a u-cycle with d colors (adjacent vertices differ);
    # for u = 1 the single vertex is adjacent to itself, so 0
    return (d - 1) ** u + (-1) ** u * (d - 1)


def count_axes(s: int, d: int) -> int:
    """Period-exactly-s cyclic words with no two cyclically adjacent equal letters."""
    if s < 1 or d < 1:
        raise ValueError("count_axes requires s >= 1 and d >= 1")
    total = sum(mobius(s // u) * _cycle_colorings(u, d) for u in divisors(s))
    if total % s != 0:
        raise InternalError(f"Mobius sum {total} not divisible by s={s}")
    return total // s


def _visit_necklaces(s: int, d: int, visit: Callable[[Word, int], None]) -> None:
    # Fredricksen-Kemp-Maier generation: visits each necklace of length s
    # exactly once, in lexicographic order of the canonical (least-rotation)
    # representative, passing the representative and its period.
    a = [0] * (s + 1)

    def gen(t: int, p: int) -> None:
        if t > s:
            if s % p == 0:
                visit(tuple(a[1:]), p)
        else:
            a[t] = a[t - p]
            gen(t + 1, p)
            for j in range(a[t - p] + 1, d):
                a[t] = j
                gen(t + 1, t)

    gen(1, 1)


def _check_budget(s: int, d: int, budget: int | None) -> None:
    if d**s > _budget(budget):
        raise BudgetExceededError(
            f"enumeration of {d}^{s} words exceeds budget {_budget(budget)}"
        )


def _is_axes_word(w: Word) -> bool:
    s = len(w)
    return all(w[i] != w[(i + 1) % s] for i in range(s))


def enumerate_aperiodic(s: int, d: int, budget: int | None = None) -> list[CyclicWord]:
    """Canonical representatives of all period-s cyclic words, sorted."""
    if s < 1 or d < 1:
        raise ValueError("enumerate_aperiodic requires s >= 1 and d >= 1")
    _check_budget(s, d, budget)
    out: list[CyclicWord] = []

    def visit(w: Word, p: int) -> None:
        if p == s:
            out.append(CyclicWord(w, p))

    _visit_necklaces(s, d, visit)
    return out


def enumerate_axes(s: int, d: int, budget: int | None = None) -> list[CyclicWord]:
    """As enumerate_aperiodic, restricted to cyclically adjacent-distinct words."""
    if s < 1 or d < 1:
        raise ValueError("enumerate_axes requires s >= 1 and d >= 1")
    _check_budget(s, d, budget)
    out: list[CyclicWord] = []

    def visit(w: Word, p: int) -> None:
        if p == s and _is_axes_word(w):
            out.append(CyclicWord(w, p))

    _visit_necklaces(s, d, visit)
    return out


def count_by_enumeration(
    s: int, d: int, axes: bool = False, budget: int | None = None
) -> int:
    """Enumeration-backed count, without materializing the word list.

    This is the independent oracle for count_aperiodic / count_axes: it
    never touches the Mobius formulas.
    """
    if s < 1 or d < 1:
        raise ValueError("count_by_enumeration requires s >= 1 and d >= 1")
    _check_budget(s, d, budget)
    n = 0

    def visit(w: Word, p: int) -> None:
        nonlocal n
        if p == s and (not axes or _is_axes_word(w)):
            n += 1

    _visit_necklaces(s, d, visit)
    return n


def brute_force_orbits(s: int, d: int, axes: bool = False) -> list[CyclicWord]:
    """Dead-simple oracle: scan all d^s words, canonicalize, deduplicate.

    Only meant for small cells; used in tests to cross-check the necklace
    generator itself.
    """
    from itertools import product

    seen: set[CyclicWord] = set()
    for w in product(range(d), repeat=s):
        if period(w) == s and (not axes or _is_axes_word(w)):
            seen.add(canonicalize(w))
    return sorted(seen)
