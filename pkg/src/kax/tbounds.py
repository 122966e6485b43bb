"""The window functions t_ev and t_od and the finite-support bound.

t_ev(p, r, m') is the unique positive t with m'*p^(t-1) <= 2r < m'*p^t,
or 0 if no such t exists; t_od is the same with 2r+1 in place of 2r.
Both are solved by exact integer scan, no logarithms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import require_prime


def _window(p: int, target: int, m_prime: int) -> int:
    # unique t >= 1 with m'*p^(t-1) <= target < m'*p^t, else 0
    require_prime(p)
    if m_prime < 1:
        raise ValueError("m_prime must be positive")
    if target < m_prime:
        return 0
    t = 1
    lower = m_prime
    while lower * p <= target:
        lower *= p
        t += 1
    # here lower = m'*p^(t-1) <= target < lower*p by loop exit
    return t


def t_ev(p: int, r: int, m_prime: int) -> int:
    """Window index for 2r; 0 when 2r < m' (in particular for r <= 0)."""
    return _window(p, 2 * r, m_prime)


def t_od(p: int, r: int, m_prime: int) -> int:
    """Window index for 2r+1; 0 when 2r+1 < m'."""
    return _window(p, 2 * r + 1, m_prime)


def m_prime_bound(p: int, degree: int) -> int:
    """Largest m' that can have a nonzero window at this degree.

    Every m' > degree has t_ev = t_od = 0 (the target is 2r or 2r+1,
    i.e. the degree itself), so all product loops stop there.  Negative
    degrees give an empty range.
    """
    require_prime(p)
    return max(degree, 0)


@dataclass(frozen=True)
class TWindow:
    """Both window values for a given (p, r, m')."""

    p: int
    r: int
    m_prime: int
    t_ev: int
    t_od: int

    @classmethod
    def compute(cls, p: int, r: int, m_prime: int) -> "TWindow":
        return cls(p, r, m_prime, t_ev(p, r, m_prime), t_od(p, r, m_prime))
