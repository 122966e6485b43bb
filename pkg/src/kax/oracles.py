"""Brute-force verifiers, independent of the formulas they check.

Every check returns a list of ReportEntry; the package's CI gate is that
the default grids produce no failures.  The oracles never consult the
formula under test for their own answer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceededError, InternalError
from .fields import galois_field
from .kcalc import RingSpec, order, relative_k
from .numtheory import require_prime
from .witt import (
    big_witt_order,
    eval_poly_int,
    ghost,
    iso_with_zpn,
    witt_polys,
    witt_ring,
)
from .words import count_aperiodic, count_axes, count_by_enumeration


@dataclass
class ReportEntry:
    check: str
    params: dict
    status: str  # "pass" | "fail" | "skipped"
    witness: str | None = None

    def to_dict(self) -> dict:
        out = {"check": self.check, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def all_passed(report: list[ReportEntry]) -> bool:
    return all(e.status != "fail" for e in report)


# ---------------------------------------------------------------------------
# degree-1 oracle: units of the square-zero extension


class SquareZeroRing:
    """A_d(F_q) = F_q + m with m^2 = 0, elements (constant, d x-coefficients)."""

    def __init__(self, p: int, f: int, d: int):
        self.field = galois_field(p, f)
        self.d = d

    def mul(self, a, b):
        a0, av = a
        b0, bv = b
        F = self.field
        return (
            F.mul(a0, b0),
            tuple(F.add(F.mul(a0, bv[i]), F.mul(b0, av[i])) for i in range(self.d)),
        )

    def one(self):
        return (1, (0,) * self.d)

    def elements(self):
        q = self.field.q
        for a0 in range(q):
            for av in product(range(q), repeat=self.d):
                yield (a0, av)

    def one_plus_m(self):
        q = self.field.q
        for av in product(range(q), repeat=self.d):
            yield (1, av)


def k1_units(p: int, f: int, d: int, budget: int = 10**6) -> int:
    """|1 + m| by exhaustive enumeration, with invertibility verified.

    Relative K_1 along a square-zero ideal is the unit group 1 + m; this
    counts it without using the group formula.  Every element of 1 + m is
    checked to have an inverse (found by scanning 1 + m).
    """
    require_prime(p)
    q = p**f
    if q ** (d + 1) > budget:
        raise BudgetExceededError(f"|A_d| = {q}^{d + 1} exceeds budget {budget}")
    ring = SquareZeroRing(p, f, d)
    one = ring.one()
    count = 0
    for elem in ring.elements():
        if elem[0] != 1:
            continue
        count += 1
        if not any(ring.mul(elem, w) == one for w in ring.one_plus_m()):
            raise InternalError(f"element {elem} of 1 + m has no inverse")
    return count


# ---------------------------------------------------------------------------
# check suites


def check_counts(
    s_max: int = 12, d_max: int = 4, budget: int = 10**8
) -> list[ReportEntry]:
    """Mobius counts vs direct enumeration over the (s, d) grid."""
    report = []
    for d in range(1, d_max + 1):
        for s in range(1, s_max + 1):
            for name, formula in (("aperiodic", count_aperiodic), ("axes", count_axes)):
                params = {"s": s, "d": d, "family": name}
                try:
                    expected = count_by_enumeration(
                        s, d, axes=(name == "axes"), budget=budget
                    )
                except BudgetExceededError:
                    report.append(ReportEntry("counts", params, "skipped"))
                    continue
                got = formula(s, d)
                if got == expected:
                    report.append(ReportEntry("counts", params, "pass"))
                else:
                    report.append(
                        ReportEntry(
                            "counts",
                            params,
                            "fail",
                            witness=f"formula {got} != enumeration {expected}",
                        )
                    )
    return report


def _ring_axiom_failures(p: int, n: int, f: int, triples: int, rng) -> str | None:
    ring = witt_ring(p, n, f)
    q = ring.field.q
    rand_vec = lambda: tuple(rng.randrange(q) for _ in range(n))
    for _ in range(triples):
        a, b, c = rand_vec(), rand_vec(), rand_vec()
        if ring.add(a, b) != ring.add(b, a):
            return f"a+b != b+a at {a}, {b}"
        if ring.add(a, ring.add(b, c)) != ring.add(ring.add(a, b), c):
            return f"add not associative at {a}, {b}, {c}"
        if ring.mul(a, b) != ring.mul(b, a):
            return f"a*b != b*a at {a}, {b}"
        if ring.mul(a, ring.mul(b, c)) != ring.mul(ring.mul(a, b), c):
            return f"mul not associative at {a}, {b}, {c}"
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
            return f"distributivity fails at {a}, {b}, {c}"
        if ring.add(a, ring.zero) != a or ring.mul(a, ring.one) != a:
            return f"identity fails at {a}"
        if ring.add(a, ring.neg(a)) != ring.zero:
            return f"additive inverse fails at {a}"
    return None


def _ghost_failure(p: int, n: int, samples: int, rng) -> str | None:
    polys = witt_polys(p, n)
    for _ in range(samples):
        x = tuple(rng.randrange(-9, 10) for _ in range(n))
        y = tuple(rng.randrange(-9, 10) for _ in range(n))
        s = tuple(eval_poly_int(sp, x + y) for sp in polys.sum_polys)
        m = tuple(eval_poly_int(pp, x + y) for pp in polys.prod_polys)
        gx, gy = ghost(p, x), ghost(p, y)
        if ghost(p, s) != tuple(u + v for u, v in zip(gx, gy)):
            return f"ghost additivity fails at {x}, {y}"
        if ghost(p, m) != tuple(u * v for u, v in zip(gx, gy)):
            return f"ghost multiplicativity fails at {x}, {y}"
    return None


def check_witt(
    p_set=(2, 3, 5),
    n_max: int = 3,
    f_set=(1, 2),
    triples: int = 100,
    seed: int = 0,
) -> list[ReportEntry]:
    """Ring axioms, ghost identities, and the Z/p^n isomorphism oracle."""
    rng = random.Random(seed)
    report = []
    for p in p_set:
        for n in range(1, n_max + 1):
            for f in f_set:
                params = {"p": p, "n": n, "f": f}
                witness = _ring_axiom_failures(p, n, f, triples, rng)
                report.append(
                    ReportEntry(
                        "witt-ring-axioms",
                        params,
                        "fail" if witness else "pass",
                        witness,
                    )
                )
            params = {"p": p, "n": n}
            witness = _ghost_failure(p, n, 25, rng)
            report.append(
                ReportEntry(
                    "witt-ghost", params, "fail" if witness else "pass", witness
                )
            )
            try:
                iso_with_zpn(p, n)
                report.append(ReportEntry("witt-iso-zpn", params, "pass"))
            except InternalError as exc:
                report.append(ReportEntry("witt-iso-zpn", params, "fail", str(exc)))
    return report


def check_k1(
    q_set=(2, 3, 4, 5, 9), d_set=(1, 2, 3), budget: int = 10**6
) -> list[ReportEntry]:
    """order(relative_k(F_q, d, 1)) against the enumerated unit group."""
    from .numtheory import factor_prime_power

    report = []
    for q in q_set:
        p, f = factor_prime_power(q)
        for d in d_set:
            params = {"q": q, "d": d}
            try:
                expected = k1_units(p, f, d, budget=budget)
            except BudgetExceededError:
                report.append(ReportEntry("k1-units", params, "skipped"))
                continue
            got = order(relative_k(RingSpec.finite_field(p, f), d, 1))
            if got == expected:
                report.append(ReportEntry("k1-units", params, "pass"))
            else:
                report.append(
                    ReportEntry(
                        "k1-units",
                        params,
                        "fail",
                        witness=f"formula order {got} != unit count {expected}",
                    )
                )
    return report


def check_dual_numbers(p_set=(2, 3, 5), i_max: int = 5) -> list[ReportEntry]:
    """Big-Witt quotient order law at odd degrees of the dual numbers."""
    report = []
    for p in p_set:
        ring = RingSpec.finite_field(p, 1)
        for i in range(1, i_max + 1):
            params = {"p": p, "i": i, "degree": 2 * i - 1}
            got = order(relative_k(ring, 1, 2 * i - 1))
            expected = big_witt_order(2 * i, p, 1) // big_witt_order(i, p, 1)
            if got == expected:
                report.append(ReportEntry("dual-numbers-order", params, "pass"))
            else:
                report.append(
                    ReportEntry(
                        "dual-numbers-order",
                        params,
                        "fail",
                        witness=f"K order {got} != big Witt quotient {expected}",
                    )
                )
    return report


SUITES = {
    "counts": check_counts,
    "witt": check_witt,
    "k1": check_k1,
    "dual": check_dual_numbers,
}


def run_suites(names: list[str] | None = None) -> list[ReportEntry]:
    if not names or names == ["all"]:
        names = list(SUITES)
    report: list[ReportEntry] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        report.extend(SUITES[name]())
    return report
