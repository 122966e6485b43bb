"""Assembly of the K-group formulas into structured abelian-group values.

relative_k implements the closed-form description of the p-adic relative
K-groups of R[x_1..x_d]/(x_1..x_d)^2 for R a perfectoid coefficient ring:
a finite product of truncated Witt vector groups W_k(R), indexed by an
integer m', a divisor s, and a cyclic word of period s.  The axes variant
swaps the word count for the adjacent-distinct count, the dual-numbers
variant is d = 1, and the integral variant (finite fields only) adds the
Z and Z/(q^i - 1) summands of the K-theory of the residue field.

Branch structure, with r the half-degree:

* p odd, degree 2r:    m' twice a unit mod p, t = t_ev(p, r, m'),
                       s | m' p^(t-1) even, factor W_(t - v_p(s)).
* p odd, degree 2r+1:  m' odd coprime to p, t = t_od(p, r, m'),
                       s | m' p^(t-1), factor W_(t - v_p(s)).
* p = 2, degree 2r:    m' even, t = t_ev(2, r, m'), s | m' 2^(t-1) even,
                       factor W_(t - v_2(s)).
* p = 2, degree 2r+1:  m' odd with m' <= 2r+1, s | m', one factor
                       W_1 = R per (s, word).

Length-0 Witt factors are pruned throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Callable, Literal

from .errors import KaxError
from .numtheory import divisors, in_jp, require_prime, vp
from .tbounds import m_prime_bound, t_ev, t_od
from .witt import big_witt_order, order_Wn
from .words import count_aperiodic, count_axes

Variant = Literal["square", "axes", "dual", "integral"]


# ---------------------------------------------------------------------------
# ring descriptors


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: finite field or one of the symbolic families."""

    kind: Literal["finite_field", "perfect_fp", "perfectoid", "zp_cyclotomic"]
    p: int
    f: int = 1
    name: str = ""

    def __post_init__(self):
        require_prime(self.p)

    @property
    def is_symbolic(self) -> bool:
        return self.kind != "finite_field"

    @property
    def q(self) -> int:
        if self.kind != "finite_field":
            raise ValueError("only finite fields have an order")
        return self.p**self.f

    def label(self) -> str:
        if self.kind == "finite_field":
            return f"F_{self.q}"
        if self.kind == "zp_cyclotomic":
            return f"Z_{self.p}^cycl"
        return self.name or "R"

    @staticmethod
    def finite_field(p: int, f: int = 1) -> "RingSpec":
        return RingSpec("finite_field", p, f)

    @staticmethod
    def from_q(q: int) -> "RingSpec":
        from .numtheory import factor_prime_power

        p, f = factor_prime_power(q)
        return RingSpec("finite_field", p, f)


def parse_ring_spec(text: str) -> RingSpec:
    """Parse the CLI ring syntax: Fq:<q> | perfect:<name>:<p> |
    perfectoid:<name>:<p> | zpcycl:<p>."""
    parts = text.split(":")
    try:
        if parts[0] == "Fq" and len(parts) == 2:
            return RingSpec.from_q(int(parts[1]))
        if parts[0] == "perfect" and len(parts) == 3:
            return RingSpec("perfect_fp", int(parts[2]), name=parts[1])
        if parts[0] == "perfectoid" and len(parts) == 3:
            return RingSpec("perfectoid", int(parts[2]), name=parts[1])
        if parts[0] == "zpcycl" and len(parts) == 2:
            return RingSpec("zp_cyclotomic", int(parts[1]))
    except ValueError as exc:
        raise KaxError(f"bad ring spec {text!r}: {exc}") from exc
    raise KaxError(f"unrecognized ring spec {text!r}")


# ---------------------------------------------------------------------------
# group expressions


@dataclass(frozen=True)
class GroupFactor:
    """One factor of a finite(ly generated) abelian group expression."""

    kind: Literal["witt", "cyclic", "free"]
    multiplicity: int = 1
    length: int | None = None  # witt
    ring: RingSpec | None = None  # witt
    order: int | None = None  # cyclic
    rank: int | None = None  # free
    m_prime: int | None = None
    s: int | None = None
    nu: int | None = None

    def factor_order(self) -> int | None:
        """Order of a single copy, or None if infinite/symbolic."""
        if self.kind == "free":
            return None
        if self.kind == "cyclic":
            return self.order
        assert self.ring is not None and self.length is not None
        if self.ring.is_symbolic:
            return None
        return order_Wn(self.ring.p, self.ring.f, self.length)


@dataclass(frozen=True)
class GroupExpr:
    """Formal finite(ly generated) abelian group, canonically ordered."""

    degree: int
    p: int
    completeness: str  # "p-complete" | "integral" | "integral-because-p-power-torsion"
    factors: tuple[GroupFactor, ...] = field(default_factory=tuple)

    @property
    def is_trivial(self) -> bool:
        return not self.factors


def _sort_key(gf: GroupFactor):
    kind_rank = {"free": 0, "cyclic": 1, "witt": 2}[gf.kind]
    return (
        kind_rank,
        gf.m_prime if gf.m_prime is not None else -1,
        gf.s if gf.s is not None else -1,
        gf.nu if gf.nu is not None else -1,
        gf.length if gf.length is not None else -1,
        gf.order if gf.order is not None else -1,
    )


def order(expr: GroupExpr) -> int | str:
    """Product of factor orders, or "infinite" / "symbolic"."""
    total = 1
    for gf in expr.factors:
        if gf.kind == "free" and (gf.rank or 0) > 0:
            return "infinite"
        o = gf.factor_order()
        if o is None:
            return "symbolic"
        total *= o**gf.multiplicity
    return total


# ---------------------------------------------------------------------------
# the relative K-group assembly


def _completeness(ring: RingSpec) -> str:
    if ring.kind in ("finite_field", "perfect_fp"):
        # the relative homotopy is p-power torsion, so nothing is lost
        # integrally
        return "integral-because-p-power-torsion"
    return "p-complete"


def _witt_factor(
    ring: RingSpec, length: int, mult: int, m_prime: int, s: int, nu: int | None = None
) -> GroupFactor:
    return GroupFactor(
        "witt",
        multiplicity=mult,
        length=length,
        ring=ring,
        m_prime=m_prime,
        s=s,
        nu=nu,
    )


def _assemble_relative(
    ring: RingSpec,
    d: int,
    degree: int,
    counter: Callable[[int, int], int],
    m_prime_limit: int | None = None,
) -> tuple[GroupFactor, ...]:
    p = ring.p
    if d < 1:
        raise ValueError("d must be >= 1")
    if degree <= 0:
        return ()
    bound = m_prime_limit if m_prime_limit is not None else m_prime_bound(p, degree)
    factors: list[GroupFactor] = []
    if degree % 2 == 0:
        r = degree // 2
        for m_prime in range(2, bound + 1, 2):
            if p != 2 and not in_jp(p, m_prime):
                continue
            t = t_ev(p, r, m_prime)
            if t == 0:
                continue
            for s in divisors(m_prime * p ** (t - 1)):
                if s % 2 != 0:
                    continue
                length = t - vp(p, s)
                if length <= 0:
                    continue
                mult = counter(s, d)
                if mult == 0:
                    continue
                factors.append(_witt_factor(ring, length, mult, m_prime, s))
    else:
        r = (degree - 1) // 2
        for m_prime in range(1, bound + 1, 2):
            if p != 2 and not in_jp(p, m_prime):
                continue
            t = t_od(p, r, m_prime)
            if t == 0:
                continue
            if p == 2:
                # one W_1 = R factor per divisor of m' and word; see the
                # module docstring for why this branch is not nu-indexed
                for s in divisors(m_prime):
                    mult = counter(s, d)
                    if mult == 0:
                        continue
                    factors.append(_witt_factor(ring, 1, mult, m_prime, s, nu=0))
            else:
                for s in divisors(m_prime * p ** (t - 1)):
                    length = t - vp(p, s)
                    if length <= 0:
                        continue
                    mult = counter(s, d)
                    if mult == 0:
                        continue
                    factors.append(_witt_factor(ring, length, mult, m_prime, s))
    return tuple(sorted(factors, key=_sort_key))


def relative_k(
    ring: RingSpec, d: int, degree: int, m_prime_limit: int | None = None
) -> GroupExpr:
    """Relative p-adic K-group of the square-zero extension in d variables."""
    factors = _assemble_relative(ring, d, degree, count_aperiodic, m_prime_limit)
    return GroupExpr(degree, ring.p, _completeness(ring), factors)


def axes_relative_k(
    ring: RingSpec, d: int, degree: int, m_prime_limit: int | None = None
) -> GroupExpr:
    """Coordinate-axes variant: word counts restricted to adjacent-distinct."""
    factors = _assemble_relative(ring, d, degree, count_axes, m_prime_limit)
    return GroupExpr(degree, ring.p, _completeness(ring), factors)


def dual_numbers_k(ring: RingSpec, degree: int) -> GroupExpr:
    """Dual numbers R[x]/x^2: the d = 1 specialization."""
    return relative_k(ring, 1, degree)


def dual_numbers_big_witt_order(ring: RingSpec, degree: int) -> int | None:
    """Independent order presentation |W_2i(k)| / |W_i(k)| at odd degree 2i-1."""
    if ring.is_symbolic or degree < 1 or degree % 2 == 0:
        return None
    i = (degree + 1) // 2
    return big_witt_order(2 * i, ring.p, ring.f) // big_witt_order(i, ring.p, ring.f)


QUILLEN_CONVENTIONS = ("standard", "paper")


def _quillen_factors(
    q: int, degree: int, convention: str
) -> tuple[GroupFactor, ...]:
    # K-groups of the residue field F_q: Z in degree 0, Z/(q^i - 1) in
    # degree 2i-1, nothing in positive even degrees.
    if convention not in QUILLEN_CONVENTIONS:
        raise ValueError(f"unknown Quillen convention {convention!r}")
    if degree == 0:
        return (GroupFactor("free", rank=1),)
    if degree < 0 or degree % 2 == 0:
        return ()
    if convention == "standard":
        exponent = (degree + 1) // 2
    else:
        # verbatim exponent from the source display at degree 2r+1: r - 1;
        # undefined below degree 5, where we emit nothing
        exponent = (degree - 1) // 2 - 1
        if exponent < 1:
            return ()
    n = q**exponent - 1
    if n <= 1:
        return ()
    return (GroupFactor("cyclic", order=n),)


def integral_k_finite_field(
    q: int,
    d: int,
    degree: int,
    quillen_convention: str = "standard",
    m_prime_limit: int | None = None,
) -> GroupExpr:
    """Integral K-group over F_q: relative part plus the K(F_q) summand."""
    if degree < 0:
        raise ValueError("integral K-groups are computed for degree >= 0")
    ring = RingSpec.from_q(q)
    rel = _assemble_relative(ring, d, degree, count_aperiodic, m_prime_limit)
    quillen = _quillen_factors(q, degree, quillen_convention)
    factors = tuple(sorted(quillen + rel, key=_sort_key))
    return GroupExpr(degree, ring.p, "integral", factors)


def table(
    ring: RingSpec,
    d: int,
    max_degree: int,
    variant: Variant = "square",
    quillen_convention: str = "standard",
) -> list[GroupExpr]:
    """One GroupExpr per degree 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    out = []
    for degree in range(max_degree + 1):
        if variant == "square":
            out.append(relative_k(ring, d, degree))
        elif variant == "axes":
            out.append(axes_relative_k(ring, d, degree))
        elif variant == "dual":
            out.append(dual_numbers_k(ring, degree))
        elif variant == "integral":
            out.append(
                integral_k_finite_field(ring.q, d, degree, quillen_convention)
            )
        else:
            raise ValueError(f"unknown variant {variant!r}")
    return out


# ---------------------------------------------------------------------------
# JSON wire format


def _ring_to_str(ring: RingSpec) -> str:
    if ring.kind == "finite_field":
        return f"Fq:{ring.q}"
    if ring.kind == "perfect_fp":
        return f"perfect:{ring.name}:{ring.p}"
    if ring.kind == "perfectoid":
        return f"perfectoid:{ring.name}:{ring.p}"
    return f"zpcycl:{ring.p}"


def group_expr_to_dict(expr: GroupExpr) -> dict:
    factors = []
    for gf in expr.factors:
        entry: dict = {"kind": gf.kind}
        if gf.kind == "witt":
            entry["length"] = gf.length
            entry["ring"] = _ring_to_str(gf.ring)
        elif gf.kind == "cyclic":
            entry["order"] = str(gf.order)
        else:
            entry["rank"] = gf.rank
        entry["multiplicity"] = str(gf.multiplicity)
        prov = {}
        if gf.m_prime is not None:
            prov["m_prime"] = gf.m_prime
            prov["s"] = gf.s
            if gf.nu is not None:
                prov["nu"] = gf.nu
        if prov:
            entry["provenance"] = prov
        factors.append(entry)
    complete = "integral" if expr.completeness.startswith("integral") else "p-complete"
    return {
        "degree": expr.degree,
        "p": expr.p,
        "complete": complete,
        "factors": factors,
    }


def group_expr_to_json(expr: GroupExpr) -> str:
    return json.dumps(group_expr_to_dict(expr))


def group_expr_from_dict(data: dict, ring_hint: RingSpec | None = None) -> GroupExpr:
    """Parse the wire format back; provenance and structure are preserved.

    The completeness tag collapses to the two wire values, so round-tripped
    expressions compare equal up to that projection.
    """
    factors = []
    for entry in data["factors"]:
        prov = entry.get("provenance", {})
        if entry["kind"] == "witt":
            gf = GroupFactor(
                "witt",
                multiplicity=int(entry["multiplicity"]),
                length=entry["length"],
                ring=parse_ring_spec(entry["ring"]),
                m_prime=prov.get("m_prime"),
                s=prov.get("s"),
                nu=prov.get("nu"),
            )
        elif entry["kind"] == "cyclic":
            gf = GroupFactor(
                "cyclic",
                multiplicity=int(entry["multiplicity"]),
                order=int(entry["order"]),
                m_prime=prov.get("m_prime"),
                s=prov.get("s"),
                nu=prov.get("nu"),
            )
        else:
            gf = GroupFactor(
                "free", multiplicity=int(entry["multiplicity"]), rank=entry["rank"]
            )
        factors.append(gf)
    return GroupExpr(data["degree"], data["p"], data["complete"], tuple(factors))


def normalize_for_roundtrip(expr: GroupExpr) -> GroupExpr:
    """Project the completeness tag onto the wire vocabulary."""
    complete = "integral" if expr.completeness.startswith("integral") else "p-complete"
    return replace(expr, completeness=complete)
