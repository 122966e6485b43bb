import json

import pytest

from kax.kcalc import (
    RingSpec,
    axes_relative_k,
    dual_numbers_big_witt_order,
    dual_numbers_k,
    group_expr_from_dict,
    group_expr_to_dict,
    integral_k_finite_field,
    normalize_for_roundtrip,
    order,
    parse_ring_spec,
    relative_k,
    table,
)

F2 = RingSpec.finite_field(2)
F3 = RingSpec.finite_field(3)
F4 = RingSpec.finite_field(2, 2)
F9 = RingSpec.finite_field(3, 2)


def test_ring_spec_parsing():
    assert parse_ring_spec("Fq:9") == F9
    assert parse_ring_spec("perfect:k:3") == RingSpec("perfect_fp", 3, name="k")
    assert parse_ring_spec("perfectoid:R:5") == RingSpec("perfectoid", 5, name="R")
    assert parse_ring_spec("zpcycl:3") == RingSpec("zp_cyclotomic", 3)
    from kax.errors import KaxError

    with pytest.raises(KaxError):
        parse_ring_spec("Fq:12")
    with pytest.raises(KaxError):
        parse_ring_spec("nonsense")


def test_relative_k_examples():
    e = relative_k(F3, 2, 1)
    assert order(e) == 9
    assert [(f.length, f.multiplicity) for f in e.factors] == [(1, 2)]

    assert relative_k(F3, 2, 0).is_trivial
    assert relative_k(F9, 3, -4).is_trivial

    e = relative_k(F3, 2, 2)
    assert order(e) == 3
    assert [(f.m_prime, f.s, f.length) for f in e.factors] == [(2, 2, 1)]

    e = relative_k(F3, 1, 3)
    assert order(e) == 9
    assert [(f.m_prime, f.s, f.length) for f in e.factors] == [(1, 1, 2)]


def test_relative_k_rejects_bad_d():
    with pytest.raises(ValueError):
        relative_k(F3, 0, 1)


def test_even_degrees_trivial_for_one_variable():
    for ring in (F2, F3, RingSpec.finite_field(5)):
        for degree in range(0, 21, 2):
            assert relative_k(ring, 1, degree).is_trivial


def test_degree_one_order_is_q_to_the_d():
    for ring in (F2, F3, F4, RingSpec.finite_field(5), F9):
        for d in (1, 2, 3):
            assert order(relative_k(ring, d, 1)) == ring.q**d


def test_p2_odd_degree_structure():
    # F_2, d = 1, degree 3: one field factor for each odd m' <= 3
    e = relative_k(F2, 1, 3)
    assert order(e) == 4
    assert [(f.m_prime, f.s, f.length) for f in e.factors] == [(1, 1, 1), (3, 1, 1)]


def test_symbolic_rings():
    k = RingSpec("perfect_fp", 3, name="k")
    e = relative_k(k, 2, 1)
    assert order(e) == "symbolic"
    assert e.completeness == "integral-because-p-power-torsion"
    zp = RingSpec("zp_cyclotomic", 3)
    e = relative_k(zp, 2, 1)
    assert e.completeness == "p-complete"
    assert order(e) == "symbolic"
    assert e.factors[0].ring.label() == "Z_3^cycl"


def test_finiteness_under_bound_doubling():
    from kax.tbounds import m_prime_bound

    for p, ring in ((2, F2), (3, F3)):
        for d in (1, 2):
            for degree in range(0, 15):
                bound = m_prime_bound(p, degree)
                assert relative_k(ring, d, degree) == relative_k(
                    ring, d, degree, m_prime_limit=2 * bound
                )


def test_axes_examples():
    for degree in range(1, 12):
        assert axes_relative_k(F3, 1, degree).is_trivial

    e = axes_relative_k(F3, 2, 2)
    assert order(e) == 3
    assert [(f.m_prime, f.s) for f in e.factors] == [(2, 2)]

    assert axes_relative_k(F3, 3, 1).is_trivial


def test_dual_numbers():
    e = dual_numbers_k(F3, 3)
    assert order(e) == 9
    assert dual_numbers_big_witt_order(F3, 3) == 9
    e = dual_numbers_k(F2, 3)
    assert order(e) == 4
    assert dual_numbers_big_witt_order(F2, 3) == 4
    for ring in (F2, F3):
        assert dual_numbers_k(ring, 2).is_trivial
    assert dual_numbers_big_witt_order(F3, 2) is None


def test_integral_examples():
    e = integral_k_finite_field(3, 2, 0)
    assert [f.kind for f in e.factors] == ["free"]
    assert order(e) == "infinite"

    e = integral_k_finite_field(3, 1, 1)
    kinds = [(f.kind, f.factor_order()) for f in e.factors]
    assert kinds == [("cyclic", 2), ("witt", 3)]
    assert order(e) == 6

    assert integral_k_finite_field(4, 1, 2).is_trivial

    # K_1(F_2) = 0, so only the relative part survives
    e = integral_k_finite_field(2, 1, 1)
    assert [f.kind for f in e.factors] == ["witt"]


def test_quillen_conventions():
    # degree 5 = 2r+1 with r = 2: standard exponent 3, paper exponent 1
    std = integral_k_finite_field(3, 1, 5, "standard")
    paper = integral_k_finite_field(3, 1, 5, "paper")
    std_cyc = [f.order for f in std.factors if f.kind == "cyclic"]
    paper_cyc = [f.order for f in paper.factors if f.kind == "cyclic"]
    assert std_cyc == [3**3 - 1]
    assert paper_cyc == [3 - 1]
    # the "paper" convention's exponent is undefined below degree 5: no
    # cyclic summand is emitted there
    low = integral_k_finite_field(3, 1, 1, "paper")
    assert [f.kind for f in low.factors] == ["witt"]
    with pytest.raises(ValueError):
        integral_k_finite_field(3, 1, 1, "bogus")


def test_integral_rejects_negative_degree():
    with pytest.raises(ValueError):
        integral_k_finite_field(3, 1, -1)


def test_table():
    t = table(F3, 1, 3, "square")
    assert [order(e) for e in t] == [1, 3, 1, 9]
    t = table(F3, 1, 0, "integral")
    assert order(t[0]) == "infinite"
    t = table(F2, 1, 1, "square")
    assert [order(e) for e in t] == [1, 2]


def test_w0_never_emitted():
    for ring in (F2, F3, F4):
        for variant in ("square", "axes"):
            for e in table(ring, 2, 16, variant):
                assert all(f.length >= 1 for f in e.factors if f.kind == "witt")


def test_canonical_ordering_and_determinism():
    a = relative_k(F3, 3, 9)
    b = relative_k(F3, 3, 9)
    assert a == b
    keys = [(f.m_prime, f.s) for f in a.factors]
    assert keys == sorted(keys)


def test_json_roundtrip():
    for expr in (
        relative_k(F3, 2, 5),
        relative_k(F2, 2, 4),
        integral_k_finite_field(9, 2, 3),
        relative_k(RingSpec("perfectoid", 3, name="R"), 2, 3),
        relative_k(F3, 1, 0),
    ):
        data = json.loads(json.dumps(group_expr_to_dict(expr)))
        back = group_expr_from_dict(data)
        assert back == normalize_for_roundtrip(expr)


def test_multiplicity_serialized_as_string():
    data = group_expr_to_dict(relative_k(F3, 2, 1))
    assert data["factors"][0]["multiplicity"] == "2"
    assert data["complete"] == "integral"
