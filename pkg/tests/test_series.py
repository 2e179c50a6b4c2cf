"""Core series-ring behaviour: construction, arithmetic, Laurent floors,
truncation, substitution, comparison, and rendering."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from qsw.series import (
    DEFAULT_TABLE, DivisionByNonUnit, TruncationSpec, VarTable,
    VarTableMismatch, VariableNotFound, caps, constant, equals_mod_caps,
    make_series, mono, one, q_power, variable, zero,
)

Q = Fraction
C = caps(5)


def var(name, c=C):
    return variable(name, caps_=c)


def qp(e, c=C):
    return q_power(e, caps_=c)


# -- construction ---------------------------------------------------------------


def test_make_series_constant_one():
    s = make_series([(1, mono(0))], C)
    assert s == one(caps_=C)
    assert s.text() == "1"


def test_make_series_merges_duplicates():
    s = make_series([(1, mono(0, {"x": 1})), (1, mono(0, {"x": 1}))], C)
    assert s.text() == "2*x"


def test_make_series_drops_outside_caps():
    s = make_series([(1, mono(7))], C)
    assert s.is_zero()
    assert s.qfloor == 0


def test_reserved_q_and_unknown_variable():
    with pytest.raises(VariableNotFound):
        DEFAULT_TABLE.slot("nope")
    with pytest.raises(VariableNotFound):
        DEFAULT_TABLE.slot("q")
    with pytest.raises(ValueError):
        VarTable(("x", "q"))


# -- add/sub/neg -----------------------------------------------------------------


def test_add_basic():
    x = var("x")
    assert ((1 + x) + (1 - x)).text() == "2"


def test_add_identity():
    f = 3 * var("x") + qp(2)
    assert f + zero(caps_=C) == f


def test_laurent_cancellation_renormalizes_floor():
    m = qp(-1)
    s = m + (-m)
    assert s.is_zero() and s.qfloor == 0


def test_add_caps_meet():
    f = one(caps_=caps(5))
    g = one(caps_=caps(9))
    assert (f + g).caps.qmax == 5


def test_table_mismatch():
    other = VarTable(("q", "u"))
    f = one(caps_=C)
    g = one(other, TruncationSpec(5, (3,)))
    with pytest.raises(VarTableMismatch):
        f + g


# -- mul -------------------------------------------------------------------------


def test_mul_hand_expansion():
    x = var("x")
    p = (1 - x) * (1 - qp(1) * x)
    assert p.text() == "1 - x - q*x + q*x^2"


def test_mul_identity():
    f = 2 * var("y") + qp(3) * var("x")
    assert f * one(caps_=C) == f


def test_mul_ideal_membership():
    x = var("x")
    assert (x ** 5 * x ** 4).is_zero()  # x-cap is 8


def test_mul_floors_add():
    f = qp(-2) * (1 + qp(1))
    g = qp(-1)
    assert (f * g).qfloor == -3


# -- div -------------------------------------------------------------------------


def test_div_geometric():
    c2 = caps(2)
    g = one(caps_=c2) - q_power(1, caps_=c2)
    assert (one(caps_=c2) / g).text() == "1 + q + q^2"


def test_div_self():
    f = 1 + qp(1) * var("x") - 2 * var("y")
    assert (f / f) == one(caps_=C)


def test_div_nonunit_raises():
    with pytest.raises(DivisionByNonUnit):
        one(caps_=C) / var("x")


def test_div_laurent_floor_difference():
    f = qp(-2) * (1 + var("x"))
    h = one(caps_=C) / f
    ok, _ = equals_mod_caps(f * h, one(caps_=C))
    assert ok
    assert h.min_qexp() == 2


# -- coeff / substitution ----------------------------------------------------------


def test_coeff_hand_expansion():
    x = var("x")
    p = (1 - x) * (1 - qp(1) * x)
    assert p.coeff(mono(1, {"x": 1})) == -1


def test_coeff_zero_series():
    assert zero(caps_=C).coeff(mono(3, {"y": 2})) == 0


def test_coeff_geometric():
    f = one(caps_=C) / (1 - qp(1))
    assert f.coeff(mono(2)) == 1


def test_substitute_scale_by_q():
    x = var("x")
    s = (x * x).substitute("x", 1, mono(1, {"x": 1}))
    assert s.text() == "q^2*x^2"


def test_substitute_negative_power():
    x, y = var("x"), var("y")
    s = (x + qp(1) * y).substitute("y", 1, mono(-1, {"y": 1}))
    assert s == x + y


def test_substitute_rational_binding():
    x = var("x")
    s = (1 - x).substitute("x", Q(1, 2), mono(0))
    assert s == constant(Q(1, 2), caps_=C)


def test_substitute_laurent_result():
    y = var("y")
    s = (y ** 2).substitute("y", 1, mono(-1, {"y": 1}))
    assert s.qfloor == -2
    assert s.coeff(mono(-2, {"y": 2})) == 1


def test_substitute_unknown_variable():
    with pytest.raises(VariableNotFound):
        one(caps_=C).substitute("nope", 1, mono(0))


# -- equals_mod_caps ----------------------------------------------------------------


def test_equals_self():
    f = 1 + qp(1) + var("x") * var("y")
    ok, w = equals_mod_caps(f, f)
    assert ok and w is None


def test_equals_meet_window():
    f = make_series([(1, mono(0)), (1, mono(1))], caps(5))
    g = make_series([(1, mono(0)), (1, mono(1)), (1, mono(7))], caps(10))
    ok, _ = equals_mod_caps(f, g)
    assert ok


def test_equals_witness_least_monomial():
    f = one(caps_=C)
    g = one(caps_=C) + qp(1)
    ok, (m, cf, cg) = equals_mod_caps(f, g)
    assert not ok
    assert m == mono(1) and cf == 0 and cg == 1


# -- truncate / windows --------------------------------------------------------------


def test_truncate_to_smaller_caps():
    f = (1 + qp(1)) ** 3
    g = f.truncate(caps(1))
    assert g.text() == "1 + 3*q"


# -- rendering ------------------------------------------------------------------------


def test_text_canonical_order_and_signs():
    s = make_series(
        [(Q(-3, 2), mono(2, {"x": 1})), (1, mono(0)), (-1, mono(0, {"y": 1}))],
        C)
    assert s.text() == "1 - y - 3/2*q^2*x"


def test_text_zero():
    assert zero(caps_=C).text() == "0"


def test_render_bit_exact_for_equal_series():
    a = make_series([(1, mono(0, {"x": 1})), (2, mono(3))], C)
    b = make_series([(2, mono(3)), (1, mono(0, {"x": 1}))], C)
    assert a.text() == b.text()
    assert a.json_text() == b.json_text()


def test_json_fields():
    s = qp(-1) * (1 + qp(1) * var("x"))
    d = s.to_json_dict()
    assert set(d) == {"qFloor", "caps", "terms"}
    assert d["qFloor"] == -1
    assert d["caps"]["qMax"] == 5
    assert d["terms"][0] == {"coeff": "1/1", "mono": {"q": -1}}
    assert d["terms"][1] == {"coeff": "1/1", "mono": {"q": 0, "x": 1}}
    json.dumps(d)  # serializable


# -- integer exponent identities -------------------------------------------------------


def test_binomial_exponent_identities():
    for n in range(51):
        for k in range(n + 1):
            assert math.comb(n + k, 2) == math.comb(n, 2) + math.comb(k, 2) + n * k
            assert math.comb(n - k, 2) == math.comb(n, 2) + math.comb(k, 2) + k * (1 - n)


# -- randomized ring properties ----------------------------------------------------------

coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=3)
exps = st.tuples(st.integers(min_value=0, max_value=4),
                 st.integers(min_value=0, max_value=2),
                 st.integers(min_value=0, max_value=2))


@st.composite
def series_st(draw, min_terms=0):
    pcaps = caps(6, default=0, x=3, y=3)
    entries = draw(st.lists(st.tuples(coeffs, exps), min_size=min_terms,
                            max_size=4))
    return make_series(
        [(c, mono(qe, {"x": xe, "y": ye})) for c, (qe, xe, ye) in entries],
        pcaps)


@st.composite
def unit_series_st(draw):
    c0 = draw(st.fractions(min_value=-4, max_value=4, max_denominator=3)
              .filter(lambda f: f != 0))
    return constant(c0, caps_=caps(6, default=0, x=3, y=3)) + draw(series_st())


@settings(max_examples=250, deadline=None)
@given(series_st(), series_st(), series_st())
def test_add_associative_commutative(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f


@settings(max_examples=250, deadline=None)
@given(series_st(), series_st(), series_st())
def test_mul_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@settings(max_examples=250, deadline=None)
@given(series_st(), series_st())
def test_mul_commutative(f, g):
    assert f * g == g * f


@settings(max_examples=250, deadline=None)
@given(series_st(), series_st(), series_st())
def test_mul_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h


@settings(max_examples=150, deadline=None)
@given(series_st(), unit_series_st())
def test_div_exact(f, g):
    assume(g.constant_term() != 0)
    h = f / g
    ok, _ = equals_mod_caps(g * h, f)
    assert ok


@settings(max_examples=150, deadline=None)
@given(series_st(), series_st())
def test_truncation_coherence_mul(f, g):
    small = caps(3, default=0, x=1, y=1)
    assert (f * g).truncate(small) == f.truncate(small) * g.truncate(small)


@settings(max_examples=150, deadline=None)
@given(series_st(), series_st())
def test_truncation_coherence_add(f, g):
    small = caps(3, default=0, x=2, y=1)
    assert (f + g).truncate(small) == f.truncate(small) + g.truncate(small)


@settings(max_examples=100, deadline=None)
@given(series_st(), unit_series_st())
def test_truncation_coherence_div(f, g):
    assume(g.constant_term() != 0)
    small = caps(3, default=0, x=1, y=1)
    assert (f / g).truncate(small) == f.truncate(small) / g.truncate(small)


@settings(max_examples=100, deadline=None)
@given(series_st())
def test_substitute_identity(f):
    assert f.substitute("x", 1, mono(0, {"x": 1})) == f
