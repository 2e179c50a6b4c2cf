"""Registry shape, the verification driver, convention resolution, and the
failure/independence paths."""

import json
from fractions import Fraction

import pytest

import qsw.identities as identities
import qsw.qfunctions as qfunctions
from qsw.identities import BY_ID, IdentitySpec, garrett_candidates
from qsw.series import equals_mod_caps, mono, q_power
from qsw.verify import (
    BindingViolation, UnknownIdentity, VerifyConfig, _restrict, registry,
    reports_json, resolve_garrett_convention, verify,
)

FAST = VerifyConfig(qmax=10, deg=3, sum_order=3, trials=2)


def test_registry_size_and_ids():
    ids = [s.id for s in registry()]
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)
    for required in ("I-RR1", "I-RR2", "I-QBINTHM", "I-GARRETT", "T4-XN",
                     "T4-BY1", "T4-SRIAGA", "T4-ABGF", "T5-MEHLER",
                     "T5-OPPROD", "T5-ALTMEHLER", "T6-ROGERS-ALT",
                     "T6-ROGERS"):
        assert required in ids


def test_registry_builders_construct_on_shared_table():
    conv = resolve_garrett_convention().convention
    for spec in registry():
        env = spec.cases(FAST, conv)[0]
        lhs = spec.build_lhs(env)
        rhs = spec.build_rhs(env)
        assert lhs.table == rhs.table == env.table


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify("NOT-AN-ID")


def test_verify_reports_have_bindings_and_caps():
    rep = verify("I-RR1", VerifyConfig(qmax=20))
    assert rep.ok
    assert rep.caps_used["qMax"] == 20
    assert rep.witness is None


def test_constrained_identity_uses_distinct_random_bindings():
    spec = BY_ID["T4-BY1"]
    envs = spec.cases(VerifyConfig(trials=5), "alternating")
    ys = {env.bindings["y"] for env in envs}
    assert len(ys) >= 4  # distinct nonzero rationals, collision unlikely
    for env in envs:
        assert env.bindings["b"] * env.bindings["y"] == 1


def test_user_binding_override_and_violation():
    rep = verify("T4-BY1", VerifyConfig(qmax=12, deg=4,
                                        bindings={"y": Fraction(2, 3)}))
    assert rep.ok
    assert rep.bindings_used["y"] == "2/3"
    with pytest.raises(BindingViolation):
        verify("T4-BY1", VerifyConfig(bindings={"y": Fraction(0)}))
    with pytest.raises(BindingViolation):
        verify("T4-BY1", VerifyConfig(bindings={"y": Fraction(2),
                                                "b": Fraction(3)}))
    with pytest.raises(BindingViolation):
        verify("T4-ABGF", VerifyConfig(bindings={"a": Fraction(1, 2),
                                                 "b": Fraction(1, 3)}))


def test_perturbed_rhs_reports_witness():
    base = BY_ID["I-RR1"]
    bad = IdentitySpec(
        id="FIXTURE-BAD",
        description="deliberately perturbed right side",
        build_lhs=base.build_lhs,
        build_rhs=lambda e: base.build_rhs(e) + e.qpow(3),
        qmax=20,
    )
    BY_ID["FIXTURE-BAD"] = bad
    try:
        rep = verify("FIXTURE-BAD")
        assert not rep.ok
        m, cl, cr = rep.witness
        assert m == mono(3)
        assert cr - cl == 1
    finally:
        del BY_ID["FIXTURE-BAD"]


def test_independence_perturbing_one_side(monkeypatch):
    spec = BY_ID["I-GARRETT"]
    env = spec.cases(VerifyConfig(qmax=15), "alternating")[2]
    lhs0, rhs0 = spec.build_lhs(env), spec.build_rhs(env)

    real = qfunctions.rq_at_power
    monkeypatch.setattr(identities, "rq_at_power",
                        lambda *a, **k: real(*a, **k) + q_power(1, caps_=a[1]))
    lhs1, rhs1 = spec.build_lhs(env), spec.build_rhs(env)
    assert lhs1 != lhs0  # the direct-sum side moved
    assert rhs1 == rhs0  # the product side did not
    monkeypatch.undo()

    real_ga = qfunctions.garrett_a
    monkeypatch.setattr(identities, "garrett_a",
                        lambda *a, **k: real_ga(*a, **k) * 2)
    lhs2, rhs2 = spec.build_lhs(env), spec.build_rhs(env)
    assert lhs2 == lhs0
    assert rhs2 != rhs0


def test_garrett_convention_resolution():
    rep = resolve_garrett_convention(6, 40)
    assert rep.ok and rep.convention == "alternating"


def test_garrett_printed_sign_fails_at_k1():
    lhs, cands = garrett_candidates(1, 30)
    ok_plain, w = equals_mod_caps(lhs, cands["plain"])
    assert not ok_plain
    # printed form gives -R_q(q); the first discrepancy is the constant term
    m, cl, cr = w
    assert m == mono(0) and cl == 1 and cr == -1
    ok_alt, _ = equals_mod_caps(lhs, cands["alternating"])
    assert ok_alt


def test_garrett_convention_requires_k_at_least_two():
    with pytest.raises(ValueError):
        resolve_garrett_convention(1, 30)


def test_garrett_dependent_reports_carry_convention():
    rep = verify("T4-2PROD", VerifyConfig(qmax=12, deg=4, trials=1))
    assert rep.ok and rep.convention == "alternating"
    rep2 = verify("I-QBINTHM", VerifyConfig(qmax=12, deg=4))
    assert rep2.convention is None


@pytest.mark.parametrize("ident", [
    "T4-GF", "T4-ALTGF", "T4-SRIAGA", "T4-RSGF", "T4-ABGF",
    "T5-MEHLER", "T5-ALTMEHLER", "T6-ROGERS-ALT", "T6-ROGERS",
])
def test_window_truncation_stability(ident):
    # summing the graded side to N+2 and comparing on the <= N window must
    # agree with the order-N build
    spec = BY_ID[ident]
    conv = "alternating"
    cfgN = VerifyConfig(qmax=10, deg=4, sum_order=3, trials=1)
    cfgN2 = VerifyConfig(qmax=10, deg=4, sum_order=5, trials=1)
    envN = spec.cases(cfgN, conv)[0]
    envN2 = spec.cases(cfgN2, conv)[0]
    slots = tuple(envN.table.slot(v) for v in spec.window)
    lhsN = _restrict(spec.build_lhs(envN), slots, envN.order)
    lhsN2 = _restrict(spec.build_lhs(envN2), slots, envN.order)
    ok, w = equals_mod_caps(lhsN, lhsN2)
    assert ok, f"{ident}: {w}"


def test_verify_deterministic_across_runs_and_threads():
    import concurrent.futures

    cfg = VerifyConfig(qmax=12, deg=4, trials=2, seed=9)
    ids = ["I-RR1", "T4-BY1", "T6-ROGERS"]
    serial = [verify(i, cfg) for i in ids]
    again = [verify(i, cfg) for i in ids]
    with concurrent.futures.ThreadPoolExecutor(max_workers=3) as pool:
        parallel = list(pool.map(lambda i: verify(i, cfg), ids))
    for a, b, c in zip(serial, again, parallel):
        for r in (a, b, c):
            r.elapsed_ms = 0
    assert reports_json(serial) == reports_json(again) == reports_json(parallel)


def test_reports_json_schema():
    rep = verify("I-RR2", VerifyConfig(qmax=20))
    data = json.loads(reports_json([rep]))
    assert isinstance(data, list)
    d = data[0]
    assert list(d) == ["id", "pass", "caps", "bindings", "elapsed_ms"]
    rep_g = verify("I-GARRETT", VerifyConfig(qmax=15))
    dg = json.loads(reports_json([rep_g]))[0]
    assert list(dg) == ["id", "pass", "convention", "caps", "bindings",
                        "elapsed_ms"]
