"""Registry of verifiable identities.

Every entry pairs an independently-built left and right side: operator-image
sides go through dq / rr_op machinery, closed-form sides through Pochhammer
products, hypergeometric sums, and the Garrett polynomials.  Sides never
share intermediate series values.

Laurent-weighted sums (Garrett forms, D_q closed forms with q^(k(k-n))
factors) are assembled at a widened q-window and truncated back to the
requested caps, so every reported result is exact modulo its stated ideal.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .series import (
    DEFAULT_TABLE, Monomial, Series, TruncationSpec, VarTable, caps, constant,
    monomial_series, one, q_power, variable,
)
from .qfunctions import (
    INFINITY, eq_big, eq_small, garrett_a, garrett_b, phi, poch,
    poch_inf_inv, qbinom, qfact_inv, rq, rq_at_power,
)
from .operators import OperatorContext, dq_pow, leibniz_rhs, rr_op
from .polynomials import rogers_szego, sw_classic, sw_star, sw_star_op
from .verify import BindingViolation, _stable_seed

TABLE = DEFAULT_TABLE
ZV = TABLE.zero_vexps
ZV_B = tuple(1 if TABLE.names[j + 1] == "b" else 0 for j in range(TABLE.nvars))


@dataclass
class Env:
    """One verification case: caps, sum order, bindings, sweep integers."""

    caps: TruncationSpec
    order: int
    bindings: dict
    convention: Optional[str]
    ints: dict = field(default_factory=dict)
    table: VarTable = TABLE

    # series shorthands, all at self.caps
    def one(self):
        return one(self.table, self.caps)

    def const(self, c):
        return constant(c, self.table, self.caps)

    def qpow(self, e):
        return q_power(e, self.table, self.caps)

    def var(self, name):
        return variable(name, self.table, self.caps)

    def sym(self, name):
        """Variable, or its bound value when the case binds it."""
        bv = self.bindings.get(name)
        if bv is None:
            return self.var(name)
        if isinstance(bv, tuple):
            c, d = bv
            return monomial_series(c, d, {}, self.table, self.caps)
        return self.const(bv)

    def pochn(self, args, n):
        return poch(args, n, self.caps, self.table)

    def pochinf(self, args, base=1):
        return poch(args, INFINITY, self.caps, self.table, base=base)

    def pochinf_inv(self, args, base=1):
        return poch_inf_inv(args, self.caps, self.table, base=base)

    def qfact_inv(self, n):
        return qfact_inv(n, self.caps, self.table)

    def qbinom(self, n, k):
        return qbinom(n, k, self.caps, self.table)

    def inflated(self, dq: int = 0, **dvars: int) -> "Env":
        """Copy of this env with widened caps (working precision)."""
        vc = list(self.caps.vcaps)
        for name, d in dvars.items():
            vc[self.table.slot(name)] += d
        return replace(self, caps=TruncationSpec(self.caps.qmax + dq, tuple(vc)))

    def bind_values(self, s: Series) -> Series:
        """Substitute every bound parameter that still appears formally."""
        for name, bv in self.bindings.items():
            if isinstance(bv, tuple):
                c, d = bv
                s = s.substitute(name, c, Monomial(d, ZV))
            else:
                s = s.substitute(name, bv, Monomial(0, ZV))
        return s

    def vcap(self, name) -> int:
        return self.caps.vcaps[self.table.slot(name)]

    def caps_dict(self) -> dict:
        return {
            "qMax": self.caps.qmax,
            "varCaps": {self.table.names[j + 1]: c
                        for j, c in enumerate(self.caps.vcaps)},
            "sumOrder": self.order,
        }

    def bindings_dict(self) -> dict:
        out = {}
        for k, v in self.ints.items():
            if isinstance(v, int):
                out[k] = v
        for name, bv in sorted(self.bindings.items()):
            if isinstance(bv, tuple):
                c, d = bv
                out[name] = f"{c.numerator}/{c.denominator}*q^{d}"
            else:
                out[name] = f"{bv.numerator}/{bv.denominator}"
        return out


@dataclass(frozen=True)
class IdentitySpec:
    """A named LHS/RHS pair with default truncation and case generation."""

    id: str
    description: str
    build_lhs: Callable[[Env], Series]
    build_rhs: Callable[[Env], Series]
    qmax: int = 25
    deg: int = 8
    order: int = 8
    var_caps: dict = field(default_factory=dict)
    window: Optional[tuple] = None  # compare only up to total degree `order`
    sweep: Optional[Callable] = None  # (cfg, rng) -> list of ints dicts
    free: tuple = ()  # constrained parameters needing bindings
    complete: Optional[Callable] = None  # bindings -> full validated bindings
    rand: Optional[Callable] = None  # rng -> bindings for the free parameters
    trials: int = 5
    uses_garrett: bool = False
    constraints: tuple = ()

    def cases(self, cfg, convention) -> list[Env]:
        qmax = cfg.qmax if cfg.qmax is not None else self.qmax
        deg = cfg.deg if cfg.deg is not None else self.deg
        over = dict(self.var_caps)
        over.update(cfg.var_caps)
        cps = caps(qmax, TABLE, deg, **over)
        order = cfg.sum_order if cfg.sum_order is not None else self.order
        rng = random.Random(_stable_seed(cfg.seed, self.id))
        sweeps = self.sweep(cfg, rng) if self.sweep else [{}]
        if self.free:
            if cfg.bindings:
                blist = [self.complete(dict(cfg.bindings))]
            else:
                trials = cfg.trials if cfg.trials is not None else self.trials
                blist = []
                seen = set()
                while len(blist) < trials:
                    b = self.rand(rng)
                    key = tuple(sorted(b.items()))
                    if key in seen:
                        continue
                    seen.add(key)
                    blist.append(self.complete(b))
        else:
            blist = [{}]
        return [Env(cps, order, b, convention, dict(sw))
                for b in blist for sw in sweeps]


REGISTRY: list[IdentitySpec] = []


def _ident(**kw) -> None:
    REGISTRY.append(IdentitySpec(**kw))


# -- small shared helpers -------------------------------------------------------


def _rr1_prod(e: Env) -> Series:
    """(q, q^4; q^5)_inf at e.caps."""
    return poch([e.qpow(1), e.qpow(4)], INFINITY, e.caps, e.table, base=5)


def _rr2_prod(e: Env) -> Series:
    """(q^2, q^3; q^5)_inf at e.caps."""
    return poch([e.qpow(2), e.qpow(3)], INFINITY, e.caps, e.table, base=5)


def _rr1_inv(e: Env) -> Series:
    """1/(q, q^4; q^5)_inf at e.caps."""
    return poch_inf_inv([e.qpow(1), e.qpow(4)], e.caps, e.table, base=5)


def _rr2_inv(e: Env) -> Series:
    """1/(q^2, q^3; q^5)_inf at e.caps."""
    return poch_inf_inv([e.qpow(2), e.qpow(3)], e.caps, e.table, base=5)


def _garrett_bracket(e: Env, k: int, shift: int) -> Series:
    """q^(-shift) * (a_k(q)/(q,q^4;q^5)inf - b_k(q)/(q^2,q^3;q^5)inf).

    Pure q-series; computed at a widened window so the ordinary combination
    is exact at e.caps.  The per-term negative powers cancel only in this
    combination, never in the a- and b-sums separately.
    """
    w = e.inflated(dq=shift)
    body = garrett_a(k, w.caps, w.table) * _rr1_inv(w)         - garrett_b(k, w.caps, w.table) * _rr2_inv(w)
    return (w.qpow(-shift) * body).truncate(e.caps)


def _inv_one_minus(u: Series, e: Env) -> Series:
    """1/(1 - u) for a weighted term u: plain geometric sum."""
    total = e.one()
    upow = u
    while not upow.is_zero():
        total = total + upow
        upow = upow * u
    return total


def _rr_bound(e: Env) -> int:
    """Certified truncation order of the operator sum at e.caps."""
    return min(e.vcap("y"), math.isqrt(e.caps.qmax))


def _nonzero_frac(rng) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.randint(1, 3)
    return Fraction(num, den)


def _range_sweep(name, hi):
    def gen(cfg, rng):
        return [{name: n} for n in range(hi + 1)]
    return gen


def _pair_sweep(hi):
    def gen(cfg, rng):
        return [{"n": n, "k": k} for n in range(hi + 1) for k in range(hi + 1)]
    return gen


def _require(bindings, *names):
    for name in names:
        v = bindings.get(name)
        if v is None:
            raise BindingViolation(f"binding for {name} is required")
        if not isinstance(v, (Fraction, tuple)):
            raise BindingViolation(f"binding for {name} must be rational")
        if isinstance(v, Fraction) and v == 0:
            raise BindingViolation(f"binding for {name} must be nonzero")


# -- Pochhammer identities (I-POCH-*) --------------------------------------------


def _poch1_lhs(e):
    return e.pochn([e.var("a")], e.ints["n"])


def _poch1_rhs(e):
    a = e.var("a")
    n = e.ints["n"]
    return e.pochinf([a]) / e.pochinf([a * e.qpow(n)])


_ident(
    id="I-POCH-1",
    description="finite q-shifted factorial as ratio of infinite products",
    build_lhs=_poch1_lhs, build_rhs=_poch1_rhs,
    sweep=_range_sweep("n", 8),
)


def _poch2_lhs(e):
    return e.pochn([e.var("a")], e.ints["n"] + e.ints["k"])


def _poch2_rhs(e):
    a = e.var("a")
    n, k = e.ints["n"], e.ints["k"]
    return e.pochn([a], n) * e.pochn([a * e.qpow(n)], k)


_ident(
    id="I-POCH-2",
    description="index splitting rule for q-shifted factorials",
    build_lhs=_poch2_lhs, build_rhs=_poch2_rhs,
    sweep=_pair_sweep(8),
)


def _poch3_lhs(e):
    a = e.var("a")
    n, k = e.ints["n"], e.ints["k"]
    return e.pochn([a * e.qpow(n)], k) * e.pochn([a], n)


def _poch3_rhs(e):
    a = e.var("a")
    n, k = e.ints["n"], e.ints["k"]
    return e.pochn([a], k) * e.pochn([a * e.qpow(k)], n)


_ident(
    id="I-POCH-3",
    description="shift exchange rule for q-shifted factorials",
    build_lhs=_poch3_lhs, build_rhs=_poch3_rhs,
    sweep=_pair_sweep(8),
)


# -- q-binomial theorem and q-exponentials ----------------------------------------


_ident(
    id="I-QBINTHM",
    description="q-binomial theorem: 1phi0(a; q, z) = (az;q)inf / (z;q)inf",
    build_lhs=lambda e: phi([e.var("a")], [], e.var("z"), e.caps, e.table),
    build_rhs=lambda e: e.pochinf([e.var("a") * e.var("z")])
    / e.pochinf([e.var("z")]),
    qmax=30, var_caps={"a": 10, "z": 10},
)

_ident(
    id="I-EQ-PROD",
    description="e_q(z) * (z;q)inf = 1",
    build_lhs=lambda e: eq_small(e.var("z")) * e.pochinf([e.var("z")]),
    build_rhs=lambda e: e.one(),
)

_ident(
    id="I-EQBIG-PROD",
    description="E_q(z) = (-z;q)inf",
    build_lhs=lambda e: eq_big(e.var("z")),
    build_rhs=lambda e: e.pochinf([-e.var("z")]),
)


# -- classical Stieltjes-Wigert generating functions -------------------------------


def _gf_lhs(weight):
    def build(e):
        t = e.var("t")
        total = None
        tpow = e.one()
        for n in range(e.order + 1):
            term = weight(e, n) * sw_classic(n, e.caps, e.table) * tpow
            total = term if total is None else total + term
            tpow = tpow * t
        return total
    return build


def _gf1_rhs(e):
    t, x = e.var("t"), e.var("x")
    z = -(e.qpow(1) * t * x)
    return e.pochinf_inv([t]) * phi([], [0], z, e.caps, e.table)


def _gf2_rhs(e):
    t, x = e.var("t"), e.var("x")
    z = -(e.qpow(1) * t * x)
    return e.pochinf([t]) * phi([], [0, t], z, e.caps, e.table)


def _gf3_rhs(e):
    a, t, x = e.var("a"), e.var("t"), e.var("x")
    z = -(e.qpow(1) * t * x)
    return (e.pochinf([a * t]) / e.pochinf([t])) \
        * phi([a], [0, a * t], z, e.caps, e.table)


_ident(
    id="I-GF1",
    description="generating function sum S_n(x;q) t^n via 0phi1",
    build_lhs=_gf_lhs(lambda e, n: e.one()),
    build_rhs=_gf1_rhs, window=("t",),
)

_ident(
    id="I-GF2",
    description="alternating generating function of S_n(x;q) via 0phi2",
    build_lhs=_gf_lhs(lambda e, n: e.qpow(n * (n - 1) // 2)
                      * (1 if n % 2 == 0 else -1)),
    build_rhs=_gf2_rhs, window=("t",),
)

_ident(
    id="I-GF3",
    description="(a;q)_n-weighted generating function of S_n(x;q) via 1phi2",
    build_lhs=_gf_lhs(lambda e, n: e.pochn([e.var("a")], n)),
    build_rhs=_gf3_rhs, window=("t",),
)


# -- Leibniz rule -------------------------------------------------------------------


def _leibniz_sweep(cfg, rng):
    trials = cfg.trials if cfg.trials is not None else 20
    cases = []
    for trial in range(trials):
        n = rng.randint(0, 5)
        def spec():
            return [(_nonzero_frac(rng), rng.randint(0, 6), rng.randint(0, 4))
                    for _ in range(rng.randint(1, 4))]
        cases.append({"trial": trial, "n": n, "fspec": spec(), "gspec": spec()})
    return cases


def _poly_from_spec(spec, e):
    xs = e.table.slot("x")
    entries = []
    for c, qe, xe in spec:
        ve = [0] * e.table.nvars
        ve[xs] = xe
        entries.append((c, Monomial(qe, tuple(ve))))
    from .series import make_series
    return make_series(entries, e.caps, e.table)


def _leibniz_lhs(e):
    w = e.inflated(dq=e.caps.qmax + 40)
    f = _poly_from_spec(e.ints["fspec"], w)
    g = _poly_from_spec(e.ints["gspec"], w)
    return leibniz_rhs(f, g, "x", e.ints["n"]).truncate(e.caps)


def _leibniz_rhs_side(e):
    w = e.inflated(dq=e.caps.qmax + 40)
    f = _poly_from_spec(e.ints["fspec"], w)
    g = _poly_from_spec(e.ints["gspec"], w)
    return dq_pow(f * g, "x", e.ints["n"]).truncate(e.caps)


_ident(
    id="I-LEIBNIZ",
    description="Leibniz rule for the q-derivative on randomized pairs",
    build_lhs=_leibniz_lhs, build_rhs=_leibniz_rhs_side,
    sweep=_leibniz_sweep,
)


# -- D_q closed forms (I-DQ-4 .. I-DQ-9) ----------------------------------------------


def _dq4_lhs(e):
    xk = monomial_series(1, 0, {"x": e.ints["k"]}, e.table, e.caps)
    return dq_pow(xk, "x", e.ints["n"])


def _dq4_rhs(e):
    n, k = e.ints["n"], e.ints["k"]
    xkn = monomial_series(1, 0, {"x": k - n}, e.table, e.caps)
    return e.pochn([e.qpow(k - n + 1)], n) * xkn


_ident(
    id="I-DQ-4",
    description="closed form for D_q^n x^k",
    build_lhs=_dq4_lhs, build_rhs=_dq4_rhs,
    sweep=lambda cfg, rng: [{"n": n, "k": k}
                            for k in range(9) for n in range(k + 1)],
)


def _dq5_lhs(e):
    n = e.ints["n"]
    w = e.inflated(x=n, a=n)
    f = w.pochinf_inv([w.var("a") * w.var("x")])
    return dq_pow(f, "x", n).truncate(e.caps)


def _dq5_rhs(e):
    a = e.var("a")
    return a ** e.ints["n"] * e.pochinf_inv([a * e.var("x")])


_ident(
    id="I-DQ-5",
    description="D_q^n of 1/(ax;q)inf",
    build_lhs=_dq5_lhs, build_rhs=_dq5_rhs,
    sweep=_range_sweep("n", 4),
)


def _dq6_lhs(e):
    n = e.ints["n"]
    w = e.inflated(x=n, a=n)
    f = w.pochinf([w.var("a") * w.var("x")])
    return dq_pow(f, "x", n).truncate(e.caps)


def _dq6_rhs(e):
    a = e.var("a")
    n = e.ints["n"]
    sign = 1 if n % 2 == 0 else -1
    return sign * a ** n * e.qpow(n * (n - 1) // 2) \
        * e.pochinf([a * e.qpow(n) * e.var("x")])


_ident(
    id="I-DQ-6",
    description="D_q^n of (ax;q)inf",
    build_lhs=_dq6_lhs, build_rhs=_dq6_rhs,
    sweep=_range_sweep("n", 4),
)


def _dq7_lhs(e):
    n = e.ints["n"]
    w = e.inflated(x=n, a=n, b=n)
    f = w.pochinf([w.var("a") * w.var("x")]) \
        * w.pochinf([w.var("b") * w.var("x")])
    return dq_pow(f, "x", n).truncate(e.caps)


def _dq7_rhs(e):
    # the closed form needs a (-1)^n factor in front (the printed one fails
    # for odd n; cross-checked against dq_pow directly)
    n = e.ints["n"]
    w = e.inflated(dq=(n * n) // 4 + 1)
    a, b, x = w.var("a"), w.var("b"), w.var("x")
    acc = None
    for k in range(n + 1):
        term = w.qbinom(n, k) * w.qpow(k * (k - n)) * a ** k * b ** (n - k) \
            / w.pochn([a * x], k)
        acc = term if acc is None else acc + term
    sign = 1 if n % 2 == 0 else -1
    rhs = sign * w.qpow(n * (n - 1) // 2) * w.pochinf([a * x]) \
        * w.pochinf([b * w.qpow(n) * x]) * acc
    return rhs.truncate(e.caps)


_ident(
    id="I-DQ-7",
    description="D_q^n of (ax,bx;q)inf",
    build_lhs=_dq7_lhs, build_rhs=_dq7_rhs,
    sweep=_range_sweep("n", 4),
)


def _dq8_lhs(e):
    n = e.ints["n"]
    w = e.inflated(x=n, a=n, b=n)
    f = w.pochinf([w.var("a") * w.var("x")]) \
        / w.pochinf([w.var("b") * w.var("x")])
    return dq_pow(f, "x", n).truncate(e.caps)


def _dq8_rhs(e):
    n = e.ints["n"]
    a, b, x = e.var("a"), e.var("b"), e.var("x")
    acc = None
    for k in range(n + 1):
        sign = 1 if k % 2 == 0 else -1
        term = e.qbinom(n, k) * e.qpow(k * (k - 1) // 2) * sign * a ** k \
            * b ** (n - k) * e.pochn([b * x], k) / e.pochn([a * x], k)
        acc = term if acc is None else acc + term
    return e.pochinf([a * x]) / e.pochinf([b * x]) * acc


_ident(
    id="I-DQ-8",
    description="D_q^n of (ax;q)inf/(bx;q)inf",
    build_lhs=_dq8_lhs, build_rhs=_dq8_rhs,
    sweep=_range_sweep("n", 4),
)


def _dq9_lhs(e):
    n = e.ints["n"]
    w = e.inflated(x=n, a=n, b=n)
    f = w.pochinf_inv([w.var("a") * w.var("x"), w.var("b") * w.var("x")])
    return dq_pow(f, "x", n).truncate(e.caps)


def _dq9_rhs(e):
    n = e.ints["n"]
    a, b, x = e.var("a"), e.var("b"), e.var("x")
    acc = None
    for k in range(n + 1):
        term = e.qbinom(n, k) * a ** k * b ** (n - k) * e.pochn([b * x], k)
        acc = term if acc is None else acc + term
    return e.pochinf_inv([a * x, b * x]) * acc


_ident(
    id="I-DQ-9",
    description="D_q^n of 1/(ax,bx;q)inf",
    build_lhs=_dq9_lhs, build_rhs=_dq9_rhs,
    sweep=_range_sweep("n", 4),
)


# -- Ramanujan q-exponential --------------------------------------------------------


# The factor on the right is qz, not (1-q)z: expanding the left side gives
# sum q^(n^2) z^n / (q;q)_(n-1) = qz R_q(q^2 z), consistent with the n-th
# q-derivative formula at n=1.  tests/test_qfunctions.py pins the failure
# of the (1-q)z variant.
_ident(
    id="I-RQ-DIFFEQ",
    description="difference equation R_q(z) - R_q(qz) = qz R_q(q^2 z)",
    build_lhs=lambda e: rq(e.var("z")) - rq(e.qpow(1) * e.var("z")),
    build_rhs=lambda e: e.qpow(1) * e.var("z") * rq(e.qpow(2) * e.var("z")),
    qmax=30, var_caps={"z": 10},
)


def _rqdqn_lhs(e):
    n = e.ints["n"]
    w = e.inflated(x=n, a=n)
    f = rq(w.var("a") * w.var("x"))
    return dq_pow(f, "x", n).truncate(e.caps)


def _rqdqn_rhs(e):
    n = e.ints["n"]
    a = e.var("a")
    return a ** n * e.qpow(n * n) * rq(a * e.qpow(2 * n) * e.var("x"))


_ident(
    id="I-RQ-DQN",
    description="n-th q-derivative of R_q(ax)",
    build_lhs=_rqdqn_lhs, build_rhs=_rqdqn_rhs,
    sweep=_range_sweep("n", 4),
)

_ident(
    id="I-RR1",
    description="Rogers-Ramanujan: R_q(1) = 1/(q,q^4;q^5)inf",
    build_lhs=lambda e: rq(1, e.caps, e.table),
    build_rhs=lambda e: _rr1_prod(e).reciprocal(),
    qmax=60,
)

_ident(
    id="I-RR2",
    description="Rogers-Ramanujan: R_q(q) = 1/(q^2,q^3;q^5)inf",
    build_lhs=lambda e: rq(e.qpow(1)),
    build_rhs=lambda e: _rr2_prod(e).reciprocal(),
    qmax=60,
)


def garrett_candidates(k: int, qmax: int):
    """Direct-sum oracle for sum q^(n^2+kn)/(q;q)_n plus both candidate
    Garrett expansions ("plain" and "alternating")."""
    cps = caps(qmax, TABLE)
    lhs = rq_at_power(k, cps, TABLE)
    s = k * (k - 1) // 2
    wcaps = TruncationSpec(qmax + s, cps.vcaps)
    body = rq(1, wcaps, TABLE) * garrett_a(k, wcaps, TABLE) \
        - rq(q_power(1, TABLE, wcaps), wcaps, TABLE) * garrett_b(k, wcaps, TABLE)
    plain = (q_power(-s, TABLE, wcaps) * body).truncate(cps)
    alt = plain if k % 2 == 0 else -plain
    return lhs, {"plain": plain, "alternating": alt}


def _garrett_lhs(e):
    return rq_at_power(e.ints["k"], e.caps, e.table)


def _garrett_rhs(e):
    k = e.ints["k"]
    s = k * (k - 1) // 2
    w = e.inflated(dq=s)
    body = rq(1, w.caps, w.table) * garrett_a(k, w.caps, w.table) \
        - rq(w.qpow(1)) * garrett_b(k, w.caps, w.table)
    sign = -1 if (e.convention == "alternating" and k % 2) else 1
    return (sign * w.qpow(-s) * body).truncate(e.caps)


_ident(
    id="I-GARRETT",
    description="Garrett expansion of R_q(q^k) under the measured sign "
                "convention",
    build_lhs=_garrett_lhs, build_rhs=_garrett_rhs,
    sweep=lambda cfg, rng: [{"k": k} for k in range(7)],
    qmax=40, uses_garrett=True,
)


# -- operator images and generating functions (T4) -------------------------------------


_ident(
    id="T4-XN",
    description="R(yD_q){x^n} equals the bivariate Stieltjes-Wigert "
                "polynomial",
    build_lhs=lambda e: sw_star_op(e.ints["n"], e.caps, e.table),
    build_rhs=lambda e: sw_star(e.ints["n"], e.caps, e.table),
    sweep=_range_sweep("n", 10),
)


def _invpoch_lhs(e):
    nmax = _rr_bound(e)
    w = e.inflated(x=nmax, a=nmax)
    f = w.pochinf_inv([w.var("a") * w.var("x")])
    return rr_op(f, OperatorContext("x", "y"), w.caps).truncate(e.caps)


_ident(
    id="T4-INVPOCH",
    description="R(yD_q){1/(ax;q)inf} = R_q(ay)/(ax;q)inf",
    build_lhs=_invpoch_lhs,
    build_rhs=lambda e: rq(e.var("a") * e.var("y"))
    * e.pochinf_inv([e.var("a") * e.var("x")]),
)


def _t4gf_lhs(e):
    z = e.var("z")
    total = None
    zpow = e.one()
    for n in range(e.order + 1):
        term = sw_star(n, e.caps, e.table) * zpow * e.qfact_inv(n)
        total = term if total is None else total + term
        zpow = zpow * z
    return total


_ident(
    id="T4-GF",
    description="sum S*_n(x,y) z^n/(q;q)_n = R_q(zy)/(zx;q)inf",
    build_lhs=_t4gf_lhs,
    build_rhs=lambda e: rq(e.var("z") * e.var("y"))
    * e.pochinf_inv([e.var("z") * e.var("x")]),
    window=("z",),
)


def _t4poch_lhs(e):
    nmax = _rr_bound(e)
    w = e.inflated(x=nmax, a=nmax)
    f = w.pochinf([w.var("a") * w.var("x")])
    return rr_op(f, OperatorContext("x", "y"), w.caps).truncate(e.caps)


_ident(
    id="T4-POCH",
    description="R(yD_q){(ax;q)inf} = (ax;q)inf 0phi2(-; ax,0; q, qay)",
    build_lhs=_t4poch_lhs,
    build_rhs=lambda e: e.pochinf([e.var("a") * e.var("x")])
    * phi([], [e.var("a") * e.var("x"), 0],
          e.qpow(1) * e.var("a") * e.var("y"), e.caps, e.table),
)


def _t4altgf_lhs(e):
    z = e.var("z")
    total = None
    zpow = e.one()
    for n in range(e.order + 1):
        sign = 1 if n % 2 == 0 else -1
        term = sign * e.qpow(n * (n - 1) // 2) * sw_star(n, e.caps, e.table) \
            * zpow * e.qfact_inv(n)
        total = term if total is None else total + term
        zpow = zpow * z
    return total


_ident(
    id="T4-ALTGF",
    description="alternating sum of S*_n(x,y) z^n/(q;q)_n via 0phi2",
    build_lhs=_t4altgf_lhs,
    build_rhs=lambda e: e.pochinf([e.var("z") * e.var("x")])
    * phi([], [e.var("z") * e.var("x"), 0],
          e.qpow(1) * e.var("z") * e.var("y"), e.caps, e.table),
    window=("z",),
)


def _t4ratio_lhs(e):
    nmax = _rr_bound(e)
    w = e.inflated(z=nmax, a=nmax)
    f = w.pochinf([w.var("a") * w.var("z")]) / w.pochinf([w.var("z")])
    return rr_op(f, OperatorContext("z", "y"), w.caps).truncate(e.caps)


_ident(
    id="T4-RATIO",
    description="R(yD_q){(az;q)inf/(z;q)inf} via 1phi2",
    build_lhs=_t4ratio_lhs,
    build_rhs=lambda e: e.pochinf([e.var("a") * e.var("z")])
    / e.pochinf([e.var("z")])
    * phi([e.var("a")], [e.var("a") * e.var("z"), 0],
          e.qpow(1) * e.var("y"), e.caps, e.table),
)


def _ratio_poch_lhs_op(e):
    """R(yD_q) applied to (ax;q)inf/(bx;q)inf (y formal, bound later)."""
    nmax = min(e.caps.vcaps[e.table.slot("y")], math.isqrt(e.caps.qmax))
    w = e.inflated(x=nmax, a=nmax)
    f = w.pochinf([w.sym("a") * w.var("x")]) \
        / w.pochinf([w.sym("b") * w.var("x")])
    out = rr_op(f, OperatorContext("x", "y"), w.caps)
    return e.bind_values(out).truncate(e.caps)


def _t4by1rq_rhs(e):
    a, b, x, y = e.var("a"), e.var("b"), e.var("x"), e.var("y")
    ratio = e.pochinf([a * x]) / e.pochinf([b * x])
    acc = None
    kmax = min(e.vcap("y"), e.vcap("a"))
    for k in range(kmax + 1):
        if k * (3 * k - 1) // 2 > e.caps.qmax:
            break
        term = e.qpow(k * (3 * k - 1) // 2) * e.pochn([b * x], k) \
            * (-(a * y)) ** k * rq(e.qpow(2 * k) * b * y) \
            / e.pochn([a * x], k) * e.qfact_inv(k)
        acc = term if acc is None else acc + term
    return ratio * acc


_ident(
    id="T4-BY1-RQ",
    description="R(yD_q){(ax;q)inf/(bx;q)inf} as an R_q-weighted sum",
    build_lhs=_ratio_poch_lhs_op,
    build_rhs=_t4by1rq_rhs,
)


def _by1_complete(bindings):
    _require(bindings, "y")
    y = bindings["y"]
    if not isinstance(y, Fraction):
        raise BindingViolation("y must be a nonzero rational")
    b = bindings.get("b")
    if b is None:
        bindings["b"] = 1 / y
    elif b * y != 1:
        raise BindingViolation("constraint by = 1 violated")
    return bindings


def _t4by1_rhs(e):
    a, b, x, y = e.var("a"), e.sym("b"), e.var("x"), e.sym("y")
    front = e.pochinf([a * x]) * e.pochinf_inv([b * x])
    acc = None
    bx_k = e.one()
    inv_ax = e.one()
    sgn_ay_k = e.one()
    for k in range(e.vcap("a") + 1):
        if k:
            bx_k = bx_k * (e.one() - b * x * e.qpow(k - 1))
            inv_ax = inv_ax * _inv_one_minus(a * x * e.qpow(k - 1), e)
            sgn_ay_k = sgn_ay_k * -(a * y)
        br = _garrett_bracket(e, 2 * k, k * (k - 1) // 2)
        term = bx_k * sgn_ay_k * br * inv_ax * e.qfact_inv(k)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T4-BY1",
    description="by=1 Garrett form of R(yD_q){(ax;q)inf/(bx;q)inf}",
    build_lhs=_ratio_poch_lhs_op,
    build_rhs=_t4by1_rhs,
    free=("y",), complete=_by1_complete,
    rand=lambda rng: {"y": _nonzero_frac(rng)},
    uses_garrett=True, constraints=("b = 1/y",),
)


def _t4sriaga_lhs(e):
    z = e.var("z")
    total = None
    zpow = e.one()
    for n in range(e.order + 1):
        term = sw_star(n, e.caps, e.table) * e.pochn([e.var("a")], n) \
            * zpow * e.qfact_inv(n)
        total = term if total is None else total + term
        zpow = zpow * z
    return total


# 1phi2 argument is qzy (each D_q applied to a function of zx carries a
# factor z); with qy the right side already fails on the z^0 slice
_ident(
    id="T4-SRIAGA",
    description="Srivastava-Agarwal type representation of S*_n(x,y)",
    build_lhs=_t4sriaga_lhs,
    build_rhs=lambda e: e.pochinf([e.var("a") * e.var("z") * e.var("x")])
    * e.pochinf_inv([e.var("z") * e.var("x")])
    * phi([e.var("a")], [e.var("a") * e.var("z") * e.var("x"), 0],
          e.qpow(1) * e.var("z") * e.var("y"), e.caps, e.table),
    window=("z",),
)


def _yz1_complete(bindings):
    _require(bindings, "z")
    z = bindings["z"]
    if not isinstance(z, Fraction):
        raise BindingViolation("z must be a nonzero rational")
    y = bindings.get("y")
    if y is None:
        bindings["y"] = 1 / z
    elif y * z != 1:
        raise BindingViolation("constraint yz = 1 violated")
    return bindings


def _swstar_bound_y(n, e):
    """S*_n(x, y) with a bound y value, summed without variable-cap traps.

    Returns None when no term survives the caps."""
    x = e.var("x")
    yv = e.sym("y")
    xcap = e.vcap("x")
    total = None
    for k in range(n + 1):
        if n - k > xcap or k * k > e.caps.qmax:
            continue
        term = e.qbinom(n, k) * e.qpow(k * k) * x ** (n - k) * yv ** k
        total = term if total is None else total + term
    return total


def _t4sriaga_yz1_lhs(e):
    zval = e.sym("z")
    nmax = e.vcap("x") + math.isqrt(e.caps.qmax)
    total = None
    zpow = e.one()
    for n in range(nmax + 1):
        sw = _swstar_bound_y(n, e)
        if sw is not None and not sw.is_zero():
            term = sw * e.pochn([e.var("a")], n) * zpow * e.qfact_inv(n)
            total = term if total is None else total + term
        zpow = zpow * zval
    return total


def _t4sriaga_yz1_rhs(e):
    a, x = e.var("a"), e.var("x")
    z, y = e.sym("z"), e.sym("y")
    front = e.pochinf([a * z * x]) * e.pochinf_inv([z * x])
    acc = None
    zx_k = e.one()
    inv_azx = e.one()
    sgn_azy_k = e.one()
    for k in range(e.vcap("a") + 1):
        if k:
            zx_k = zx_k * (e.one() - z * x * e.qpow(k - 1))
            inv_azx = inv_azx * _inv_one_minus(a * z * x * e.qpow(k - 1), e)
            sgn_azy_k = sgn_azy_k * -(a * z * y)
        br = _garrett_bracket(e, 2 * k, k * (k - 1) // 2)
        term = zx_k * sgn_azy_k * br * inv_azx * e.qfact_inv(k)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T4-SRIAGA-YZ1",
    description="yz=1 Garrett form of the Srivastava-Agarwal representation",
    build_lhs=_t4sriaga_yz1_lhs,
    build_rhs=_t4sriaga_yz1_rhs,
    free=("z",), complete=_yz1_complete,
    rand=lambda rng: {"z": _nonzero_frac(rng)},
    uses_garrett=True, constraints=("y = 1/z",),
)


def _twoprod_lhs_op(e):
    nmax = min(e.caps.vcaps[e.table.slot("y")], math.isqrt(e.caps.qmax))
    w = e.inflated(x=nmax, a=nmax, b=nmax)
    f = w.pochinf_inv([w.sym("a") * w.var("x"), w.sym("b") * w.var("x")])
    out = rr_op(f, OperatorContext("x", "y"), w.caps)
    return e.bind_values(out).truncate(e.caps)


def _t4twoprodrq_rhs(e):
    a, b, x, y = e.var("a"), e.var("b"), e.var("x"), e.var("y")
    front = e.pochinf_inv([a * x, b * x])
    acc = None
    imax = min(e.vcap("y"), e.vcap("a"), math.isqrt(e.caps.qmax))
    for i in range(imax + 1):
        term = e.qpow(i * i) * e.pochn([b * x], i) * (a * y) ** i \
            * rq(b * e.qpow(2 * i) * y) * e.qfact_inv(i)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T4-2PROD-RQ",
    description="R(yD_q){1/(ax,bx;q)inf} as an R_q-weighted sum",
    build_lhs=_twoprod_lhs_op,
    build_rhs=_t4twoprodrq_rhs,
)


def _t4twoprod_rhs(e):
    a, x = e.var("a"), e.var("x")
    b, y = e.sym("b"), e.sym("y")
    front = e.pochinf_inv([a * x, b * x])
    acc = None
    bx_i = e.one()
    ay_i = e.one()
    for i in range(e.vcap("a") + 1):
        if i:
            bx_i = bx_i * (e.one() - b * x * e.qpow(i - 1))
            ay_i = ay_i * (a * y)
        br = _garrett_bracket(e, 2 * i, i * (i - 1))
        term = bx_i * ay_i * br * e.qfact_inv(i)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T4-2PROD",
    description="by=1 Garrett form of R(yD_q){1/(ax,bx;q)inf}",
    build_lhs=_twoprod_lhs_op,
    build_rhs=_t4twoprod_rhs,
    free=("y",), complete=_by1_complete,
    rand=lambda rng: {"y": _nonzero_frac(rng)},
    uses_garrett=True, constraints=("b = 1/y",),
)


def _t4rsgf_lhs(e):
    z = e.var("z")
    total = None
    zpow = e.one()
    for n in range(e.order + 1):
        term = sw_star(n, e.caps, e.table) \
            * rogers_szego(n, e.caps, e.table) * zpow * e.qfact_inv(n)
        total = term if total is None else total + term
        zpow = zpow * z
    return total


def _t4rsgf_rhs(e):
    a, b, x, y, z = (e.var(v) for v in "abxyz")
    front = e.pochinf_inv([a * z * x, b * z * x])
    acc = None
    imax = min(e.vcap("y"), e.vcap("a"), e.vcap("z"), math.isqrt(e.caps.qmax))
    for i in range(imax + 1):
        term = e.qpow(i * i) * e.pochn([b * z * x], i) * (a * z * y) ** i \
            * rq(b * z * e.qpow(2 * i) * y) * e.qfact_inv(i)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T4-RSGF",
    description="mixed generating function with Rogers-Szego polynomials",
    build_lhs=_t4rsgf_lhs,
    build_rhs=_t4rsgf_rhs,
    window=("z",), deg=6, order=6, qmax=20,
)


def _rs_bound_b(n, e):
    """r_n(a, b) with a bound b value, summed without variable-cap traps."""
    a = e.var("a")
    bv = e.sym("b")
    acap = e.vcap("a")
    total = None
    for k in range(n + 1):
        if n - k > acap:
            continue
        term = e.qbinom(n, k) * a ** (n - k) * bv ** k
        total = term if total is None else total + term
    return total


def _t4rsgf_bzy1_lhs(e):
    zval = e.sym("z")
    nmax = e.vcap("x") + math.isqrt(e.caps.qmax)
    total = None
    zpow = e.one()
    for n in range(nmax + 1):
        sw = _swstar_bound_y(n, e)
        if sw is not None and not sw.is_zero():
            rs = _rs_bound_b(n, e)
            term = sw * rs * zpow * e.qfact_inv(n)
            total = term if total is None else total + term
        zpow = zpow * zval
    return total


def _t4rsgf_bzy1_rhs(e):
    a, x = e.var("a"), e.var("x")
    b, y, z = e.sym("b"), e.sym("y"), e.sym("z")
    front = e.pochinf_inv([a * z * x, b * z * x])
    acc = None
    bzx_i = e.one()
    azy_i = e.one()
    for i in range(e.vcap("a") + 1):
        if i:
            bzx_i = bzx_i * (e.one() - b * z * x * e.qpow(i - 1))
            azy_i = azy_i * (a * z * y)
        br = _garrett_bracket(e, 2 * i, i * (i - 1))
        term = bzx_i * azy_i * br * e.qfact_inv(i)
        acc = term if acc is None else acc + term
    return front * acc


def _bzy1_complete(bindings):
    _require(bindings, "z", "y")
    z, y = bindings["z"], bindings["y"]
    if not isinstance(z, Fraction) or not isinstance(y, Fraction):
        raise BindingViolation("z and y must be nonzero rationals")
    b = bindings.get("b")
    if b is None:
        bindings["b"] = 1 / (z * y)
    elif b * z * y != 1:
        raise BindingViolation("constraint bzy = 1 violated")
    return bindings


_ident(
    id="T4-RSGF-BZY1",
    description="bzy=1 Garrett form of the mixed Rogers-Szego generating "
                "function",
    build_lhs=_t4rsgf_bzy1_lhs,
    build_rhs=_t4rsgf_bzy1_rhs,
    free=("z", "y"), complete=_bzy1_complete,
    rand=lambda rng: {"z": _nonzero_frac(rng), "y": _nonzero_frac(rng)},
    uses_garrett=True, constraints=("b = 1/(zy)",),
)


def _abgf_complete(bindings):
    for name in ("a", "b"):
        v = bindings.get(name)
        if v is None:
            raise BindingViolation(f"binding for {name} is required")
        if isinstance(v, Fraction):
            raise BindingViolation(
                f"{name} must be a monomial c*q^d with d >= 1: rational "
                "bindings make the sum formally divergent")
        c, d = v
        if c == 0 or d < 1:
            raise BindingViolation(f"{name} must be c*q^d with c != 0, d >= 1")
    return bindings


def _t4abgf_lhs(e):
    z = e.var("z")
    a = e.sym("a")
    total = None
    zpow = e.one()
    for n in range(e.order + 1):
        term = sw_star(n, e.caps, e.table) * e.pochn([a], n) * zpow \
            / e.pochn([e.sym("b")], n) * e.qfact_inv(n)
        total = term if total is None else total + term
        zpow = zpow * z
    return total


def _t4abgf_rhs(e):
    a, b = e.sym("a"), e.sym("b")
    x, y, z = e.var("x"), e.var("y"), e.var("z")
    front = e.pochinf([a]) * e.pochinf_inv([z * x, b])
    acc = None
    prod = e.one()  # prod_{j<k} (a - b q^j)  ==  a^k (b/a; q)_k
    k = 0
    while not prod.is_zero() and k <= e.caps.qmax:
        term = prod * e.pochn([z * x], k) * rq(e.qpow(k) * z * y) \
            * e.qfact_inv(k)
        acc = term if acc is None else acc + term
        prod = prod * (a - b * e.qpow(k))
        k += 1
    return front * acc


_ident(
    id="T4-ABGF",
    description="(a;q)_n/(b;q)_n-weighted generating function of S*_n "
                "(q-monomial bindings)",
    build_lhs=_t4abgf_lhs,
    build_rhs=_t4abgf_rhs,
    window=("z",),
    free=("a", "b"), complete=_abgf_complete,
    rand=lambda rng: {"a": (_nonzero_frac(rng), rng.randint(1, 3)),
                      "b": (_nonzero_frac(rng), rng.randint(1, 3))},
    constraints=("a, b bound to c*q^d monomials with d >= 1",),
)


# -- Mehler formulas (T5) ---------------------------------------------------------------


def _mehler_lhs(e):
    t = e.var("t")
    total = None
    tpow = e.one()
    for n in range(e.order + 1):
        term = sw_star(n, e.caps, e.table, "x", "y") \
            * sw_star(n, e.caps, e.table, "w", "z") * tpow * e.qfact_inv(n)
        total = term if total is None else total + term
        tpow = tpow * t
    return total


def _mehler_rhs(e):
    t, w_, x, y, z = (e.var(v) for v in "twxyz")
    front = e.pochinf_inv([t * w_ * x])
    acc = None
    kmax = min(e.vcap("t"), e.vcap("y"))
    for k in range(kmax + 1):
        if 2 * k * k > e.caps.qmax:
            break
        term = e.qpow(2 * k * k) * e.pochn([t * w_ * x], k) \
            * (t * y * z) ** k * rq(t * z * e.qpow(2 * k) * x) \
            * rq(t * y * e.qpow(2 * k) * w_) * e.qfact_inv(k)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T5-MEHLER",
    description="Mehler-type bilinear generating function for S*_n",
    build_lhs=_mehler_lhs,
    build_rhs=_mehler_rhs,
    window=("t",), qmax=20, deg=6, order=6,
)


def _opprod_lhs(e):
    nmax = _rr_bound(e)
    w = e.inflated(x=nmax, a=nmax, b=nmax)
    f = w.pochinf([w.var("a") * w.var("x")]) \
        * w.pochinf([w.var("b") * w.var("x")])
    return rr_op(f, OperatorContext("x", "y"), w.caps).truncate(e.caps)


def _opprod_rhs(e):
    # sign convention: (-qay)^k with 0phi2 argument +q^(2k+1)by; the
    # variant with (qay)^k and -q^(2k+1)by is the same series at -y and
    # does not match the operator image (odd-n sign from the D_q^n image
    # of (ax;q)inf)
    a, b, x, y = e.var("a"), e.var("b"), e.var("x"), e.var("y")
    front = e.pochinf([a * x]) * e.pochinf([b * x])
    acc = None
    kmax = min(e.vcap("y"), e.vcap("a"))
    for k in range(kmax + 1):
        if 3 * (k * (k - 1) // 2) > e.caps.qmax:
            break
        inner = phi([], [b * e.qpow(k) * x, 0],
                    e.qpow(2 * k + 1) * b * y, e.caps, e.table)
        term = e.qpow(3 * (k * (k - 1) // 2)) * (-(e.qpow(1) * a * y)) ** k \
            * inner / (e.pochn([a * x], k) * e.pochn([b * x], k)) \
            * e.qfact_inv(k)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T5-OPPROD",
    description="R(yD_q){(ax,bx;q)inf} as a 0phi2-weighted sum",
    build_lhs=_opprod_lhs,
    build_rhs=_opprod_rhs,
    qmax=20, deg=6, order=6,
)


def _altmehler_lhs(e):
    zv = e.var("z")
    total = None
    zpow = e.one()
    for n in range(e.order + 1):
        w = e.inflated(dq=n * n)
        swl = sw_star(n, w.caps, w.table, "a", "b") \
            .substitute("b", 1, Monomial(-n, ZV_B))
        sign = 1 if n % 2 == 0 else -1
        term = sign * w.qpow(n * (n - 1) // 2) \
            * sw_star(n, w.caps, w.table, "x", "y") * swl * w.qfact_inv(n)
        term = term.truncate(e.caps) * zpow
        total = term if total is None else total + term
        zpow = zpow * zv
    return total


def _altmehler_rhs(e):
    # the operator image of (azx,bzx;q)inf: same sign convention as
    # T5-OPPROD, with a -> az and b -> bz carried through everywhere
    a, b, x, y, z = (e.var(v) for v in "abxyz")
    front = e.pochinf([a * z * x]) * e.pochinf([b * z * x])
    acc = None
    kmax = min(e.vcap("z"), e.vcap("y"))
    for k in range(kmax + 1):
        if 3 * (k * (k - 1) // 2) > e.caps.qmax:
            break
        inner = phi([], [b * e.qpow(k) * z * x, 0],
                    e.qpow(2 * k + 1) * b * z * y, e.caps, e.table)
        term = e.qpow(3 * (k * (k - 1) // 2)) \
            * (-(e.qpow(1) * a * z * y)) ** k \
            * inner / (e.pochn([a * z * x], k) * e.pochn([b * z * x], k)) \
            * e.qfact_inv(k)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T5-ALTMEHLER",
    description="alternating Mehler-type formula with q^(-n)-shifted second "
                "family",
    build_lhs=_altmehler_lhs,
    build_rhs=_altmehler_rhs,
    window=("z",), qmax=20, deg=6, order=6,
)


# -- Rogers formulas (T6) -----------------------------------------------------------------


def _ts_complete(bindings):
    _require(bindings, "t", "s")
    t, s = bindings["t"], bindings["s"]
    if not isinstance(t, Fraction) or not isinstance(s, Fraction):
        raise BindingViolation("t and s must be nonzero rationals")
    if t == s:
        raise BindingViolation("t and s must differ (t/s = 1 degenerates)")
    return bindings


def _rand_ts(rng):
    t = _nonzero_frac(rng)
    s = _nonzero_frac(rng)
    while s == t:
        s = _nonzero_frac(rng)
    return {"t": t, "s": s}


def _rogers_lhs(alternating):
    def build(e):
        tv, sv = e.sym("t"), e.sym("s")
        total = None
        for n in range(e.order + 1):
            tpow = tv ** n
            if alternating:
                sign = 1 if n % 2 == 0 else -1
                tpow = sign * e.qpow(n * (n - 1) // 2) * tpow
            for m in range(e.order + 1 - n):
                term = sw_star(n + m, e.caps, e.table) * tpow * sv ** m \
                    * e.qfact_inv(n) * e.qfact_inv(m)
                total = term if total is None else total + term
        return total
    return build


def _rogers_alt_rhs(e):
    # 1phi2 argument is qsy, not qy: the operator differentiates x while
    # the operand is a function of sx, so every D_q carries a factor s
    t, s = e.bindings["t"], e.bindings["s"]
    x, y = e.var("x"), e.var("y")
    tv, sv = e.sym("t"), e.sym("s")
    return e.pochinf([tv * x]) * e.pochinf_inv([sv * x]) \
        * phi([e.const(t / s)], [tv * x, 0], e.qpow(1) * sv * y,
              e.caps, e.table)


def _rogers_rhs(e):
    tv, sv = e.sym("t"), e.sym("s")
    x, y = e.var("x"), e.var("y")
    front = e.pochinf_inv([tv * x, sv * x])
    acc = None
    imax = min(e.vcap("y"), math.isqrt(e.caps.qmax))
    for i in range(imax + 1):
        term = e.qpow(i * i) * e.pochn([sv * x], i) * (tv * y) ** i \
            * rq(sv * e.qpow(2 * i) * y) * e.qfact_inv(i)
        acc = term if acc is None else acc + term
    return front * acc


_ident(
    id="T6-ROGERS-ALT",
    description="alternating Rogers-type double generating function via "
                "1phi2",
    build_lhs=_rogers_lhs(alternating=True),
    build_rhs=_rogers_alt_rhs,
    window=("x", "y"), qmax=20, deg=6, order=6,
    free=("t", "s"), complete=_ts_complete, rand=_rand_ts,
    constraints=("t, s nonzero rationals with t != s",),
)

_ident(
    id="T6-ROGERS",
    description="Rogers-type double generating function as an R_q-weighted "
                "sum",
    build_lhs=_rogers_lhs(alternating=False),
    build_rhs=_rogers_rhs,
    window=("x", "y"), qmax=20, deg=6, order=6,
    free=("t", "s"), complete=_ts_complete, rand=_rand_ts,
    constraints=("t, s nonzero rationals with t != s",),
)


BY_ID = {spec.id: spec for spec in REGISTRY}
