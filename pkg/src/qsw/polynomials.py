"""Stieltjes-Wigert polynomial families and generalized Rogers-Szego
polynomials.

sw_star is the canonical direct-sum construction; sw_star_op realizes the
same polynomial as the Rogers-Ramanujan operator image of x^n, giving an
independent cross-check path.
"""

from __future__ import annotations

from .series import DEFAULT_TABLE, Monomial, Series, TruncationSpec, VarTable, \
    make_series, monomial_series, q_power
from .qfunctions import phi, qbinom_coeffs, qfact_inv
from .operators import OperatorContext, rr_op

MAX_ORDER = 64


def _check_order(n: int):
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 0..{MAX_ORDER}")


def sw_classic(n: int, caps: TruncationSpec,
               table: VarTable = DEFAULT_TABLE, x: str = "x") -> Series:
    """Classical Stieltjes-Wigert polynomial S_n(x; q).

    Built as 1/(q;q)_n times the terminating 1-phi-1 with upper parameter
    q^(-n) and argument -q^(n+1) x.
    """
    _check_order(n)
    z = monomial_series(-1, n + 1, {x: 1}, table, caps)
    return phi([q_power(-n, table, caps)], [0], z, caps, table) \
        * qfact_inv(n, caps, table)


def sw_star(n: int, caps: TruncationSpec, table: VarTable = DEFAULT_TABLE,
            x: str = "x", y: str = "y") -> Series:
    """Bivariate Stieltjes-Wigert polynomial
    sum_k [n k]_q q^(k^2) x^(n-k) y^k (homogeneous of degree n)."""
    _check_order(n)
    xi, yi = table.slot(x), table.slot(y)
    entries = []
    for k in range(n + 1):
        ve = [0] * table.nvars
        ve[xi] += n - k
        ve[yi] += k
        ve = tuple(ve)
        for d, c in enumerate(qbinom_coeffs(n, k)):
            if c:
                entries.append((c, Monomial(k * k + d, ve)))
    return make_series(entries, caps, table)


def sw_star_op(n: int, caps: TruncationSpec, table: VarTable = DEFAULT_TABLE,
               x: str = "x", y: str = "y") -> Series:
    """Operator image R(y D_q){x^n}; must agree with sw_star.

    Runs with enough x-headroom to hold x^n even when n exceeds the
    requested cap, then truncates back.
    """
    _check_order(n)
    xslot = table.slot(x)
    vc = list(caps.vcaps)
    if vc[xslot] < n:
        vc[xslot] = n
    work = TruncationSpec(caps.qmax, tuple(vc))
    xn = monomial_series(1, 0, {x: n}, table, work)
    return rr_op(xn, OperatorContext(x, y), work).truncate(caps)


def rogers_szego(n: int, caps: TruncationSpec,
                 table: VarTable = DEFAULT_TABLE,
                 a: str = "a", b: str = "b") -> Series:
    """Generalized Rogers-Szego polynomial sum_k [n k]_q a^(n-k) b^k."""
    _check_order(n)
    ai, bi = table.slot(a), table.slot(b)
    entries = []
    for k in range(n + 1):
        ve = [0] * table.nvars
        ve[ai] += n - k
        ve[bi] += k
        ve = tuple(ve)
        for d, c in enumerate(qbinom_coeffs(n, k)):
            if c:
                entries.append((c, Monomial(d, ve)))
    return make_series(entries, caps, table)
