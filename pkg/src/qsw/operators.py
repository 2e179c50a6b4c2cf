"""The q-derivative, its powers and Leibniz rule, and the Rogers-Ramanujan
operator R(y D_q) = sum q^(n^2) y^n D_q^n / (q; q)_n.

All operators act on exact representatives: D_q is the coefficientwise map
x^k -> (1 - q^k) x^(k-1), equivalent to (f(x) - f(qx)) / x by linearity.
Callers verifying identities about infinite objects are responsible for
building inputs with enough headroom in the differentiation variable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import Monomial, Series, TruncationSpec, one, q_power, variable
from .qfunctions import qbinom, qfact_inv


@dataclass(frozen=True)
class OperatorContext:
    """Differentiation variable x and operator weight variable y."""

    x: str
    y: str

    def __post_init__(self):
        if self.x == self.y or "q" in (self.x, self.y):
            raise ValueError("operator variables must be distinct and not q")


def dq(f: Series, x: str) -> Series:
    """q-derivative of f with respect to x."""
    i = f.table.slot(x)
    raw: dict = {}
    qmax = f.caps.qmax
    for (qr, ve), c in f.terms.items():
        k = ve[i]
        if k == 0:
            continue
        nv = list(ve)
        nv[i] = k - 1
        nv = tuple(nv)
        key = (qr, nv)
        prev = raw.get(key)
        raw[key] = c if prev is None else prev + c
        qhi = qr + k
        if qhi <= qmax:
            key = (qhi, nv)
            prev = raw.get(key)
            raw[key] = -c if prev is None else prev - c
    return Series._build(f.table, f.caps, f.qfloor, raw)


def dq_pow(f: Series, x: str, n: int) -> Series:
    """n-fold iterate of the q-derivative."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for _ in range(n):
        f = dq(f, x)
    return f


def leibniz_rhs(f: Series, g: Series, x: str, n: int) -> Series:
    """Right side of the D_q Leibniz rule:

        sum_k q^(k(k-n)) [n k]_q  D_q^k{f(x)}  *  D_q^(n-k){g(q^k x)}

    D_q^(n-k) acts on the dilated function x -> g(q^k x); the chain-rule
    factor q^(k(n-k)) it produces is what the q^(k(k-n)) weight cancels.
    The weights are Laurent, so the computation runs at a widened q-window
    and the ordinary assembled sum is exact modulo meet(f.caps, g.caps).
    """
    f._same_table(g)
    caps = f.caps.meet(g.caps)
    table = f.table
    xslot = table.slot(x)
    xdeg = max(f.max_exp(x), g.max_exp(x))
    margin = caps.qmax + n * xdeg + (n * n) // 4 + 1
    work = TruncationSpec(caps.qmax + margin, caps.vcaps)
    fw = f.with_caps(TruncationSpec(work.qmax, f.caps.vcaps))
    gw = g.with_caps(TruncationSpec(work.qmax, g.caps.vcaps))
    xunit = [0] * table.nvars
    xunit[xslot] = 1
    xunit = tuple(xunit)
    total = None
    for k in range(n + 1):
        dfk = dq_pow(fw, x, k)
        dgk = dq_pow(gw.substitute(x, 1, Monomial(k, xunit)), x, n - k)
        term = qbinom(n, k, work, table) * dfk * dgk
        w = k * (k - n)
        if w:
            term = term * q_power(w, table, work)
        total = term if total is None else total + term
    return total.truncate(caps)


def rr_op(f: Series, ctx: OperatorContext,
          caps: TruncationSpec = None) -> Series:
    """Apply R(y D_q) = sum q^(n^2) y^n D_q^n / (q; q)_n to f.

    The sum truncates at the least of three certified bounds: the order at
    which D_q^n f vanishes, the y-cap, and isqrt(qmax) (the q^(n^2) weight
    alone kills later terms).
    """
    caps = caps if caps is not None else f.caps
    table = f.table
    table.slot(ctx.x)
    ycap = caps.vcaps[table.slot(ctx.y)]
    nmax = min(ycap, math.isqrt(caps.qmax))
    total = f.truncate(caps)
    deriv = f
    yvar = variable(ctx.y, table, caps)
    ypow = one(table, caps)
    for n in range(1, nmax + 1):
        deriv = dq(deriv, ctx.x)
        if deriv.is_zero():
            break
        ypow = ypow * yvar
        total = total + q_power(n * n, table, caps) * ypow \
            * qfact_inv(n, caps, table) * deriv.truncate(caps)
    return total
