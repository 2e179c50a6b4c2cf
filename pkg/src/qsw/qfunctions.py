"""q-Pochhammer symbols, Gaussian binomials, basic hypergeometric series,
the q-exponentials, Garrett's coefficient polynomials, and the Ramanujan
q-exponential, all as exact truncated series.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .series import (
    DEFAULT_TABLE, Monomial, Scalar, Series, TruncationSpec, VarTable,
    constant, make_series, one, q_power, zero,
)

INFINITY = math.inf

Arg = Union[Series, int, Fraction]


class NonTerminatingSeries(ValueError):
    """No termination certificate for an infinite sum."""


class NegativeQOrderInInfiniteProduct(ValueError):
    """Infinite Pochhammer products require ordinary (floor 0) arguments."""


def _coerce(x: Arg, table: VarTable, caps: TruncationSpec) -> Series:
    if isinstance(x, Series):
        return x
    return constant(x, table, caps)


def poch(args: Sequence[Arg], count, caps: TruncationSpec,
         table: VarTable = DEFAULT_TABLE, base: int = 1) -> Series:
    """Multiple q-shifted factorial (a1, ..., am; q^base)_count.

    count is a non-negative integer or INFINITY.  The infinite product is
    truncated at k = qmax // base; all later factors are units modulo the
    ideal, which requires every argument to be an ordinary series.
    """
    if base < 1:
        raise ValueError("base must be a positive integer")
    result = one(table, caps)
    if count is INFINITY:
        kmax = caps.qmax // base
        for a in args:
            s = _coerce(a, table, caps)
            if s.qfloor < 0:
                raise NegativeQOrderInInfiniteProduct(
                    "infinite product argument has negative q-order")
            for k in range(kmax + 1):
                result = result * (one(table, caps) - s * q_power(base * k, table, caps))
        return result
    if not isinstance(count, int) or count < 0:
        raise ValueError("count must be a non-negative integer or INFINITY")
    for a in args:
        s = _coerce(a, table, caps)
        for k in range(count):
            result = result * (one(table, caps) - s * q_power(base * k, table, caps))
    return result


@lru_cache(maxsize=None)
def qfact_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of (q; q)_n as a polynomial in q."""
    coeffs = [1]
    for k in range(1, n + 1):
        # multiply by (1 - q^k)
        new = coeffs + [0] * k
        for i, c in enumerate(coeffs):
            new[i + k] -= c
        coeffs = new
    return tuple(coeffs)


@lru_cache(maxsize=None)
def qbinom_coeffs(n: int, k: int) -> tuple[int, ...]:
    """Integer coefficients of the Gaussian polynomial [n choose k]_q.

    Zero polynomial () when k < 0 or k > n.
    """
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    # Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
    a = qbinom_coeffs(n - 1, k - 1)
    b = qbinom_coeffs(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def qbinom(n: int, k: int, caps: TruncationSpec,
           table: VarTable = DEFAULT_TABLE) -> Series:
    """Gaussian binomial coefficient as a q-polynomial series."""
    zv = table.zero_vexps
    entries = [(c, Monomial(i, zv))
               for i, c in enumerate(qbinom_coeffs(n, k)) if c]
    return make_series(entries, caps, table)


def qfact(n: int, caps: TruncationSpec,
          table: VarTable = DEFAULT_TABLE) -> Series:
    """(q; q)_n as a series."""
    zv = table.zero_vexps
    entries = [(c, Monomial(i, zv))
               for i, c in enumerate(qfact_coeffs(n)) if c]
    return make_series(entries, caps, table)


@lru_cache(maxsize=None)
def _qfact_inv_coeffs(n: int, qmax: int, base: int = 1) -> tuple[int, ...]:
    """Dense coefficients of 1/(q^base; q^base)_n modulo q^(qmax+1).

    The inverse of a monic integer product with unit constant term has
    integer coefficients."""
    g = [0] * (qmax + 1)
    for i, c in enumerate(qfact_coeffs(n)):
        if i * base > qmax:
            break
        g[i * base] = c
    h = [0] * (qmax + 1)
    h[0] = 1
    for m in range(1, qmax + 1):
        acc = 0
        for j in range(1, m + 1):
            if g[j]:
                acc += g[j] * h[m - j]
        if acc:
            h[m] = -acc
    return tuple(h)


def qfact_inv(n: int, caps: TruncationSpec,
              table: VarTable = DEFAULT_TABLE) -> Series:
    """1/(q; q)_n as a series, cached densely."""
    zv = table.zero_vexps
    entries = [(c, Monomial(i, zv))
               for i, c in enumerate(_qfact_inv_coeffs(n, caps.qmax)) if c]
    return make_series(entries, caps, table)


def poch_inf_inv(args: Sequence[Arg], caps: TruncationSpec,
                 table: VarTable = DEFAULT_TABLE, base: int = 1) -> Series:
    """1 / (a1, ..., am; q^base)_inf.

    Arguments with positive weight are expanded by the q-exponential sum
    1/(c; q^base)_inf = sum c^m / (q^base; q^base)_m, which is far cheaper
    than a Newton inversion; anything else falls back to inverting the
    truncated product.
    """
    result = one(table, caps)
    zv = table.zero_vexps
    for a in args:
        s = _coerce(a, table, caps)
        if s.qfloor < 0:
            raise NegativeQOrderInInfiniteProduct(
                "infinite product argument has negative q-order")
        if s.is_zero():
            continue
        if not _weight_certificate(s):
            result = result * poch([s], INFINITY, caps, table,
                                   base=base).reciprocal()
            continue
        total = one(table, caps)
        spow = one(table, caps)
        m = 0
        while True:
            spow = spow * s
            m += 1
            if spow.is_zero():
                break
            coeffs = _qfact_inv_coeffs(m, caps.qmax, base)
            inv = make_series([(c, Monomial(i, zv))
                               for i, c in enumerate(coeffs) if c],
                              caps, table)
            total = total + spow * inv
        result = result * total
    return result


# -- basic hypergeometric series ------------------------------------------------


def _as_neg_q_power(s: Series):
    """If s is exactly the monomial q^(-m) with m >= 0, return m, else None."""
    if len(s.terms) != 1:
        return None
    ((qr, ve), c), = s.terms.items()
    if c != 1 or any(ve):
        return None
    qa = qr + s.qfloor
    return -qa if qa <= 0 else None


def _weight_certificate(z: Series) -> bool:
    """True iff every monomial of z has positive q-exponent or variable content."""
    for (qr, ve), _ in z.terms.items():
        if qr + z.qfloor < 1 and not any(ve):
            return False
    return True


def _lift_qmax(s: Series, qmax: int) -> Series:
    """Widen the q-window claim of an exact representative."""
    if s.caps.qmax >= qmax:
        return s
    return s.with_caps(TruncationSpec(qmax, s.caps.vcaps))


def phi(upper: Sequence[Arg], lower: Sequence[Arg], z: Arg,
        caps: TruncationSpec, table: VarTable = DEFAULT_TABLE) -> Series:
    """Basic hypergeometric series r_phi_s(upper; lower; q, z), truncated.

    The n-th term carries [(-1)^n q^C(n,2)]^(1+s-r).  A termination
    certificate is required: either some upper parameter is exactly a
    monomial q^(-m) (the sum terminates at n = m), or every monomial of the
    ordinary series z has positive q-exponent or nonzero variable degree.
    Arguments are treated as exact representatives.
    """
    if isinstance(z, Series):
        table = z.table
    ups = [_coerce(u, table, caps) for u in upper]
    lows = [_coerce(l, table, caps) for l in lower]
    zs = _coerce(z, table, caps)
    e = 1 + len(lows) - len(ups)

    terminate_at = None
    for u in ups:
        m = _as_neg_q_power(u)
        if m is not None:
            terminate_at = m if terminate_at is None else min(terminate_at, m)
    if terminate_at is None:
        if e < 0 or zs.qfloor < 0 or not _weight_certificate(zs):
            raise NonTerminatingSeries(
                "no terminating upper parameter and z does not increase weight")
        work = caps
    else:
        # (q^-m; q)_n factors give Laurent intermediate terms even though the
        # finite sum is exact; widen the working q-window so nothing inside
        # the requested ideal is clipped before the terms recombine.
        m = terminate_at
        margin = m * (m + 1) // 2 + m
        if e < 0:
            margin += (-e) * (m * (m - 1) // 2)
        work = TruncationSpec(caps.qmax + margin, caps.vcaps)
        ups = [_lift_qmax(u, work.qmax) for u in ups]
        lows = [_lift_qmax(l, work.qmax) for l in lows]
        zs = _lift_qmax(zs, work.qmax)

    unit = one(table, work)
    total = unit
    term = unit
    n = 0
    limit = work.qmax + sum(work.vcaps) + 2
    while True:
        if terminate_at is not None and n > terminate_at:
            break
        if n >= limit:
            break
        # ratio term_{n+1} / term_n
        factor = zs
        for u in ups:
            factor = factor * (unit - u * q_power(n, table, work))
        if e:
            factor = factor * q_power(e * n, table, work)
            if e % 2:
                factor = -factor
        den = unit - q_power(n + 1, table, work)
        for l in lows:
            den = den * (unit - l * q_power(n, table, work))
        term = term * factor / den
        if term.is_zero():
            break
        total = total + term
        n += 1
    return total.truncate(caps)


def eq_small(z: Series, caps: TruncationSpec = None) -> Series:
    """q-exponential e_q(z) = sum z^n / (q; q)_n."""
    caps = caps if caps is not None else z.caps
    table = z.table
    if not _weight_certificate(z) or z.qfloor < 0:
        raise NonTerminatingSeries("e_q needs z with positive weight")
    total = one(table, caps)
    zpow = one(table, caps)
    n = 0
    while True:
        zpow = zpow * z
        n += 1
        if zpow.is_zero():
            break
        total = total + zpow * qfact_inv(n, caps, table)
    return total


def eq_big(z: Series, caps: TruncationSpec = None) -> Series:
    """q-exponential E_q(z) = sum q^C(n,2) z^n / (q; q)_n."""
    caps = caps if caps is not None else z.caps
    table = z.table
    if not _weight_certificate(z) or z.qfloor < 0:
        raise NonTerminatingSeries("E_q needs z with positive weight")
    total = one(table, caps)
    zpow = one(table, caps)
    n = 0
    while True:
        zpow = zpow * z
        n += 1
        if zpow.is_zero():
            break
        total = total + q_power(n * (n - 1) // 2, table, caps) * zpow \
            * qfact_inv(n, caps, table)
    return total


# -- Ramanujan q-exponential -----------------------------------------------------


def rq(z: Union[Series, Scalar], caps: TruncationSpec = None,
       table: VarTable = DEFAULT_TABLE) -> Series:
    """Ramanujan q-exponential sum q^(n^2) z^n / (q; q)_n, truncated.

    z may be Laurent in q; the per-term q-valuation n^2 + n*val(z) always
    diverges, so the sum terminates against any caps.
    """
    if isinstance(z, Series):
        table = z.table
        caps = caps if caps is not None else z.caps
    elif caps is None:
        raise ValueError("caps required when z is a scalar")
    zs = _coerce(z, table, caps)
    if zs.is_zero():
        return one(table, caps)
    v = zs.min_qexp()
    if v < 0:
        # widen the window so q^(n^2) * z^n is exact before the final truncation
        nmax = 1
        while nmax * nmax + nmax * v <= caps.qmax:
            nmax += 1
        work = TruncationSpec(caps.qmax + (-v) * nmax, caps.vcaps)
        zs = _lift_qmax(zs, work.qmax)
    else:
        work = caps
    total = one(table, work)
    zpow = one(table, work)
    n = 0
    while True:
        n += 1
        if n * n + n * v > caps.qmax:
            break
        zpow = zpow * zs
        if zpow.is_zero():
            break
        total = total + q_power(n * n, table, work) * zpow \
            * qfact_inv(n, work, table)
    return total.truncate(caps)


def rq_at_power(k: int, caps: TruncationSpec,
                table: VarTable = DEFAULT_TABLE) -> Series:
    """Direct summation of sum q^(n^2 + k*n) / (q; q)_n (oracle form)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    zv = table.zero_vexps
    total = one(table, caps)
    n = 0
    while True:
        n += 1
        w = n * n + k * n
        if w > caps.qmax:
            break
        total = total + make_series([(1, Monomial(w, zv))], caps, table) \
            * qfact_inv(n, caps, table)
    return total


# -- Garrett coefficient polynomials ----------------------------------------------


def _garrett_poly(k: int, exp_coef: int, offset: int, caps: TruncationSpec,
                  table: VarTable) -> Series:
    # sum over all integers i with a nonzero q-binomial; |i| <= k suffices
    # since the floor argument must land in [0, k-1]
    zv = table.zero_vexps
    entries = []
    for i in range(-k, k + 1):
        j = (k + offset - 5 * i) // 2  # floor division handles negatives
        coeffs = qbinom_coeffs(k - 1, j)
        if not coeffs:
            continue
        w = i * (5 * i + exp_coef) // 2
        sign = -1 if i % 2 else 1
        for d, c in enumerate(coeffs):
            if c:
                entries.append((sign * c, Monomial(w + d, zv)))
    return make_series(entries, caps, table)


def garrett_a(k: int, caps: TruncationSpec,
              table: VarTable = DEFAULT_TABLE) -> Series:
    """Garrett coefficient a_k(q); a_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return one(table, caps)
    return _garrett_poly(k, -3, 1, caps, table)


def garrett_b(k: int, caps: TruncationSpec,
              table: VarTable = DEFAULT_TABLE) -> Series:
    """Garrett coefficient b_k(q); b_0 = 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return zero(table, caps)
    return _garrett_poly(k, 1, -1, caps, table)
