"""Exact arithmetic in truncated multivariate power series over Q.

A Series lives in the ring Q[[q, x, y, ...]] reduced modulo the monomial
ideal generated by q^(qmax+1) and v^(cap_v+1) for every non-q variable v.
The distinguished variable q additionally admits Laurent behaviour through
a valuation floor: a Series represents q^qfloor * F where F is an ordinary
series stored with exponents relative to the floor.  No other variable may
carry negative exponents.

Coefficients are fractions.Fraction (always in lowest terms, positive
denominator), so every result is exact modulo its own stated ideal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union


class VarTableMismatch(ValueError):
    """Two series over different variable tables were combined."""


class DivisionByNonUnit(ZeroDivisionError):
    """Divisor has zero coefficient at the all-zero monomial."""


class VariableNotFound(KeyError):
    """A variable name is absent from the table (or is the reserved q)."""


DEFAULT_NAMES = ("q", "x", "y", "z", "t", "s", "w", "a", "b")

Scalar = Union[int, Fraction]


class VarTable:
    """Ordered table of variable names; q is reserved and always index 0."""

    __slots__ = ("names", "_index", "zero_vexps")

    def __init__(self, names: Iterable[str] = DEFAULT_NAMES):
        names = tuple(names)
        if not names or names[0] != "q":
            raise ValueError("variable table must start with the reserved variable q")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self.zero_vexps = (0,) * (len(names) - 1)

    @property
    def nvars(self) -> int:
        """Number of non-q variables."""
        return len(self.names) - 1

    def slot(self, name: str) -> int:
        """Index of a non-q variable into exponent vectors."""
        i = self._index.get(name)
        if i is None or i == 0:
            raise VariableNotFound(name)
        return i - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable{self.names}"


DEFAULT_TABLE = VarTable()


class Monomial(NamedTuple):
    """q^qexp * prod v_i^vexps[i]; qexp is signed, vexps are >= 0."""

    qexp: int
    vexps: tuple[int, ...]


@dataclass(frozen=True)
class TruncationSpec:
    """Caps defining the truncation ideal (q^(qmax+1), v^(cap+1), ...)."""

    qmax: int
    vcaps: tuple[int, ...]

    def __post_init__(self):
        if self.qmax < 0 or any(c < 0 for c in self.vcaps):
            raise ValueError("caps must be non-negative")

    def meet(self, other: "TruncationSpec") -> "TruncationSpec":
        if len(self.vcaps) != len(other.vcaps):
            raise VarTableMismatch("caps over different variable tables")
        return TruncationSpec(
            min(self.qmax, other.qmax),
            tuple(min(a, b) for a, b in zip(self.vcaps, other.vcaps)),
        )

    def admits(self, qrel: int, vexps: tuple[int, ...]) -> bool:
        if qrel > self.qmax:
            return False
        for e, c in zip(vexps, self.vcaps):
            if e > c:
                return False
        return True


def caps(qmax: int, table: VarTable = DEFAULT_TABLE, default: int = 8,
         **per_var: int) -> TruncationSpec:
    """Convenience TruncationSpec builder with per-variable overrides."""
    vcaps = [default] * table.nvars
    for name, cap in per_var.items():
        vcaps[table.slot(name)] = cap
    return TruncationSpec(qmax, tuple(vcaps))


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _as_coeff(c: Scalar):
    # plain ints are kept unwrapped: integer arithmetic is far cheaper than
    # Fraction and both expose numerator/denominator for rendering
    if isinstance(c, (int, Fraction)):
        return c
    raise TypeError(f"coefficients must be int or Fraction, got {type(c)!r}")


def _invert_scalar(c):
    inv = Fraction(1, c) if isinstance(c, int) else 1 / c
    return inv.numerator if inv.denominator == 1 else inv


class Series:
    """Immutable truncated series; all operations are pure functions.

    terms maps (qrel, vexps) -> Fraction with 0 <= qrel <= caps.qmax and
    the absolute q-exponent equal to qfloor + qrel.  Invariants: no zero
    coefficient is stored; the zero series has qfloor == 0; a nonzero
    series has qfloor == 0 or some term at qrel == 0.
    """

    __slots__ = ("table", "qfloor", "terms", "caps", "pure_q")

    def __init__(self, table, qfloor, terms, caps_, pure_q):
        # internal: use make_series / helpers, not this constructor
        self.table = table
        self.qfloor = qfloor
        self.terms = terms
        self.caps = caps_
        self.pure_q = pure_q

    # -- construction ------------------------------------------------------

    @staticmethod
    def _build(table: VarTable, caps_: TruncationSpec, qfloor: int,
               raw: dict) -> "Series":
        """Normalize a raw (qrel, vexps)->coeff map into a valid Series."""
        if qfloor > 0:
            # fold a positive valuation into the exponents (floor stays <= 0)
            raw = {(qr + qfloor, ve): c for (qr, ve), c in raw.items()}
            qfloor = 0
        terms = {}
        for (qr, ve), c in raw.items():
            if c and qr >= 0 and caps_.admits(qr, ve):
                terms[(qr, ve)] = c
        if not terms:
            return Series(table, 0, {}, caps_, True)
        if qfloor < 0:
            m = min(qr for qr, _ in terms)
            if m > 0:
                lift = min(m, -qfloor)
                terms = {(qr - lift, ve): c for (qr, ve), c in terms.items()}
                qfloor += lift
        zero_ve = table.zero_vexps
        pure_q = all(ve == zero_ve for _, ve in terms)
        return Series(table, qfloor, terms, caps_, pure_q)

    def _same_table(self, other: "Series"):
        if self.table is not other.table and self.table != other.table:
            raise VarTableMismatch(
                f"{self.table!r} vs {other.table!r}")

    # -- predicates / accessors --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Monomial):
        """Coefficient of a monomial (absolute q-exponent); 0 outside caps."""
        qrel = m.qexp - self.qfloor
        if qrel < 0 or not self.caps.admits(qrel, m.vexps):
            return Fraction(0)
        return self.terms.get((qrel, m.vexps), Fraction(0))

    def constant_term(self):
        """Coefficient at the all-zero monomial relative to the floor."""
        return self.terms.get((0, self.table.zero_vexps), 0)

    def monomials(self):
        """Iterate (Monomial, coeff) with absolute q-exponents."""
        f = self.qfloor
        for (qr, ve), c in self.terms.items():
            yield Monomial(qr + f, ve), c

    def min_qexp(self) -> int:
        """Least absolute q-exponent among stored terms (0 for the zero series)."""
        if not self.terms:
            return 0
        return self.qfloor + min(qr for qr, _ in self.terms)

    def max_exp(self, var: str) -> int:
        """Largest stored exponent of a non-q variable."""
        i = self.table.slot(var)
        return max((ve[i] for _, ve in self.terms), default=0)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> Optional["Series"]:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return constant(other, self.table, self.caps)
        return None

    def __add__(self, other) -> "Series":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        self._same_table(g)
        mcaps = self.caps.meet(g.caps)
        floor = min(self.qfloor, g.qfloor)
        raw: dict = {}
        for src in (self, g):
            shift = src.qfloor - floor
            for (qr, ve), c in src.terms.items():
                k = (qr + shift, ve)
                nc = raw.get(k)
                raw[k] = c if nc is None else nc + c
        return Series._build(self.table, mcaps, floor, raw)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        terms = {k: -c for k, c in self.terms.items()}
        s = Series(self.table, self.qfloor, terms, self.caps, self.pure_q)
        return s

    def __sub__(self, other) -> "Series":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def _by_vexps(self, qmax: int) -> dict:
        """Group terms by variable part: vexps -> [(qrel, coeff), ...]."""
        groups: dict = {}
        for (qr, ve), c in self.terms.items():
            if qr <= qmax:
                lst = groups.get(ve)
                if lst is None:
                    groups[ve] = [(qr, c)]
                else:
                    lst.append((qr, c))
        return groups

    def __mul__(self, other) -> "Series":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        self._same_table(g)
        mcaps = self.caps.meet(g.caps)
        floor = self.qfloor + g.qfloor
        qmax = mcaps.qmax
        vcaps = mcaps.vcaps
        # convolve per pair of variable parts with a dense q-inner loop
        ga = self._by_vexps(qmax)
        gb = g._by_vexps(qmax)
        if len(ga) > len(gb):
            ga, gb = gb, ga
        acc: dict = {}
        for va, la in ga.items():
            for vb, lb in gb.items():
                ve = []
                dead = False
                for e1, e2, cp in zip(va, vb, vcaps):
                    s = e1 + e2
                    if s > cp:
                        dead = True
                        break
                    ve.append(s)
                if dead:
                    continue
                ve = tuple(ve)
                dense = acc.get(ve)
                if dense is None:
                    dense = acc[ve] = [0] * (qmax + 1)
                for qa, ca in la:
                    lim = qmax - qa
                    for qb, cb in lb:
                        if qb <= lim:
                            dense[qa + qb] += ca * cb
        raw = {}
        for ve, dense in acc.items():
            for qr, c in enumerate(dense):
                if c:
                    raw[(qr, ve)] = c
        return Series._build(self.table, mcaps, floor, raw)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = one(self.table, self.caps)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse modulo the truncation ideal."""
        c0 = self.constant_term()
        if not c0:
            raise DivisionByNonUnit("constant term is zero")
        table, cps = self.table, self.caps
        zv = table.zero_vexps
        if self.pure_q:
            # dense univariate recurrence
            qmax = cps.qmax
            g = [0] * (qmax + 1)
            for (qr, _), c in self.terms.items():
                if qr <= qmax:
                    g[qr] = c
            inv0 = _invert_scalar(c0)
            h = [0] * (qmax + 1)
            h[0] = inv0
            for m in range(1, qmax + 1):
                acc = 0
                for j in range(1, m + 1):
                    if g[j]:
                        acc += g[j] * h[m - j]
                if acc:
                    h[m] = -acc * inv0
            raw = {(i, zv): c for i, c in enumerate(h) if c}
            return Series._build(table, cps, -self.qfloor, raw)
        # Newton iteration on the floor-stripped ordinary part
        g = Series(table, 0, self.terms, cps, self.pure_q)
        x = constant(_invert_scalar(c0), table, cps)
        unit = one(table, cps)
        limit = cps.qmax + sum(cps.vcaps) + 2
        for _ in range(limit):
            err = unit - g * x
            if err.is_zero():
                break
            x = x + x * err
        else:
            raise AssertionError("reciprocal failed to converge")
        return Series._build(table, cps, -self.qfloor,
                             {(qr, ve): c for (qr, ve), c in x.terms.items()})

    def __truediv__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByNonUnit("division by zero scalar")
            return self * _invert_scalar(other)
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        self._same_table(g)
        return self * g.reciprocal()

    def __rtruediv__(self, other) -> "Series":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g * self.reciprocal()

    # -- structure operations ------------------------------------------------

    def truncate(self, new_caps: TruncationSpec) -> "Series":
        """Reduce into the (smaller) ideal given by meet(caps, new_caps)."""
        mcaps = self.caps.meet(new_caps)
        return Series._build(self.table, mcaps, self.qfloor, dict(self.terms))

    def with_caps(self, new_caps: TruncationSpec) -> "Series":
        """Reinterpret this exact representative at different caps.

        Widening the caps is a claim of knowledge the caller must justify
        (e.g. the series is an exact polynomial).
        """
        return Series._build(self.table, new_caps, self.qfloor, dict(self.terms))

    def substitute(self, var: str, r: Scalar, m: Monomial) -> "Series":
        """Replace every occurrence of var**e by r**e * m**e, then reduce.

        The replacement monomial may carry a negative q-exponent; the
        result's floor is adjusted accordingly.
        """
        i = self.table.slot(var)
        r = _as_coeff(r)
        raw: dict = {}
        for (qr, ve), c in self.terms.items():
            e = ve[i]
            if e == 0:
                k = (qr, ve)
                nc = raw.get(k)
                raw[k] = c if nc is None else nc + c
                continue
            nc = c * r ** e
            nq = qr + e * m.qexp
            nv = list(ve)
            nv[i] = 0
            for j, me in enumerate(m.vexps):
                if me:
                    nv[j] += e * me
            k = (nq, tuple(nv))
            prev = raw.get(k)
            raw[k] = nc if prev is None else prev + nc
        # negative replacement exponents push keys below the floor
        low = min((qr for qr, _ in raw), default=0)
        if low < 0:
            raw = {(qr - low, ve): c for (qr, ve), c in raw.items()}
            return Series._build(self.table, self.caps, self.qfloor + low, raw)
        return Series._build(self.table, self.caps, self.qfloor, raw)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        """Structural equality of representatives (floor and terms)."""
        if isinstance(other, (int, Fraction)):
            other = constant(other, self.table, self.caps)
        if not isinstance(other, Series):
            return NotImplemented
        return (self.table == other.table and self.qfloor == other.qfloor
                and self.terms == other.terms)

    __hash__ = None  # mutable-ish container semantics; not hashable

    # -- rendering -----------------------------------------------------------

    def _sorted_monomials(self):
        return sorted(((qr + self.qfloor, ve, c)
                       for (qr, ve), c in self.terms.items()),
                      key=lambda t: (t[0], t[1]))

    def text(self) -> str:
        """Canonical text rendering; equal series render identically."""
        if not self.terms:
            return "0"
        names = self.table.names
        parts = []
        for qa, ve, c in self._sorted_monomials():
            factors = []
            if qa != 0:
                factors.append("q" if qa == 1 else f"q^{qa}")
            for j, e in enumerate(ve):
                if e:
                    nm = names[j + 1]
                    factors.append(nm if e == 1 else f"{nm}^{e}")
            mag = abs(c)
            coeff = str(mag.numerator) if mag.denominator == 1 \
                else f"{mag.numerator}/{mag.denominator}"
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = coeff + "*" + "*".join(factors)
            else:
                body = coeff
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json_dict(self) -> dict:
        """JSON rendering with fields {qFloor, caps, terms}."""
        names = self.table.names
        terms = []
        for qa, ve, c in self._sorted_monomials():
            mono = {"q": qa}
            for j, e in enumerate(ve):
                if e:
                    mono[names[j + 1]] = e
            terms.append({"coeff": f"{c.numerator}/{c.denominator}",
                          "mono": mono})
        return {
            "qFloor": self.qfloor,
            "caps": {"qMax": self.caps.qmax,
                     "varCaps": {names[j + 1]: c
                                 for j, c in enumerate(self.caps.vcaps)}},
            "terms": terms,
        }

    def json_text(self) -> str:
        return json.dumps(self.to_json_dict())

    def __repr__(self):
        return f"Series({self.text()})"


# -- free constructors --------------------------------------------------------


def make_series(entries: Iterable[tuple[Scalar, Monomial]],
                caps_: TruncationSpec,
                table: VarTable = DEFAULT_TABLE) -> Series:
    """Build a Series from (coefficient, monomial) pairs.

    Monomials carry absolute (possibly negative) q-exponents; duplicates are
    summed and terms outside the caps are dropped.
    """
    floor = 0
    entries = [(_as_coeff(c), m) for c, m in entries]
    for c, m in entries:
        if c and m.qexp < floor:
            floor = m.qexp
    raw: dict = {}
    for c, m in entries:
        if len(m.vexps) != table.nvars:
            raise VarTableMismatch("monomial width does not match table")
        k = (m.qexp - floor, m.vexps)
        prev = raw.get(k)
        raw[k] = c if prev is None else prev + c
    return Series._build(table, caps_, floor, raw)


def zero(table: VarTable = DEFAULT_TABLE,
         caps_: TruncationSpec = None) -> Series:
    caps_ = caps_ if caps_ is not None else caps(25, table)
    return Series(table, 0, {}, caps_, True)


def one(table: VarTable = DEFAULT_TABLE,
        caps_: TruncationSpec = None) -> Series:
    return constant(1, table, caps_)


def constant(c: Scalar, table: VarTable = DEFAULT_TABLE,
             caps_: TruncationSpec = None) -> Series:
    caps_ = caps_ if caps_ is not None else caps(25, table)
    c = _as_coeff(c)
    if not c:
        return zero(table, caps_)
    return Series(table, 0, {(0, table.zero_vexps): c}, caps_, True)


def variable(name: str, table: VarTable = DEFAULT_TABLE,
             caps_: TruncationSpec = None) -> Series:
    caps_ = caps_ if caps_ is not None else caps(25, table)
    return monomial_series(1, 0, {name: 1}, table, caps_)


def q_power(e: int, table: VarTable = DEFAULT_TABLE,
            caps_: TruncationSpec = None) -> Series:
    """The monomial q**e (e may be negative)."""
    caps_ = caps_ if caps_ is not None else caps(25, table)
    return monomial_series(1, e, {}, table, caps_)


def monomial_series(c: Scalar, qexp: int, vexps: dict,
                    table: VarTable = DEFAULT_TABLE,
                    caps_: TruncationSpec = None) -> Series:
    """Single-term series c * q**qexp * prod(v**e)."""
    caps_ = caps_ if caps_ is not None else caps(25, table)
    ve = [0] * table.nvars
    for name, e in vexps.items():
        if e < 0:
            raise ValueError("non-q variables cannot carry negative exponents")
        ve[table.slot(name)] = e
    return make_series([(c, Monomial(qexp, tuple(ve)))], caps_, table)


def mono(qexp: int = 0, vexps: dict = None,
         table: VarTable = DEFAULT_TABLE) -> Monomial:
    """Monomial helper: mono(3, {'x': 2}) is q^3*x^2."""
    ve = [0] * table.nvars
    for name, e in (vexps or {}).items():
        ve[table.slot(name)] = e
    return Monomial(qexp, tuple(ve))


# -- equality mod caps ---------------------------------------------------------


def equals_mod_caps(f: Series, g: Series):
    """Compare f and g on the meet of their claimed windows.

    Returns (True, None) on agreement, else (False, (monomial, f_coeff,
    g_coeff)) with the least discrepant monomial in (q-exponent, then lex
    variable exponents) order.
    """
    f._same_table(g)
    mcaps = f.caps.meet(g.caps)
    q_upper = min(f.qfloor + f.caps.qmax, g.qfloor + g.caps.qmax)
    vcaps = mcaps.vcaps
    seen = set()
    for s in (f, g):
        for (qr, ve), _ in s.terms.items():
            qa = qr + s.qfloor
            if qa <= q_upper and all(e <= c for e, c in zip(ve, vcaps)):
                seen.add((qa, ve))
    bad = []
    for qa, ve in seen:
        m = Monomial(qa, ve)
        cf, cg = f.coeff(m), g.coeff(m)
        if cf != cg:
            bad.append((qa, ve, cf, cg))
    if not bad:
        return True, None
    qa, ve, cf, cg = min(bad, key=lambda t: (t[0], t[1]))
    return False, (Monomial(qa, ve), cf, cg)
