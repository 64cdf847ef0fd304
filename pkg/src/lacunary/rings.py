"""Exact coefficient rings, sparse polynomials and truncated Laurent series.

Two coefficient rings are supported: exact rationals (Python int / Fraction,
integer-valued coefficients stored as plain int) and GF(2) (ints 0/1, addition
is xor).  Polynomials are sparse term lists with strictly increasing exponents
and no zero coefficients.  Laurent series in descending powers of X are
truncated windows with explicit precision bookkeeping: a series knows its top
exponent, the cutoff below which nothing is known, and optionally an extender
callback that rebuilds the same series with a deeper window.  All arithmetic
is exact; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

#: Degree of the zero polynomial.  A dedicated sentinel (never -1, which is a
#: legitimate Laurent exponent); compares below every integer.
NEG_INF = float("-inf")


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class NotReducibleError(ArithmeticError):
    """Mod-2 reduction hit a coefficient that is not an integer."""


class ZeroSeriesError(ZeroDivisionError):
    """Inversion of the zero series."""


class SeriesPrecisionError(ArithmeticError):
    """A truncated series window is too shallow for the request."""


def _norm_q(c):
    """Collapse integer-valued Fractions to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _coerce_q(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm_q(c)
    raise TypeError(f"rational coefficient expected, got {type(c).__name__}")


def _coerce_gf2(c):
    if isinstance(c, int):
        return c & 1
    raise TypeError(f"GF(2) coefficient expected, got {type(c).__name__}")


class _RationalRing:
    name = "Q"
    zero = 0
    one = 1
    coerce = staticmethod(_coerce_q)

    @staticmethod
    def add(a, b):
        return _norm_q(a + b)

    @staticmethod
    def mul(a, b):
        return _norm_q(a * b)

    @staticmethod
    def neg(a):
        return -a

    def __repr__(self):
        return "RING_Q"


class _GF2Ring:
    name = "GF2"
    zero = 0
    one = 1
    coerce = staticmethod(_coerce_gf2)

    @staticmethod
    def add(a, b):
        return a ^ b

    @staticmethod
    def mul(a, b):
        return a & b

    @staticmethod
    def neg(a):
        return a

    def __repr__(self):
        return "RING_GF2"


RING_Q = _RationalRing()
RING_GF2 = _GF2Ring()

_RINGS = {"Q": RING_Q, "GF2": RING_GF2}


@dataclass(frozen=True)
class SparsePoly:
    """Polynomial as a sorted tuple of (exponent, coefficient), no zeros stored."""

    ring: object
    terms: tuple

    @classmethod
    def build(cls, ring, items):
        """Canonicalize an iterable of (exp, coeff): merge, drop zeros, sort."""
        acc = {}
        for e, c in items:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"polynomial exponent must be a nonnegative int, got {e!r}")
            c = ring.coerce(c)
            s = ring.add(acc.get(e, ring.zero), c)
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return cls(ring, tuple(sorted(acc.items())))

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def one(cls, ring):
        return cls(ring, ((0, ring.one),))

    @classmethod
    def x_power(cls, ring, e, c=1):
        return cls.build(ring, [(e, c)])

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else NEG_INF

    @property
    def is_zero(self):
        return not self.terms

    def coeff(self, e):
        for ee, cc in self.terms:
            if ee == e:
                return cc
        return self.ring.zero

    def lead(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[-1][1]

    def _check(self, other):
        if self.ring is not other.ring:
            raise RingMismatchError("ring mismatch")

    def __add__(self, other):
        self._check(other)
        return SparsePoly.build(self.ring, list(self.terms) + list(other.terms))

    def __neg__(self):
        neg = self.ring.neg
        return SparsePoly(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ring = self.ring
        if ring is RING_GF2:
            return gf2_mask_to_poly(gf2_mul(gf2_poly_to_mask(self), gf2_poly_to_mask(other)))
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                s = _norm_q(acc.get(e, 0) + c1 * c2)
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return SparsePoly(ring, tuple(sorted(acc.items())))

    def scale(self, c):
        c = self.ring.coerce(c)
        if not c:
            return SparsePoly.zero(self.ring)
        mul = self.ring.mul
        return SparsePoly(self.ring, tuple((e, mul(cc, c)) for e, cc in self.terms))

    def shift(self, k):
        """Multiply by X^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        return SparsePoly(self.ring, tuple((e + k, c) for e, c in self.terms))

    def term_count(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                parts.append(str(c))
            else:
                x = "X" if e == 1 else f"X^{e}"
                if c == 1:
                    parts.append(x)
                elif c == -1:
                    parts.append(f"-{x}")
                else:
                    parts.append(f"{c}*{x}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def poly_arith(a: SparsePoly, b: SparsePoly, op: str) -> SparsePoly:
    """Dispatch add/sub/mul on same-ring polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# GF(2) polynomials double as Python ints (bit i = coefficient of X^i).

def gf2_poly_to_mask(p: SparsePoly) -> int:
    m = 0
    for e, c in p.terms:
        if c & 1:
            m |= 1 << e
    return m


def gf2_mask_to_poly(m: int) -> SparsePoly:
    if m < 0:
        raise ValueError("negative GF(2) mask")
    terms = []
    e = 0
    while m:
        if m & 1:
            terms.append((e, 1))
        m >>= 1
        e += 1
    return SparsePoly(RING_GF2, tuple(terms))


def gf2_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials packed in ints."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    e = 0
    while a:
        if a & 1:
            acc ^= b << e
        a >>= 1
        e += 1
    return acc


def reduce_mod2(p: SparsePoly) -> SparsePoly:
    """Ring map Z[X] -> GF(2)[X]; error if any coefficient is non-integral."""
    if p.ring is RING_GF2:
        return p
    terms = []
    for e, c in p.terms:
        if isinstance(c, Fraction):
            raise NotReducibleError(f"not reducible: coefficient {c} at X^{e}")
        if c & 1:
            terms.append((e, 1))
    return SparsePoly(RING_GF2, tuple(terms))


def poly_to_json(p: SparsePoly) -> dict:
    return {"ring": p.ring.name, "terms": [[e, str(c)] for e, c in p.terms]}


def poly_from_json(obj: dict) -> SparsePoly:
    ring = _RINGS.get(obj.get("ring"))
    if ring is None:
        raise ValueError(f"unknown ring {obj.get('ring')!r}")
    items = []
    for e, c in obj["terms"]:
        items.append((int(e), Fraction(c) if ring is RING_Q else int(c)))
    return SparsePoly.build(ring, items)


@dataclass(eq=False)
class LaurentSeries:
    """Truncated Laurent series in descending powers of X, rational coefficients.

    Coefficients are defined for every exponent in [-cutoff, top]; exponents
    above `top` are identically zero.  `cutoff is None` marks an exact series
    (a Laurent polynomial: nothing exists below the stored window either).
    `extender(depth)` rebuilds the same series with cutoff >= depth; extending
    never changes previously reported coefficients.  Treated as immutable
    after construction.
    """

    coeffs: dict
    top: object          # int, or NEG_INF for the zero series
    cutoff: object       # int, or None when exact
    extender: object = None
    expect_integral_cf: bool = False   # set by the lacunary builder; see contfrac

    def __post_init__(self):
        self.coeffs = {e: _coerce_q(c) for e, c in self.coeffs.items() if c}
        if self.coeffs:
            hi = max(self.coeffs)
            if self.top is NEG_INF or hi > self.top:
                self.top = hi

    @property
    def exact(self):
        return self.cutoff is None

    def coeff(self, e):
        if self.top is not NEG_INF and e > self.top:
            return 0
        if self.exact or e >= -self.cutoff:
            return self.coeffs.get(e, 0)
        raise SeriesPrecisionError(f"precision: coefficient at X^{e} below cutoff {-self.cutoff}")

    def lead_exponent(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def window_terms(self):
        """Known nonzero terms, ascending exponent."""
        return sorted(self.coeffs.items())

    def extend(self, depth: int) -> "LaurentSeries":
        """Same series, window deepened to at least `depth`."""
        if self.exact or self.cutoff >= depth:
            return self
        if self.extender is None:
            raise SeriesPrecisionError("precision: series has no extender")
        out = self.extender(depth)
        if not out.exact and out.cutoff < depth:
            raise SeriesPrecisionError("precision: extender fell short")
        return out

    def poly_part(self) -> SparsePoly:
        return SparsePoly.build(RING_Q, [(e, c) for e, c in self.coeffs.items() if e >= 0])

    def __str__(self):
        terms = sorted(self.coeffs.items(), reverse=True)
        shown = [f"{c}*X^{e}" for e, c in terms[:8]]
        tail = " + ..." if len(terms) > 8 else ""
        lo = "exact" if self.exact else f"O(X^{-self.cutoff - 1})"
        return (" + ".join(shown) or "0") + tail + f"  [{lo}]"


def series_from_poly(p: SparsePoly, denom_power: int = 0) -> LaurentSeries:
    """Exact series P(X)/X^d."""
    coeffs = {e - denom_power: c for e, c in p.terms}
    top = max(coeffs) if coeffs else NEG_INF
    return LaurentSeries(coeffs, top, None)


def _both_extendable(a: LaurentSeries, b: LaurentSeries):
    return (a.exact or a.extender is not None) and (b.exact or b.extender is not None)


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if a.exact and b.exact:
        cutoff = None
    else:
        cutoff = min(x.cutoff for x in (a, b) if not x.exact)
    coeffs = dict(a.coeffs)
    for e, c in b.coeffs.items():
        s = _norm_q(coeffs.get(e, 0) + c)
        if s:
            coeffs[e] = s
        else:
            coeffs.pop(e, None)
    if cutoff is not None:
        coeffs = {e: c for e, c in coeffs.items() if e >= -cutoff}
    tops = [x.top for x in (a, b) if x.top is not NEG_INF]
    top = max(tops) if tops else NEG_INF
    ext = (lambda d: series_add(a.extend(d), b.extend(d))) if _both_extendable(a, b) else None
    return LaurentSeries(coeffs, top, cutoff, ext)


def series_neg(a: LaurentSeries) -> LaurentSeries:
    ext = (lambda d: series_neg(a.extend(d))) if (a.exact or a.extender) else None
    return LaurentSeries({e: -c for e, c in a.coeffs.items()}, a.top, a.cutoff, ext)


def series_sub(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return series_add(a, series_neg(b))


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    a_top = a.top if a.top is not NEG_INF else 0
    b_top = b.top if b.top is not NEG_INF else 0
    if a.exact and b.exact:
        cutoff = None
    else:
        parts = []
        if not a.exact:
            parts.append(a.cutoff - b_top)
        if not b.exact:
            parts.append(b.cutoff - a_top)
        cutoff = min(parts)
    acc = {}
    for e1, c1 in a.coeffs.items():
        for e2, c2 in b.coeffs.items():
            e = e1 + e2
            if cutoff is not None and e < -cutoff:
                continue
            s = _norm_q(acc.get(e, 0) + c1 * c2)
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
    top = (a.top + b.top) if (a.top is not NEG_INF and b.top is not NEG_INF) else NEG_INF
    ext = (lambda d: series_mul(a.extend(d + max(0, b_top)), b.extend(d + max(0, a_top)))) \
        if _both_extendable(a, b) else None
    return LaurentSeries(acc, top, cutoff, ext)


def series_invert(a: LaurentSeries, depth: int | None = None) -> LaurentSeries:
    """Multiplicative inverse.

    For a truncated input with lead exponent d and cutoff N the result is
    certified down to exponent -(N + 2d); a * invert(a) equals 1 up to terms
    below that window.  For an exact non-monomial input, `depth` asks for the
    result window (default 32) and the result carries an extender.
    """
    if not a.coeffs:
        if a.exact:
            raise ZeroSeriesError("zero series")
        raise SeriesPrecisionError("precision: window shows no nonzero term to invert")
    d = a.lead_exponent()
    lead = a.coeffs[d]
    if a.exact and len(a.coeffs) == 1:
        return LaurentSeries({-d: _norm_q(Fraction(1, 1) / lead)}, -d, None)
    if a.exact:
        want = depth if depth is not None else 32
        m = max(want - d, 8)
        cut = d + m
    else:
        m = a.cutoff + d      # unit-series terms known beyond the lead
        cut = a.cutoff + 2 * d
    # unit u(t) = a * t^? read in t = 1/X; u[j] = coeff of X^(d - j)
    u = [a.coeffs.get(d - j, 0) for j in range(m + 1)]
    v = [_norm_q(Fraction(1, 1) / lead)]
    for j in range(1, m + 1):
        s = 0
        for i in range(1, j + 1):
            if u[i]:
                s += u[i] * v[j - i]
        v.append(_norm_q(Fraction(-s, 1) / lead))
    coeffs = {-d - j: c for j, c in enumerate(v) if c}
    if a.exact:
        ext = lambda dd: series_invert(a, depth=dd)
    elif a.extender is not None:
        ext = lambda dd: series_invert(a.extend(dd - 2 * d))
    else:
        ext = None
    return LaurentSeries(coeffs, -d, cut, ext)


def series_arith(a: LaurentSeries, b: LaurentSeries, op: str) -> LaurentSeries:
    if op == "add":
        return series_add(a, b)
    if op == "sub":
        return series_sub(a, b)
    if op == "mul":
        return series_mul(a, b)
    raise ValueError(f"unknown op {op!r}")


def series_to_json(s: LaurentSeries) -> dict:
    return {
        "ring": "Q",
        "terms": [[e, str(c)] for e, c in s.window_terms()],
        "top": None if s.top is NEG_INF else s.top,
        "cutoff": s.cutoff,
    }
