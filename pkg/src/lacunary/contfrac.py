"""Continued fractions of formal Laurent series over exact rationals.

The expansion runs the polynomial Euclidean algorithm on the pair
(window polynomial, X^N) rather than repeatedly inverting series tails:
the two are equivalent, and Euclid keeps every coefficient exact.  A
partial quotient A_i is *certified* once 2*deg(Q_i) + 1 <= N, where Q_i
is the convergent denominator; the rule is conservative and is itself
exercised by the prefix-stability tests.  Quotients past the certified
prefix are still reported, flagged uncertified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bits import EpsilonSpec, LambdaRangeError, LambdaSpec
from .rings import (
    NEG_INF,
    RING_Q,
    LaurentSeries,
    SeriesPrecisionError,
    SparsePoly,
    ZeroSeriesError,
    _norm_q,
)


def build_F(lam: LambdaSpec, eps: EpsilonSpec, precision: int) -> LaurentSeries:
    """The lacunary series sum of (-1)^eps_n X^(-lambda_n), materialized for
    exponents down to -precision, with an extender for deeper windows.

    An explicit lambda list must reach far enough that no unknown exponent
    could land inside the window: exhausting the list is fine only once the
    growth rule guarantees every later exponent lies below it."""
    lam0 = lam.value(0)
    if precision < lam0:
        raise SeriesPrecisionError(f"precision: window {precision} ends above first exponent {lam0}")
    coeffs = {}
    q = 0
    last = 0
    while True:
        try:
            v = lam.value(q)
        except LambdaRangeError:
            if 2 * last >= precision:
                break
            raise
        if v > precision:
            break
        coeffs[-v] = eps.sign(q)
        last = v
        q += 1
    return LaurentSeries(
        coeffs,
        top=-lam0,
        cutoff=precision,
        extender=lambda depth: build_F(lam, eps, depth),
        expect_integral_cf=True,
    )


@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients A_0, A_1, ... with a certified prefix length.

    certified counts quotients from A_0 on; precision is the source window
    (None when the input was exact, in which case everything is certified);
    terminated means the remainder vanished exactly, so the expansion is the
    complete one of a rational function.
    """

    quotients: tuple
    certified: int
    precision: object
    terminated: bool

    def __len__(self):
        return len(self.quotients)

    def degrees(self):
        return tuple(0 if a.degree is NEG_INF else a.degree for a in self.quotients)


@dataclass(frozen=True)
class Convergents:
    """P_n, Q_n from the three-term recurrence; index n matches quotient A_n."""

    p: tuple
    q: tuple
    certified: int


def _dense_divmod(num, den):
    """Quotient and remainder of dense coefficient lists (index = exponent).
    den must be nonempty with nonzero last entry; [] is the zero polynomial.
    Integer coefficients stay integers whenever the divisor leads with +-1."""
    dn = len(den) - 1
    if len(num) <= dn:
        return [], list(num)
    lead = den[-1]
    r = list(num)
    quot = [0] * (len(r) - dn)
    for i in range(len(r) - 1, dn - 1, -1):
        c = r[i]
        if c:
            if lead == 1:
                f = c
            elif lead == -1:
                f = -c
            else:
                f = _norm_q(Fraction(c) / lead)
            quot[i - dn] = f
            base = i - dn
            for j in range(dn):
                d = den[j]
                if d:
                    r[base + j] -= f * d
        r[i] = 0
    while r and not r[-1]:
        r.pop()
    return quot, r


def _dense_to_poly(coeff_list) -> SparsePoly:
    return SparsePoly.build(RING_Q, list(enumerate(coeff_list)))


def _series_as_fraction(f: LaurentSeries):
    """f as (numerator list, denominator degree, certifiable window or None)."""
    if f.exact:
        exps = sorted(f.coeffs)
        if not exps:
            raise ZeroSeriesError("zero series")
        shift = max(0, -exps[0])
        num = [0] * (f.top + shift + 1)
        for e, c in f.coeffs.items():
            num[e + shift] = c
        return num, shift, None
    n = f.cutoff
    top = f.top
    if top is NEG_INF or all(not c for c in f.coeffs.values()):
        raise SeriesPrecisionError("precision: no nonzero coefficient in window")
    num = [0] * (top + n + 1)
    for e, c in f.coeffs.items():
        if e >= -n:
            num[e + n] = c
    return num, n, n


def cf_expand(f: LaurentSeries, max_quotients: int | None = None) -> ContinuedFraction:
    """Expand f as [A_0; A_1, A_2, ...].

    max_quotients bounds the number of quotients after A_0; None means run
    until the certified window is exhausted (one trailing uncertified
    quotient is kept so the flag is visible) or the remainder vanishes.
    Certified quotients of a series built with expect_integral_cf must come
    out with integer coefficients; a rational coefficient there means the
    window certified something false and is reported as an error.
    """
    num, shift, window = _series_as_fraction(f)
    den = [0] * shift + [1]
    q0, rem = _dense_divmod(num, den)
    quotients = [_dense_to_poly(q0)]
    a, b = den, rem
    deg_q = 0
    certified = 1
    prefix_ok = True
    i = 0
    while b and (max_quotients is None or i < max_quotients):
        i += 1
        qd, rem = _dense_divmod(a, b)
        poly = _dense_to_poly(qd)
        quotients.append(poly)
        deg_q += poly.degree
        ok = window is None or 2 * deg_q + 1 <= window
        if ok and prefix_ok:
            certified += 1
        else:
            if i == 1:
                raise SeriesPrecisionError(
                    f"precision: window {window} cannot certify the first partial quotient"
                    f" (degree {len(qd) - 1})"
                )
            prefix_ok = False
            if max_quotients is None:
                a, b = b, rem
                break
        a, b = b, rem
    if f.expect_integral_cf:
        for poly in quotients[:certified]:
            for _, c in poly.terms:
                if not isinstance(c, int):
                    raise ArithmeticError(
                        f"certified partial quotient has non-integral coefficient {c}"
                    )
    return ContinuedFraction(
        quotients=tuple(quotients),
        certified=certified,
        precision=window,
        terminated=not b,
    )


def convergents(cf: ContinuedFraction) -> Convergents:
    """P_0 = A_0, Q_0 = 1, then P_n = A_n P_{n-1} + P_{n-2} and likewise
    for Q; satisfies P_{n+1} Q_n - P_n Q_{n+1} = (-1)^n on the certified
    prefix."""
    one = SparsePoly.one(RING_Q)
    zero = SparsePoly.zero(RING_Q)
    p_prev, q_prev = one, zero              # index -1
    p_cur, q_cur = cf.quotients[0], one     # index 0
    ps, qs = [p_cur], [q_cur]
    for a in cf.quotients[1:]:
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        ps.append(p_cur)
        qs.append(q_cur)
    return Convergents(p=tuple(ps), q=tuple(qs), certified=cf.certified)


def cf_fold(cf: ContinuedFraction, upto: int | None = None):
    """(P_m, Q_m) for the convergent of the quotient prefix of length upto
    (certified prefix by default)."""
    if upto is None:
        upto = cf.certified
    if upto < 1 or upto > len(cf.quotients):
        raise ValueError("fold length out of range")
    conv = convergents(
        ContinuedFraction(cf.quotients[:upto], upto, cf.precision, cf.terminated)
    )
    return conv.p[-1], conv.q[-1]


def phi_oracle(n: int) -> Convergents:
    """Convergents of the series with all partial quotients X: denominators
    satisfy k_n = X k_{n-1} + k_{n-2}, and numerators are the denominators
    shifted by one index."""
    if n < 1:
        raise ValueError("need at least one quotient")
    x = SparsePoly.x_power(RING_Q, 1)
    cf = ContinuedFraction(
        quotients=(SparsePoly.zero(RING_Q),) + (x,) * n,
        certified=n + 1,
        precision=None,
        terminated=False,
    )
    return convergents(cf)
