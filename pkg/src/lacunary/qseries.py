"""Closed-form polynomials Q_n(X) and their 2-adic interpolation Q_w(X).

The coefficient of X^mu(k) is sign(k, eps) * C((w+k)/2, k) mod 2, the
half-sum binomial evaluated through its division-free equivalent.  Integer
w cuts the sum off (at w for w >= 0, at -w-2 for w <= -2, both because the
finite upper argument stops dominating); every other w yields a genuine
power series and callers must bound the window themselves.

Comparison families (scaled Chebyshev, Fibonacci, Morgan-Voyce) are built
by their own recurrences/sums so the mod-2 coincidences are cross-checks,
not restatements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .bits import EpsilonSpec, LambdaSpec, term_exponent, term_sign
from .dyadic import Dyadic, halfsum_binom, kernel_range, kernel_value
from .rings import NEG_INF, RING_GF2, RING_Q, SparsePoly, gf2_mul

__all__ = [
    "QSeriesHandle",
    "q_poly",
    "q_omega_window",
    "q_support_flags",
    "kernel_value",
    "kernel_range",
    "is_polynomial",
    "pell_check_mod2",
    "chebyshev_u_scaled",
    "chebyshev_u_scaled_range",
    "chebyshev_mask_range",
    "fibonacci_poly",
    "morgan_voyce",
    "ANumber",
    "a_number",
]


@dataclass(frozen=True)
class QSeriesHandle:
    """Q_w(X) for a 2-adic w: lazy access to the signed coefficient stream
    k -> (exponent mu(k), sign * halfsum)."""

    omega: Dyadic
    lam: LambdaSpec
    eps: EpsilonSpec
    convention: str = "digit"

    def term(self, k: int):
        coeff = term_sign(k, self.eps, self.convention) * halfsum_binom(self.omega, k)
        return (term_exponent(k, self.lam), coeff)

    def support_bound(self):
        """Largest k that can contribute, or None when w is not an integer."""
        if self.omega.kind != "finite":
            return None
        n = self.omega.value
        return n if n >= 0 else -n - 2


def q_poly(n: int, lam: LambdaSpec, eps: EpsilonSpec, convention: str = "digit") -> SparsePoly:
    """Q_n(X) for integer n, any sign, as an exact integer polynomial.

    One code path: the digits of n (two's complement for n < 0) feed the
    half-sum binomial.  The cutoff -n-2 for negative n is forced by the
    binomial itself: for k >= -n-1 the upper argument n+k+1 is a nonnegative
    integer smaller than 2k+1."""
    bound = n if n >= 0 else -n - 2
    w = Dyadic.from_int(n)
    terms = []
    for k in range(0, bound + 1):
        c = halfsum_binom(w, k)
        if c:
            terms.append((term_exponent(k, lam), term_sign(k, eps, convention)))
    return SparsePoly.build(RING_Q, terms)


def q_omega_window(handle: QSeriesHandle, k_max: int):
    """Nonzero terms (exponent, coefficient) for k <= k_max, ascending.

    Exponents ascend with k because each lambda gap exceeds the sum of all
    earlier ones; extending k_max never changes earlier entries."""
    flags = kernel_range(handle.omega, k_max, "f")
    out = []
    for k in range(k_max + 1):
        if flags[k]:
            out.append((term_exponent(k, handle.lam), term_sign(k, handle.eps, handle.convention)))
    return out


def q_support_flags(w: Dyadic, k_max: int) -> list:
    """0/1 flags: does k contribute a monomial to Q_w.  Signs never vanish,
    so this is exactly the half-sum kernel."""
    return kernel_range(w, k_max, "f")


def q_term_count_range(n_max: int) -> np.ndarray:
    """Number of nonzero monomials of Q_n for n = 0..n_max-1, vectorized.
    Counts k <= n with 2k+1 digitwise below n+k+1; all values stay well
    inside int64 for any practical n_max."""
    out = np.zeros(n_max, dtype=np.int64)
    ns = np.arange(n_max, dtype=np.int64)
    for k in range(n_max):
        live = ns[k:]
        hits = ((2 * k + 1) & ~(live + k + 1)) == 0
        out[k:] += hits
    return out


def is_polynomial(handle: QSeriesHandle, scan_bound: int | None = None):
    """("yes", degree) | ("no", None) | ("unknown", largest nonzero k below
    scan_bound, if any scan was requested).

    Integer w always keeps its top term (k = w resp. k = -w-2 survives), so
    the degree is mu of the cutoff; rational non-integer w never terminates;
    opaque streams are undecidable and only scanned empirically."""
    kind = handle.omega.classify()
    if kind == "integer":
        bound = handle.support_bound()
        if bound < 0:
            return ("yes", NEG_INF)
        return ("yes", term_exponent(bound, handle.lam))
    if kind == "rational-non-integer":
        return ("no", None)
    if scan_bound is None:
        return ("unknown", None)
    flags = q_support_flags(handle.omega, scan_bound)
    last = max((k for k, v in enumerate(flags) if v), default=None)
    return ("unknown", last)


def _q_mask(w: Dyadic, k_max: int) -> int:
    """GF2 mask of Q_w mod 2 through X^k_max, Mersenne exponents mu(k) = k."""
    flags = kernel_range(w, k_max, "f")
    mask = 0
    for k, v in enumerate(flags):
        if v:
            mask |= 1 << k
    return mask


def pell_check_mod2(w: Dyadic, trunc: int) -> bool:
    """Q_w^2 - Q_{w+1} Q_{w-1} = 1 mod 2, checked through X^trunc with
    Mersenne exponents.  Signs are invisible mod 2, so only the kernel
    masks enter."""
    m0 = _q_mask(w, trunc)
    mp = _q_mask(w.add_int(1), trunc)
    mm = _q_mask(w.add_int(-1), trunc)
    lhs = gf2_mul(m0, m0) ^ gf2_mul(mp, mm)
    return lhs & ((1 << (trunc + 1)) - 1) == 1


def chebyshev_u_scaled(n: int) -> SparsePoly:
    """U_n at half argument, over the integers, by the three-term recurrence
    s_{m+1} = X s_m - s_{m-1} with s_0 = 1, s_1 = X."""
    if n < 0:
        raise ValueError("negative index")
    return chebyshev_u_scaled_range(n)[-1]


def chebyshev_u_scaled_range(n_max: int) -> list:
    """[s_0, ..., s_{n_max}] over the integers."""
    prev = {0: 1}
    if n_max == 0:
        return [SparsePoly.build(RING_Q, prev.items())]
    cur = {1: 1}
    out = [SparsePoly.build(RING_Q, prev.items()), SparsePoly.build(RING_Q, cur.items())]
    for _ in range(2, n_max + 1):
        nxt = {e + 1: c for e, c in cur.items()}
        for e, c in prev.items():
            nxt[e] = nxt.get(e, 0) - c
        prev, cur = cur, nxt
        out.append(SparsePoly.build(RING_Q, cur.items()))
    return out


def chebyshev_mask_range(n_max: int) -> list:
    """The same recurrence over GF2, as bit masks: s_{m+1} = (s_m << 1) ^ s_{m-1}."""
    masks = [1]
    if n_max >= 1:
        masks.append(2)
    for _ in range(2, n_max + 1):
        masks.append((masks[-1] << 1) ^ masks[-2])
    return masks[: n_max + 1]


def fibonacci_poly(m: int) -> SparsePoly:
    """F_1 = 1, F_2 = X, F_{m+1} = X F_m + F_{m-1}; equivalently
    F_{m+1}(X) = sum over 2j <= m of C(m-j, j) X^(m-2j)."""
    if m < 1:
        raise ValueError("index starts at 1")
    n = m - 1
    return SparsePoly.build(RING_Q, [(n - 2 * j, comb(n - j, j)) for j in range(n // 2 + 1)])


def morgan_voyce(n: int, kind: str = "b") -> SparsePoly:
    """kind 'b': sum of C(n+k, 2k) X^k; kind 'B': sum of C(n+k+1, 2k+1) X^k."""
    if n < 0:
        raise ValueError("negative index")
    if kind == "b":
        terms = [(k, comb(n + k, 2 * k)) for k in range(n + 1)]
    elif kind == "B":
        terms = [(k, comb(n + k + 1, 2 * k + 1)) for k in range(n + 1)]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return SparsePoly.build(RING_Q, terms)


@dataclass(frozen=True)
class ANumber:
    """Partial sum of sign(k) * halfsum(w, k) * g^-k over k <= terms, with
    the geometric tail bound."""

    value: Fraction
    tail_bound: Fraction
    base: int
    terms: int

    def decimal(self, digits: int = 40) -> str:
        v = self.value
        sign = "-" if v < 0 else ""
        v = abs(v)
        ip = v.numerator // v.denominator
        frac = v - ip
        scaled = (frac.numerator * 10**digits) // frac.denominator
        return f"{sign}{ip}.{scaled:0{digits}d}"


def a_number(eps: EpsilonSpec, w: Dyadic, g: int, terms: int, convention: str = "digit") -> ANumber:
    """The real number with digits driven by the Q_w coefficient stream in
    base g, summed exactly to the given number of terms."""
    if g < 2:
        raise ValueError("base must be at least 2")
    if terms < 0:
        raise ValueError("negative term count")
    flags = kernel_range(w, terms, "f")
    total = Fraction(0)
    for k in range(terms + 1):
        if flags[k]:
            total += Fraction(term_sign(k, eps, convention), g**k)
    return ANumber(value=total, tail_bound=Fraction(2, g**terms), base=g, terms=terms)
