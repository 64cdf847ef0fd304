"""Binary-digit combinatorics: digit extraction, block counts, binomial
parity, gap sequences and the sign data attached to exponent sequences.

Conventions used throughout the package:

* digits are indexed from the least significant bit, e(k, 0) is the parity;
* ``count_10_blocks(k)`` counts occurrences of the block "10" when the binary
  expansion of k is read from the most significant digit down (so 12 = 1100
  contains exactly one such block);
* ``binom_parity(m, k)`` is C(m, k) mod 2 via the digitwise rule: 1 iff every
  binary digit of k is dominated by the corresponding digit of m.

An exponent sequence ("lambda spec") is a strictly increasing sequence of
positive integers whose growth is 2-lacunary: lambda(q+1) > 2 * lambda(q),
with lambda(-1) = 0 by convention.  A sign sequence ("epsilon spec") is an
ultimately periodic 0/1 sequence, zero for negative indices.
"""

from __future__ import annotations

from dataclasses import dataclass


class LambdaRangeError(IndexError):
    """Explicit exponent list exhausted before the requested index."""


def bit(k: int, q: int) -> int:
    """Binary digit e_q(k) of a nonnegative integer, LSB first."""
    if k < 0:
        raise ValueError("negative argument; use the dyadic module for those")
    return (k >> q) & 1


def bits_of(k: int):
    """Digits of k, LSB first, as a list (empty for 0)."""
    out = []
    while k:
        out.append(k & 1)
        k >>= 1
    return out


def count_10_blocks(k: int) -> int:
    """Number of "10" blocks in the MSB-first binary reading of k."""
    if k < 0:
        raise ValueError("negative argument")
    return ((k >> 1) & ~k).bit_count()


def count_10_blocks_scan(k: int) -> int:
    """Same count by walking the binary string; independent of the bit trick."""
    s = bin(k)[2:] if k else "0"
    return sum(1 for i in range(len(s) - 1) if s[i] == "1" and s[i + 1] == "0")


def count_10_blocks_rec(k: int) -> int:
    """Same count by recursion: c(0)=0, c(2n+1)=c(n), c(2n)=c(n)+(n mod 2)."""
    c = 0
    while k:
        if k & 1:
            k >>= 1
        else:
            k >>= 1
            c += k & 1
    return c


def binom_parity(m: int, k: int) -> int:
    """C(m, k) mod 2 for nonnegative integers, by digit domination."""
    if m < 0 or k < 0:
        raise ValueError("negative argument; use the dyadic module for those")
    return 1 if (k & ~m) == 0 else 0


def dominates(k: int, m: int) -> bool:
    """True iff every binary digit of k is <= the matching digit of m,
    equivalently binom_parity(m, k) == 1."""
    return (k & ~m) == 0


class LambdaSpec:
    """Strictly 2-lacunary exponent sequence 0 < l_0 < l_1 < ..., l_{q+1} > 2 l_q.

    Three variants: the Mersenne sequence l_q = 2^(q+1) - 1, a finite explicit
    list (requests past the end raise LambdaRangeError), and a closed-form
    rule.  Growth is validated lazily as indices are touched.
    """

    def __init__(self, kind: str, values=None, rule=None, name: str = ""):
        self.kind = kind
        self._values = list(values) if values is not None else None
        self._rule = rule
        self.name = name or kind
        self._cache = {}
        self._checked_upto = -1

    @classmethod
    def mersenne(cls):
        return cls("mersenne", name="mersenne")

    @classmethod
    def from_list(cls, values):
        if not values:
            raise ValueError("empty exponent list")
        return cls("list", values=values, name="list:" + ",".join(str(v) for v in values))

    @classmethod
    def from_rule(cls, rule, name="rule"):
        return cls("rule", rule=rule, name=name)

    @property
    def is_mersenne(self):
        return self.kind == "mersenne"

    def known_length(self):
        """Number of available indices, or None when unbounded."""
        return len(self._values) if self.kind == "list" else None

    def _raw(self, q: int) -> int:
        if self.kind == "mersenne":
            return (1 << (q + 1)) - 1
        if self.kind == "list":
            if q >= len(self._values):
                raise LambdaRangeError(f"lambda range: index {q} beyond explicit list of length {len(self._values)}")
            return self._values[q]
        if q in self._cache:
            return self._cache[q]
        v = self._rule(q)
        if not isinstance(v, int):
            raise ValueError("exponent rule must return ints")
        self._cache[q] = v
        return v

    def value(self, q: int) -> int:
        """lambda_q, with lambda_{-1} = 0.  Validates growth up to q."""
        if q < -1:
            raise ValueError("exponent index below -1")
        if q == -1:
            return 0
        while self._checked_upto < q:
            i = self._checked_upto + 1
            v = self._raw(i)
            prev = 0 if i == 0 else self._raw(i - 1)
            if i == 0 and v <= 0:
                raise ValueError(f"lambda_0 = {v} must be positive")
            if i > 0 and v <= 2 * prev:
                raise ValueError(f"not 2-lacunary: lambda_{i} = {v} <= 2 * lambda_{i-1} = {2 * prev}")
            self._checked_upto = i
        return self._raw(q)

    def gap(self, q: int) -> int:
        """lambda_q - lambda_{q-1} (q >= 0)."""
        return self.value(q) - self.value(q - 1)

    def max_precision(self):
        """Deepest exponent the spec can vouch for, or None when unbounded."""
        if self.kind == "list":
            return self.value(len(self._values) - 1)
        return None

    def __repr__(self):
        return f"LambdaSpec({self.name})"


@dataclass(frozen=True)
class EpsilonSpec:
    """Ultimately periodic 0/1 sign sequence; value(n) = 0 for n < 0."""

    pre: tuple = ()
    period: tuple = (0,)

    def __post_init__(self):
        if not self.period:
            raise ValueError("empty period")
        for v in self.pre + self.period:
            if v not in (0, 1):
                raise ValueError("sign sequence entries must be 0 or 1")

    @classmethod
    def zero(cls):
        return cls((), (0,))

    def value(self, n: int) -> int:
        if n < 0:
            return 0
        if n < len(self.pre):
            return self.pre[n]
        return self.period[(n - len(self.pre)) % len(self.period)]

    def sign(self, n: int) -> int:
        """(-1)^eps_n."""
        return -1 if self.value(n) else 1

    def is_zero(self):
        return not any(self.pre) and not any(self.period)

    def describe(self):
        if self.pre:
            return "pre:" + ",".join(map(str, self.pre)) + "+period:" + ",".join(map(str, self.period))
        return "period:" + ",".join(map(str, self.period))

    def __repr__(self):
        return f"EpsilonSpec({self.describe()})"


def parse_lambda_spec(text: str) -> LambdaSpec:
    """CLI grammar: 'mersenne' or 'list:1,3,7,15'."""
    if text == "mersenne":
        return LambdaSpec.mersenne()
    if text.startswith("list:"):
        try:
            values = [int(v) for v in text[5:].split(",") if v != ""]
        except ValueError:
            raise ValueError(f"bad exponent list {text!r}")
        return LambdaSpec.from_list(values)
    raise ValueError(f"bad lambda spec {text!r} (expected 'mersenne' or 'list:...')")


def parse_epsilon_spec(text: str) -> EpsilonSpec:
    """CLI grammar: 'period:0' or 'pre:1,0+period:0,1'."""
    pre: tuple = ()
    body = text
    if text.startswith("pre:"):
        head, sep, body = text[4:].partition("+")
        if not sep:
            raise ValueError(f"bad epsilon spec {text!r} (missing '+period:')")
        pre = tuple(int(v) for v in head.split(",") if v != "")
    if not body.startswith("period:"):
        raise ValueError(f"bad epsilon spec {text!r} (expected 'period:...')")
    period = tuple(int(v) for v in body[7:].split(",") if v != "")
    return EpsilonSpec(pre, period)


def term_exponent(k: int, lam: LambdaSpec) -> int:
    """Exponent mu(k) = sum over set digits q of k of gap(q)."""
    if k < 0:
        raise ValueError("negative index")
    if lam.is_mersenne:
        return k   # gaps are 2^q, so the digit-weighted sum telescopes to k
    total = 0
    q = 0
    while k:
        if k & 1:
            total += lam.gap(q)
        k >>= 1
        q += 1
    return total


#: Readings of the sign-correction parity.  "digit" pairs the difference
#: eps_q - eps_{q-1} with digit q and is the one the continued-fraction oracle
#: confirms; the other two are retained for the executable adjudication.
MUBAR_CONVENTIONS = ("digit", "spec-q", "literal-k")


def eps_sign_parity(k: int, eps: EpsilonSpec, convention: str = "digit") -> int:
    """Parity (0/1) of the epsilon-difference weight attached to index k."""
    if k < 0:
        raise ValueError("negative index")
    if convention == "digit":
        total = 0
        q = 0
        kk = k
        while kk:
            if kk & 1:
                total += eps.value(q) - eps.value(q - 1)
            kk >>= 1
            q += 1
        return total & 1
    if convention == "spec-q":
        total = 0
        q = 0
        kk = k
        while kk:
            if kk & 1:
                total += eps.value(q - 1) - eps.value(q - 2)
            kk >>= 1
            q += 1
        return total & 1
    if convention == "literal-k":
        return (k.bit_count() * (eps.value(k - 1) - eps.value(k - 2))) & 1
    raise ValueError(f"unknown convention {convention!r}")


def term_sign(k: int, eps: EpsilonSpec, convention: str = "digit") -> int:
    """Sign (+1/-1) of the k-th closed-form term: parity of the "10" block
    count plus the epsilon-difference weight."""
    return -1 if (count_10_blocks(k) + eps_sign_parity(k, eps, convention)) & 1 else 1
