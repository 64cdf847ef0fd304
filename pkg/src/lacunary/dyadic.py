"""2-adic integers in three representations, with digit access and the
binomial-parity machinery extended to 2-adic upper arguments.

A value is one of

* ``Finite``: an ordinary integer; its digit string is the two's-complement
  expansion (so negative integers carry an infinite tail of 1s);
* ``EventuallyPeriodic``: a rational a/b with odd b, stored canonically as a
  minimal preperiod plus minimal repeating block of digits (tail-0 and tail-1
  expansions collapse to Finite on construction);
* ``Stream``: an opaque digit rule with a declared safe depth, for values
  given only by their digits.

Binomial parity against a 2-adic upper argument extends the digitwise rule:
C(w, k) mod 2 = 1 iff every digit of k is dominated by the matching digit of
w.  The half-sum coefficient C((w+k)/2, k) mod 2 is always evaluated through
the equivalent form C(w+k+1, 2k+1) mod 2, which needs windowed addition only
and never divides a digit string by 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .periodic import detect_ultimate_period


class NotTwoAdicError(ValueError):
    """Denominator is even: the rational is not a 2-adic integer."""


class StreamDepthError(IndexError):
    """A digit past the declared safe depth of a stream was requested."""


class OpaqueStreamError(TypeError):
    """Operation needs arithmetic that an opaque digit stream cannot support."""


@dataclass(frozen=True)
class Dyadic:
    """A 2-adic integer.  Construct through from_int / from_rational /
    from_bits / from_stream; direct construction is internal."""

    kind: str                      # "finite" | "periodic" | "stream"
    value: int = 0                 # finite only
    pre: tuple = ()                # periodic only: preperiod digits
    per: tuple = ()                # periodic only: repeating digits
    num: int = 0                   # periodic only: value = num / den
    den: int = 1
    rule: object = None            # stream only
    depth: int = 0                 # stream only: digits [0, depth) are safe
    name: str = ""

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "Dyadic":
        return cls("finite", value=n)

    @classmethod
    def from_rational(cls, a: int, b: int) -> "Dyadic":
        """a/b as a 2-adic integer; b must be odd (after reduction)."""
        if b == 0:
            raise ValueError("zero denominator")
        if b < 0:
            a, b = -a, -b
        g = gcd(a, b)
        if g:
            a //= g
            b //= g
        if b % 2 == 0:
            raise NotTwoAdicError(f"not a 2-adic integer: denominator {b} is even")
        if b == 1:
            return cls.from_int(a)
        # digit orbit of the map x -> (x - x0)/2 on numerators over fixed b
        digits = []
        seen = {}
        x = a
        while x not in seen:
            seen[x] = len(digits)
            d = x & 1
            digits.append(d)
            x = (x - d * b) >> 1
        cut = seen[x]
        return cls("periodic", pre=tuple(digits[:cut]), per=tuple(digits[cut:]), num=a, den=b)

    @classmethod
    def from_bits(cls, pre, period) -> "Dyadic":
        """Digit description; canonicalized through the rational value."""
        pre = tuple(int(v) for v in pre)
        period = tuple(int(v) for v in period)
        if not period:
            raise ValueError("empty period")
        for v in pre + period:
            if v not in (0, 1):
                raise ValueError("digits must be 0 or 1")
        head = sum(v << i for i, v in enumerate(pre))
        block = sum(v << i for i, v in enumerate(period))
        ln = len(period)
        # value = head + 2^len(pre) * block / (1 - 2^ln)
        num = head * (1 - (1 << ln)) + (block << len(pre))
        den = 1 - (1 << ln)
        return cls.from_rational(num, den)

    @classmethod
    def from_stream(cls, rule, depth: int, name: str = "stream") -> "Dyadic":
        if depth <= 0:
            raise ValueError("stream depth must be positive")
        return cls("stream", rule=rule, depth=depth, name=name)

    # -- basic structure ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "finite":
            return self.value == other.value
        if self.kind == "periodic":
            return (self.num, self.den) == (other.num, other.den)
        return self is other

    def __hash__(self):
        if self.kind == "finite":
            return hash(("finite", self.value))
        if self.kind == "periodic":
            return hash(("periodic", self.num, self.den))
        return id(self)

    def __repr__(self):
        if self.kind == "finite":
            return f"Dyadic({self.value})"
        if self.kind == "periodic":
            return f"Dyadic({self.num}/{self.den})"
        return f"Dyadic(stream:{self.name})"

    def digit(self, j: int) -> int:
        """Digit j (LSB first)."""
        if j < 0:
            raise ValueError("negative digit index")
        if self.kind == "finite":
            return (self.value >> j) & 1
        if self.kind == "periodic":
            if j < len(self.pre):
                return self.pre[j]
            return self.per[(j - len(self.pre)) % len(self.per)]
        if j >= self.depth:
            raise StreamDepthError(f"stream exhausted: digit {j} beyond safe depth {self.depth}")
        return int(self.rule(j)) & 1

    def digits_window(self, length: int) -> int:
        """Digits [0, length) packed into an int, LSB first."""
        if length <= 0:
            return 0
        mask = (1 << length) - 1
        if self.kind == "finite":
            return self.value & mask
        if self.kind == "periodic":
            return (self.num * pow(self.den, -1, 1 << length)) & mask
        if length > self.depth:
            raise StreamDepthError(f"stream exhausted: window {length} beyond safe depth {self.depth}")
        return sum(int(self.rule(j)) << j for j in range(length) if self.rule(j))

    def parity(self) -> int:
        return self.digit(0)

    def shift(self) -> "Dyadic":
        """The shifted value (w - w_0) / 2; representation kind is preserved."""
        if self.kind == "finite":
            return Dyadic.from_int(self.value >> 1)
        if self.kind == "periodic":
            d = self.num & 1   # den is odd, so parity of num/den is parity of num
            return Dyadic.from_rational((self.num - d * self.den) >> 1, self.den)
        rule, depth, name = self.rule, self.depth, self.name
        return Dyadic.from_stream(lambda j: rule(j + 1), depth - 1, name + ">>1")

    def add_int(self, n: int) -> "Dyadic":
        """w + n for an ordinary integer n."""
        if self.kind == "finite":
            return Dyadic.from_int(self.value + n)
        if self.kind == "periodic":
            return Dyadic.from_rational(self.num + n * self.den, self.den)
        raise OpaqueStreamError("unsupported on opaque stream: add_int (use windowed digits)")

    def to_rational(self):
        """(numerator, denominator) with odd positive denominator."""
        if self.kind == "finite":
            return (self.value, 1)
        if self.kind == "periodic":
            return (self.num, self.den)
        raise OpaqueStreamError("unsupported on opaque stream: to_rational")

    def classify(self) -> str:
        if self.kind == "finite":
            return "integer"
        if self.kind == "periodic":
            return "rational-non-integer"
        return "unknown"

    def is_rational(self) -> bool:
        return self.kind != "stream"

    def describe(self) -> str:
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "periodic":
            return f"{self.num}/{self.den}"
        return f"stream:{self.name}"


def parse_omega(text: str, stream_depth: int = 1 << 20) -> Dyadic:
    """CLI grammar: ``int:-5``, ``rat:1/3``, ``bits:pre=1,0;period=0,1``,
    ``stream:thue-morse`` (built-in demo streams: thue-morse, paperfolding)."""
    if text.startswith("int:"):
        return Dyadic.from_int(int(text[4:]))
    if text.startswith("rat:"):
        body = text[4:]
        if "/" in body:
            a, b = body.split("/", 1)
            return Dyadic.from_rational(int(a), int(b))
        return Dyadic.from_rational(int(body), 1)
    if text.startswith("bits:"):
        pre: tuple = ()
        period = None
        for part in text[5:].split(";"):
            key, sep, val = part.partition("=")
            if not sep:
                raise ValueError(f"bad omega bits spec {text!r}")
            vals = tuple(int(v) for v in val.split(",") if v != "")
            if key == "pre":
                pre = vals
            elif key == "period":
                period = vals
            else:
                raise ValueError(f"bad omega bits key {key!r}")
        if period is None:
            raise ValueError(f"bad omega bits spec {text!r} (missing period)")
        return Dyadic.from_bits(pre, period)
    if text.startswith("stream:"):
        name = text[7:]
        if name == "thue-morse":
            return Dyadic.from_stream(lambda j: j.bit_count() & 1, stream_depth, "thue-morse")
        if name == "paperfolding":
            return Dyadic.from_stream(_paperfolding_bit, stream_depth, "paperfolding")
        raise ValueError(f"unknown demo stream {name!r}")
    raise ValueError(f"bad omega spec {text!r}")


def _paperfolding_bit(j: int) -> int:
    """Regular paperfolding sequence as 0/1 digits."""
    n = j + 1
    while n % 2 == 0:
        n //= 2
    return 1 if n % 4 == 1 else 0


# -- binomial parity with 2-adic upper argument ---------------------------

def binom_parity_dyadic(w: Dyadic, k: int) -> int:
    """C(w, k) mod 2 for a 2-adic w and nonnegative integer k."""
    if k < 0:
        raise ValueError("negative lower argument")
    if k == 0:
        return 1
    need = k.bit_length()
    return 1 if (k & ~w.digits_window(need)) == 0 else 0


def _window_plus(w: Dyadic, c: int, length: int) -> int:
    """Digits [0, length) of w + c, via windowed addition (carries only move
    upward, so a window of w of the same length determines the result)."""
    mask = (1 << length) - 1
    if w.kind == "finite":
        return (w.value + c) & mask
    if w.kind == "periodic":
        return ((w.num + c * w.den) * pow(w.den, -1, 1 << length)) & mask
    return (w.digits_window(length) + c) & mask


def halfsum_binom(w: Dyadic, k: int) -> int:
    """C((w+k)/2, k) mod 2, evaluated as C(w+k+1, 2k+1) mod 2.

    The two agree wherever the former is defined, and the latter needs no
    division: only a windowed add.  Opposite-parity combinations come out 0
    automatically."""
    if k < 0:
        raise ValueError("negative lower argument")
    kk = 2 * k + 1
    need = kk.bit_length()
    return 1 if (kk & ~_window_plus(w, k + 1, need)) == 0 else 0


def kernel_value(w: Dyadic, k: int, tag: str) -> int:
    """The three coefficient families used by the coefficient automata:
    tag 'f': C(w+k+1, 2k+1) mod 2 (the half-sum coefficient),
    tag 'g': C(w+k, 2k) mod 2,
    tag 'h': C(w+k, 2k+1) mod 2."""
    if k < 0:
        raise ValueError("negative lower argument")
    if tag == "f":
        kk = 2 * k + 1
        c = k + 1
    elif tag == "g":
        kk = 2 * k
        c = k
    elif tag == "h":
        kk = 2 * k + 1
        c = k
    else:
        raise ValueError(f"unknown tag {tag!r}")
    if kk == 0:
        return 1
    need = kk.bit_length()
    return 1 if (kk & ~_window_plus(w, c, need)) == 0 else 0


def kernel_range(w: Dyadic, k_max: int, tag: str = "f") -> list:
    """[kernel_value(w, k, tag) for k in 0..k_max], sharing one digit window
    of w across the whole sweep (the windowed add is carry-exact, so low
    digits of w + c never depend on digits beyond the window)."""
    if k_max < 0:
        raise ValueError("negative range")
    if tag not in ("f", "g", "h"):
        raise ValueError(f"unknown tag {tag!r}")
    length = (2 * k_max + 1).bit_length() + 1
    win = w.digits_window(length)
    out = []
    for k in range(k_max + 1):
        if tag == "f":
            kk, c = 2 * k + 1, k + 1
        elif tag == "g":
            kk, c = 2 * k, k
        else:
            kk, c = 2 * k + 1, k
        out.append(1 if kk & ~(win + c) == 0 else 0)
    return out


def digit_pair_period(w: Dyadic, max_digits: int):
    """Eventual periodicity of j -> (w_j + w_{j+1}) mod 2 within max_digits
    digits.  Returns (preperiod_length, period_tuple) or None.

    The pair-sum sequence equals j -> C(w + 2^j, 2^(j+1)) mod 2; it is
    ultimately periodic exactly when w is rational, and ultimately zero
    exactly when w is an integer."""
    if max_digits < 6:
        raise ValueError("insufficient data: need at least 6 digits")
    window = w.digits_window(max_digits + 1)
    seq = [((window >> j) ^ (window >> (j + 1))) & 1 for j in range(max_digits)]
    bound = max(1, max_digits // 3)
    return detect_ultimate_period(seq, max_period=bound, max_preperiod=max_digits - 2 * bound)


def halfsum_binom_halving(w: Dyadic, k: int) -> int:
    """C((w+k)/2, k) mod 2 by explicitly halving the digit stream of w + k.

    Only valid when parity(w) = parity(k) (the sum is even); test-facing
    second opinion for halfsum_binom, which never divides."""
    if k < 0:
        raise ValueError("negative lower argument")
    if (w.parity() ^ k) & 1:
        raise ValueError("parities differ: the half-sum is not a 2-adic integer")
    if k == 0:
        return 1
    need = k.bit_length()
    half = _window_plus(w, k, need + 1) >> 1
    return 1 if (k & ~half) == 0 else 0


def leading_zeros(w: Dyadic) -> int:
    """Number of leading 0 digits.  Undefined (raises) for 0."""
    if w.kind == "finite" and w.value == 0:
        raise ValueError("zero has no finite leading-zeros count")
    n = 0
    while w.digit(n) == 0:
        n += 1
        if n > 10 ** 6:
            raise ValueError("leading-zeros count did not terminate")
    return n


def leading_ones(w: Dyadic) -> int:
    """Number of leading 1 digits.  Undefined (raises) for -1, whose digits
    are all 1."""
    if w.kind == "finite" and w.value == -1:
        raise ValueError("minus one has no finite leading-ones count")
    n = 0
    while w.digit(n) == 1:
        n += 1
        if n > 10 ** 6:
            raise ValueError("leading-ones count did not terminate")
    return n
