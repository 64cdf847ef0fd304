"""Comparison harness against bundled OEIS b-file snapshots.

Each profile states how an OEIS index m maps onto one of our sequences,
including the index shifts (+1 for two of the signed sequences) and the
row linearization for the three binomial triangles, whose fixture values
are compared through their parity.  Fixtures live in the package's
fixtures/ directory; nothing here touches the network.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from math import isqrt

from .dyadic import Dyadic, kernel_value
from .stern import alpha, beta, gamma, stern_u


def parse_bfile(text: str) -> list:
    """OEIS b-file lines "n a(n)"; '#' comments and blank lines ignored."""
    entries = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed b-file line: {raw!r}")
        try:
            entries.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"malformed b-file line: {raw!r}") from None
    return entries


def _tri0(m: int):
    """Invert m = n(n+1)/2 + k for a triangle with rows 0..n, k <= n."""
    n = (isqrt(8 * m + 1) - 1) // 2
    return n, m - n * (n + 1) // 2


def _tri_f(m: int) -> int:
    n, k = _tri0(m)
    return kernel_value(Dyadic.from_int(n), k, "f")


def _tri_g(m: int) -> int:
    n, k = _tri0(m)
    return kernel_value(Dyadic.from_int(n), k, "g")


def _tri_h(m: int) -> int:
    n, k = _tri0(m - 1)
    return kernel_value(Dyadic.from_int(n + 1), k, "h")


_MOD2 = lambda v: v % 2  # noqa: E731
_ID = lambda v: v  # noqa: E731


@dataclass(frozen=True)
class OeisProfile:
    seq_id: str
    description: str
    min_index: int
    compute: object          # m -> our value
    reduce_fixture: object   # fixture value -> comparable value


PROFILES = {
    "A002487": OeisProfile(
        "A002487", "Stern-Brocot diatomic sequence; a(m) = u_{m-1}", 0,
        lambda m: stern_u(m - 1), _ID,
    ),
    "A049347": OeisProfile(
        "A049347", "period-3 sequence 1,-1,0; a(m) = gamma(m)", 0,
        lambda m: gamma(m), _ID,
    ),
    "A005590": OeisProfile(
        "A005590", "a(m) = alpha(m-1), the shifted Thue-Morse convolution", 1,
        lambda m: alpha(m - 1), _ID,
    ),
    "A177219": OeisProfile(
        "A177219", "a(m) = beta(m-1), the mirrored Thue-Morse convolution", 1,
        lambda m: beta(m - 1), _ID,
    ),
    "A168561": OeisProfile(
        "A168561", "triangle C((n+k)/2, k) by rows; parity = half-sum kernel", 0,
        _tri_f, _MOD2,
    ),
    "A085478": OeisProfile(
        "A085478", "triangle C(n+k, 2k) by rows; parity = even kernel", 0,
        _tri_g, _MOD2,
    ),
    "A078812": OeisProfile(
        "A078812", "triangle C(n+k, 2k+1) by rows n>=1; parity = odd kernel", 1,
        _tri_h, _MOD2,
    ),
}


@dataclass(frozen=True)
class CheckReport:
    seq_id: str
    compared: int
    ok: bool
    first_mismatch: object   # None or (index, fixture value, our value)

    def summary(self) -> str:
        if self.ok:
            return f"{self.seq_id}: OK ({self.compared} entries)"
        m, want, got = self.first_mismatch
        return f"{self.seq_id}: MISMATCH at {m}: fixture {want}, computed {got}"


def fixture_path(seq_id: str):
    name = "b" + seq_id[1:] + ".txt"
    return resources.files("lacunary").joinpath("fixtures", name)


def check_oeis(seq_id: str, bfile_text: str | None = None, limit: int | None = None) -> CheckReport:
    """Compare the named sequence against a b-file (the bundled fixture by
    default) over the overlapping index range."""
    if seq_id not in PROFILES:
        raise KeyError(f"no profile for {seq_id}")
    prof = PROFILES[seq_id]
    if bfile_text is None:
        bfile_text = fixture_path(seq_id).read_text()
    entries = [(m, v) for m, v in parse_bfile(bfile_text) if m >= prof.min_index]
    if limit is not None:
        entries = entries[:limit]
    if not entries:
        raise ValueError(f"empty overlap for {seq_id}")
    for m, v in entries:
        ours = prof.compute(m)
        if prof.reduce_fixture(v) != ours:
            return CheckReport(seq_id, len(entries), False, (m, v, ours))
    return CheckReport(seq_id, len(entries), True, None)
