#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures under src/lacunary/fixtures/.

Values are reconstructed offline from each sequence's published OEIS
definition (binomial sums, the period-3 rule, triangle formulas), using
math.comb only -- deliberately none of the package's own digit machinery,
so the fixtures stay an independent oracle.  Output follows the b-file
format: one "n a(n)" pair per line.
"""

import pathlib
from math import comb

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "lacunary" / "fixtures"


def parity(x: int) -> int:
    return x % 2


def sign_pop(x: int) -> int:
    return -1 if bin(x).count("1") % 2 else 1


def a002487(n_max: int):
    # Stern's diatomic series: a(0)=0, a(1)=1, a(2n)=a(n), a(2n+1)=a(n)+a(n+1)
    vals = [0, 1]
    for n in range(2, n_max + 1):
        half = n // 2
        vals.append(vals[half] if n % 2 == 0 else vals[half] + vals[half + 1])
    return list(enumerate(vals[: n_max + 1]))


def a049347(n_max: int):
    # period 3: repeat 1, -1, 0
    block = [1, -1, 0]
    return [(n, block[n % 3]) for n in range(n_max + 1)]


def a005590(n_max: int):
    # a(m) for m >= 1 equals the binomial-parity sum over 2r <= m-1 of
    # C(m-1-r, r) mod 2 times (-1)^popcount(r); a(0) = 0
    out = [(0, 0)]
    for m in range(1, n_max + 1):
        n = m - 1
        out.append((m, sum(parity(comb(n - r, r)) * sign_pop(r) for r in range(n // 2 + 1))))
    return out


def a177219(n_max: int):
    # same sum weighted by (-1)^popcount(m-1-r)
    out = [(0, 0)]
    for m in range(1, n_max + 1):
        n = m - 1
        out.append((m, sum(parity(comb(n - r, r)) * sign_pop(n - r) for r in range(n // 2 + 1))))
    return out


def a168561(rows: int):
    # T(n,k) = C((n+k)/2, k) when n+k even, else 0; rows n >= 0, 0 <= k <= n
    out = []
    m = 0
    for n in range(rows):
        for k in range(n + 1):
            v = comb((n + k) // 2, k) if (n + k) % 2 == 0 else 0
            out.append((m, v))
            m += 1
    return out


def a085478(rows: int):
    # T(n,k) = C(n+k, 2k); rows n >= 0, 0 <= k <= n
    out = []
    m = 0
    for n in range(rows):
        for k in range(n + 1):
            out.append((m, comb(n + k, 2 * k)))
            m += 1
    return out


def a078812(rows: int):
    # T(n,k) = C(n+k, 2k+1); rows n >= 1, 0 <= k <= n-1; offset 1
    out = []
    m = 1
    for n in range(1, rows + 1):
        for k in range(n):
            out.append((m, comb(n + k, 2 * k + 1)))
            m += 1
    return out


def write_bfile(name: str, entries):
    path = OUT / name
    with path.open("w") as fh:
        for n, v in entries:
            fh.write(f"{n} {v}\n")
    print(f"wrote {path} ({len(entries)} entries)")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_bfile("b002487.txt", a002487(10_000))
    write_bfile("b049347.txt", a049347(2_000))
    write_bfile("b005590.txt", a005590(2_000))
    write_bfile("b177219.txt", a177219(2_000))
    write_bfile("b168561.txt", a168561(128))
    write_bfile("b085478.txt", a085478(128))
    write_bfile("b078812.txt", a078812(128))
    readme = OUT / "README.md"
    readme.write_text(
        "# Sequence fixtures\n\n"
        "b-files in this directory are offline reconstructions of sequences\n"
        "catalogued by the On-Line Encyclopedia of Integer Sequences\n"
        "(OEIS, https://oeis.org): A002487, A049347, A005590, A177219,\n"
        "A168561, A085478, A078812.  Values were computed from the published\n"
        "definitions (doubling recurrences, the period-3 rule, and the\n"
        "binomial triangle formulas noted in tools/make_fixtures.py), not\n"
        "downloaded, so the test suite stays hermetic.  The format matches\n"
        "OEIS b-files: one \"n a(n)\" pair per line.\n\n"
        "Triangle linearization: A168561 and A085478 list rows n = 0, 1, ...\n"
        "with entries k = 0..n and linear index n(n+1)/2 + k starting at 0;\n"
        "A078812 lists rows n = 1, 2, ... with entries k = 0..n-1 and linear\n"
        "index starting at 1.\n\n"
        "Regenerate with: python tools/make_fixtures.py\n"
    )
    print(f"wrote {readme}")


if __name__ == "__main__":
    main()
