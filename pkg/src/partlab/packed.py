"""Exact convolution of integer count tables via fixed-width limb packing.

A coefficient array ``c[0..n]`` packs into the single integer
``sum_j c[j] * 2**(8*W*j)`` with limb width W bytes.  Multiplying two
packed arrays convolves them limb by limb, and the result is exact as
long as every coefficient that can influence limbs ``0..n`` stays below
the limb modulus.  Partition-count tables satisfy this: every retained
coefficient is at most the unrestricted partition count p(n), which is
below ``exp(pi*sqrt(2n/3))``, and that bound sizes the limbs.

gmpy2 (GMP) performs the multiplications when available; its large-operand
multiply is far faster than CPython's on sweep-scale tables.  Plain Python
integers are used otherwise, with identical results.
"""

from __future__ import annotations

import math
from typing import Sequence

try:
    from gmpy2 import mpz

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised via the fallback test
    HAVE_GMPY2 = False

    def mpz(x):  # type: ignore[misc]
        return x


def limb_bytes(n: int, *, margin_bits: int = 64) -> int:
    """Limb width in bytes safe for count tables truncated at index n.

    Pure count coefficients at kept indices stay below
    ``exp(pi*sqrt(2n/3))``; composite products (level-weighted counts,
    divisor-sum convolutions) exceed that by at most a factor ``n**3``,
    which the margin absorbs for every n up to 2**20.  Coefficients above
    the truncation index may overflow their limbs freely: every such term
    is a multiple of the modulus of the kept window, so masking removes
    it exactly.
    """
    if n < 0:
        raise ValueError(f"table index bound must be >= 0, got {n}")
    ceiling_bits = math.pi * math.sqrt(2.0 * max(n, 1) / 3.0) / math.log(2.0)
    words = (int(ceiling_bits) + margin_bits + 63) // 64
    return 8 * max(words, 2)


def pack(values: Sequence[int], wbytes: int):
    """Pack nonnegative coefficients into one integer with wbytes-wide limbs."""
    blob = b"".join(v.to_bytes(wbytes, "little") for v in values)
    return mpz(int.from_bytes(blob, "little"))


def unpack(packed, length: int, wbytes: int) -> list[int]:
    """Recover the first ``length`` coefficients from a packed integer."""
    blob = int(packed).to_bytes(length * wbytes, "little")
    return [
        int.from_bytes(blob[i * wbytes : (i + 1) * wbytes], "little")
        for i in range(length)
    ]


def truncation_mask(length: int, wbytes: int):
    """Bit mask keeping the low ``length`` limbs of a packed product."""
    return mpz((1 << (8 * wbytes * length)) - 1)


def convolve_truncated(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Exact truncated convolution ``c[j] = sum_i a[i]*b[j-i]`` for j <= n."""
    wbytes = limb_bytes(n)
    mask = truncation_mask(n + 1, wbytes)
    prod = (pack(a[: n + 1], wbytes) * pack(b[: n + 1], wbytes)) & mask
    return unpack(prod, n + 1, wbytes)
