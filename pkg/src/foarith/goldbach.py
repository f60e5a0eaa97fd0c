"""Concrete number theory: primality, the admissible evens, Goldbach partitions.

An even number alpha is *admissible* here when alpha >= 16 and both
alpha/2 and alpha - 3 are composite.  ``scan`` verifies that every
admissible even up to a limit has at least one Goldbach partition and
counts the partitions.

Two independent routes are kept on purpose.  ``is_prime`` and
``partitions`` use plain trial division and serve as the oracle in
tests; ``admissible_evens`` and ``scan`` are sieve- and FFT-backed for
bulk work and are cross-checked against the trial-division route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = [
    "is_prime", "is_admissible", "admissible_evens",
    "partitions", "ScanReport", "scan",
]


def is_prime(n: int) -> bool:
    """Trial division; 0 and 1 are not prime."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def is_admissible(alpha: int) -> bool:
    """Even, at least 16, with alpha/2 and alpha-3 both composite."""
    return (alpha % 2 == 0 and alpha >= 16
            and not is_prime(alpha // 2) and not is_prime(alpha - 3))


def _sieve(limit: int) -> np.ndarray:
    """Boolean array, index i True iff i is prime, for 0 <= i <= limit."""
    if limit < 2:
        return np.zeros(max(limit + 1, 0), dtype=bool)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return flags


def admissible_evens(limit: int) -> list:
    """Ascending list of admissible evens up to and including limit."""
    if limit < 16:
        return []
    flags = _sieve(limit)
    evens = np.arange(16, limit + 1, 2)
    mask = ~flags[evens // 2] & ~flags[evens - 3]
    return [int(a) for a in evens[mask]]


def partitions(alpha: int) -> list:
    """All pairs (p, q) with p <= q, p + q = alpha, both prime, p ascending."""
    if alpha % 2 != 0 or alpha < 4:
        raise ValueError(f"alpha must be an even number >= 4, got {alpha}")
    return [(p, alpha - p) for p in range(2, alpha // 2 + 1)
            if is_prime(p) and is_prime(alpha - p)]


def _pair_counts(flags: np.ndarray) -> np.ndarray:
    """Ordered prime-pair counts by sum, via FFT autoconvolution.

    conv[s] = #{(p, q) : p + q = s, both prime, order significant}.  The
    values stay far below 2**53, so rounding the float convolution back to
    integers is exact.
    """
    n = flags.size
    size = 1 << (2 * n - 1).bit_length()
    spectrum = np.fft.rfft(flags.astype(np.float64), size)
    conv = np.fft.irfft(spectrum * spectrum, size)[:n]
    return np.rint(conv).astype(np.int64)


@dataclass
class ScanReport:
    limit: int
    members: list
    verified: bool
    first_failure: Optional[int]
    partition_counts: dict

    def to_json_dict(self) -> dict:
        return {
            "limit": self.limit,
            "members": list(self.members),
            "verified": self.verified,
            "first_failure": self.first_failure,
            "partition_counts": {str(k): v for k, v in self.partition_counts.items()},
        }

    def to_csv(self) -> str:
        lines = ["alpha,count"]
        lines.extend(f"{alpha},{count}" for alpha, count in self.partition_counts.items())
        return "\n".join(lines) + "\n"


def scan(limit: int, chunks: int = 1) -> ScanReport:
    """Verify Goldbach on every admissible even up to limit.

    ``chunks`` splits the member list into contiguous pieces processed in
    order; the merged report is identical for any chunk count.
    """
    if chunks < 1:
        raise ValueError("chunks must be >= 1")
    if limit < 16:
        return ScanReport(limit, [], True, None, {})
    flags = _sieve(limit)
    evens = np.arange(16, limit + 1, 2)
    members_arr = evens[~flags[evens // 2] & ~flags[evens - 3]]
    if members_arr.size == 0:
        return ScanReport(limit, [], True, None, {})
    conv = _pair_counts(flags)

    counts: dict = {}
    first_failure: Optional[int] = None
    for chunk in np.array_split(members_arr, chunks):
        if chunk.size == 0:
            continue
        chunk_counts = (conv[chunk] + flags[chunk // 2]) // 2
        for alpha, count in zip(chunk, chunk_counts):
            alpha = int(alpha)
            count = int(count)
            counts[alpha] = count
            if count == 0 and first_failure is None:
                first_failure = alpha
    return ScanReport(limit, [int(a) for a in members_arr],
                      first_failure is None, first_failure, counts)
