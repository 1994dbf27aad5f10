"""Prime sieve."""

from __future__ import annotations

from bisect import bisect_right
from typing import List

_cache: List[int] = []
_cache_limit = 1


def primes_up_to(limit: int) -> List[int]:
    """All primes p <= limit, in increasing order."""
    global _cache, _cache_limit
    limit = int(limit)
    if limit > _cache_limit:
        size = max(limit, 2 * _cache_limit) + 1
        sieve = bytearray([1]) * size
        sieve[0:2] = b"\x00\x00"
        for i in range(2, int(size ** 0.5) + 1):
            if sieve[i]:
                sieve[i * i::i] = bytes(len(range(i * i, size, i)))
        _cache = [i for i in range(size) if sieve[i]]
        _cache_limit = size - 1
    return _cache[:bisect_right(_cache, limit)]
