"""Reproducible seed derivation.

Sub-seeds are the top 8 bytes of SHA-256 over the colon-joined decimal
rendering of (master seed, parts...), read big-endian.  The mixing is
implementation independent, so sweeps shard reproducibly: any worker can
recompute the seed for (prime, trial, role) from the master seed alone.
"""

from __future__ import annotations

import hashlib


def mix_seed(master: int, *parts: int | str) -> int:
    data = ":".join(str(x) for x in (master, *parts)).encode("ascii")
    return int.from_bytes(hashlib.sha256(data).digest()[:8], "big")
