"""Integer partitions and the dominance order."""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod

__all__ = [
    "Partition",
    "partitions_of",
    "dominates",
    "transpose",
    "automorphism_factor",
    "parse_partition",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves as an immutable tuple, so equality, hashing and ordering are the
    tuple ones. Tuple ordering is lexicographic; ``partitions_of`` lists
    partitions in the reverse of it.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"


def parse_partition(text: str) -> Partition:
    """Parse ``"[4,2,2]"``, ``"4,2,2"`` or the exponent form ``"[2^3,1]"``."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return Partition(())
    parts = []
    for token in body.split(","):
        token = token.strip()
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
        if not m:
            raise ValueError(f"cannot parse partition {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition._trusted(p) for p in _partitions(n, n))


def dominates(lam, nu) -> bool:
    """True iff every prefix sum of ``lam`` is at least that of ``nu``."""
    if sum(lam) != sum(nu):
        raise ValueError(f"dominance needs equal weights: {tuple(lam)} vs {tuple(nu)}")
    a = b = 0
    for j in range(max(len(lam), len(nu))):
        a += lam[j] if j < len(lam) else 0
        b += nu[j] if j < len(nu) else 0
        if a < b:
            return False
    return True


def transpose(lam) -> Partition:
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(
        tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))
    )


def automorphism_factor(lam) -> int:
    """Product of the factorials of the part multiplicities."""
    return prod(factorial(r) for r in Counter(lam).values())
