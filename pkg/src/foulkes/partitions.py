"""Integer partition arithmetic.

A partition is a plain tuple of weakly decreasing positive integers; the
empty partition is ``()``.  A composition is a tuple of non-negative
integers, canonical with trailing zeros stripped.  All functions are pure
and operate on immutable values, so they are safe to call concurrently.

Partitions serialize as JSON arrays of integers, e.g. ``[6, 2, 2, 2]``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import GuardError

Partition = tuple[int, ...]
Composition = tuple[int, ...]

# Largest weight partitions_of will iterate without an explicit override.
WEIGHT_GUARD = 60


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"partition parts must be positive, got {x}")
        if i and p[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def as_composition(entries: Sequence[int]) -> Composition:
    """Validate ``entries`` and strip trailing zeros."""
    c = tuple(int(x) for x in entries)
    if any(x < 0 for x in c):
        raise ValueError(f"composition entries must be non-negative: {c}")
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def weight(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: entry i is the number of parts >= i+1."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= col) for col in range(1, p[0] + 1))


def dominates(p: Partition, q: Partition) -> bool:
    """True iff ``p`` is above ``q`` in the dominance order.

    Compares partial sums componentwise, reading missing parts as zero.
    Partitions of different weights are not comparable and raise.
    """
    if sum(p) != sum(q):
        raise ValueError("incomparable weights")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def strictly_dominates(p: Partition, q: Partition) -> bool:
    return p != q and dominates(p, q)


def union_parts(p: Partition, q: Partition) -> Partition:
    """Partition whose multiset of parts is the union of both multisets."""
    return tuple(sorted(p + q, reverse=True))


def subtract_rect(p: Partition, c: int) -> Partition:
    """Subtract ``c`` from every part and drop resulting zeros."""
    if c < 0:
        raise ValueError("column count must be non-negative")
    if any(part < c for part in p):
        raise ValueError(f"every part must be >= {c}: {p}")
    return tuple(part - c for part in p if part > c)


def star(m: int, n: int, nu: Sequence[int]) -> Partition:
    """Move boxes of the n-row, m-column rectangle as prescribed by ``nu``.

    For each part nu[i-1] (i = 1..k), the last nu[i-1] rows still reaching
    column m+1-i each lose their final box, and row i gains nu[i-1] boxes.
    ``nu`` must be a partition of n-1 with at most m parts; the result is a
    partition of m*n.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    nu_p = as_partition(nu)
    if weight(nu_p) != n - 1 or len(nu_p) > m:
        raise ValueError("invalid nu")
    if nu_p and len(nu_p) + nu_p[0] > n:
        # Cannot occur for a partition of n-1, kept as an explicit guard.
        raise ValueError("invalid nu")
    rows = [m] * n
    for i, vi in enumerate(nu_p, start=1):
        col = m + 1 - i
        reaching = [r for r in range(n) if rows[r] >= col]
        if len(reaching) < vi:
            raise ValueError("invalid nu")
        for r in reaching[len(reaching) - vi:]:
            rows[r] -= 1
        rows[i - 1] += vi
    out = tuple(r for r in rows if r > 0)
    if sum(out) != m * n or any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError("invalid nu")
    return out


def star_preimage(m: int, n: int, lam: Partition) -> Partition | None:
    """Return nu with ``star(m, n, nu) == lam`` if one exists, else None."""
    for nu in partitions_of(n - 1, guard=None):
        if len(nu) <= m and star(m, n, nu) == lam:
            return nu
    return None


def partitions_of(
    total: int, max_part: int | None = None, guard: int | None = WEIGHT_GUARD
) -> Iterator[Partition]:
    """Yield every partition of ``total`` exactly once.

    The order is reverse lexicographic, so ``(total,)`` comes first and the
    all-ones partition last.  Consumers must not rely on anything else about
    the order.
    """
    if total < 0:
        raise ValueError("cannot partition a negative integer")
    if guard is not None and total > guard:
        raise GuardError(
            f"partition weight {total} exceeds guard {guard}; pass guard=None to override"
        )

    def gen(n: int, mx: int) -> Iterator[Partition]:
        if n == 0:
            yield ()
            return
        for head in range(min(n, mx), 0, -1):
            for tail in gen(n - head, head):
                yield (head,) + tail

    yield from gen(total, total if max_part is None else max_part)
