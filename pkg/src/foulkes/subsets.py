"""The majorization order on m-subsets of the positive integers.

An m-subset is a strictly increasing tuple of positive integers.  ``Y``
majorizes ``X`` when the sorted elements compare componentwise, which makes
the m-subsets of a fixed size a graded lattice: the bottom element is
``{1, ..., m}`` and covers are single decrements.  The poset is never
materialized; everything is explored through ``lower_covers``.

m-subsets serialize as sorted JSON arrays, e.g. ``[2, 4, 6, 8]``.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

MSubset = tuple[int, ...]


def as_msubset(elements: Sequence[int]) -> MSubset:
    """Validate ``elements`` and return a canonical sorted tuple."""
    x = tuple(int(e) for e in elements)
    if not x:
        raise ValueError("an m-subset must be non-empty")
    for i, e in enumerate(x):
        if e < 1:
            raise ValueError(f"elements must be positive, got {e}")
        if i and x[i - 1] >= e:
            raise ValueError(f"elements must be strictly increasing: {x}")
    return x


def bottom(m: int) -> MSubset:
    """The unique minimal m-subset {1, ..., m}."""
    if m < 1:
        raise ValueError("m must be positive")
    return tuple(range(1, m + 1))


def majorizes(x: MSubset, y: MSubset) -> bool:
    """True iff ``y`` majorizes ``x``, i.e. x[i] <= y[i] for every i."""
    if len(x) != len(y):
        raise ValueError("mismatched cardinality")
    return all(a <= b for a, b in zip(x, y))


def level(x: MSubset) -> int:
    """Rank in the lattice: element sum above the bottom element's sum."""
    m = len(x)
    return sum(x) - m * (m + 1) // 2


def lower_covers(x: MSubset) -> list[MSubset]:
    """All m-subsets obtained from ``x`` by decrementing one element."""
    out = []
    for i, e in enumerate(x):
        if e - 1 >= 1 and (i == 0 or x[i - 1] < e - 1):
            out.append(x[:i] + (e - 1,) + x[i + 1:])
    return out


def downset_sets(a: MSubset) -> tuple[MSubset, ...]:
    """Every X with X majorized by ``a``, sorted lexicographically.

    Computed by breadth-first closure over lower covers, which reaches the
    whole downset because any majorization relation is witnessed by a chain
    of covers.
    """
    seen = {a}
    queue = deque([a])
    while queue:
        y = queue.popleft()
        for x in lower_covers(y):
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return tuple(sorted(seen))
