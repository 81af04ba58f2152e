"""Brute-force character engine for symmetric groups.

Everything here is exact integer arithmetic: class sizes from the
centralizer formula, irreducible character values by the border-strip
recursion, and permutation-character values of block-partition actions by
fixed-point counting.  Inner products divide by the group order and assert
divisibility, so a rounding error is impossible and a logic error loud.

The permutation character of interest acts on the set partitions of
{1, ..., N} whose block sizes form a prescribed partition ``mu``.  For a
rectangular mu this is the classical Foulkes character; the general case
equals the induced product character by transitivity of induction, and is
computed here directly as a single fixed-point count.

Fixed-point values come from the *assembled* algorithm by default: blocks
of an invariant partition are permuted, so each orbit of blocks covers a
union of whole cycles, and orbits can be assembled group by group.  The
*naive* algorithm enumerates every typed set partition and tests it; it is
the independent oracle the assembled route is checked against.

Decomposition export (JSON):
``{"mu": [...], "constituents": [{"lambda": [...], "mult": 1}, ...],
"minimal": [[...], ...]}``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import ConsistencyError, GuardError
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    partitions_of,
    strictly_dominates,
    weight,
)

CycleType = Partition

# Largest degree the oracle touches without an explicit override; the env
# variable FOULKES_GUARD_POINTS raises it process-wide.
DEFAULT_POINT_GUARD = 14
GUARD_ENV_VAR = "FOULKES_GUARD_POINTS"


def point_guard(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(GUARD_ENV_VAR, DEFAULT_POINT_GUARD))


def _check_degree(n: int, guard: int | None) -> None:
    limit = point_guard(guard)
    if n > limit:
        raise GuardError(
            f"degree {n} exceeds the oracle guard {limit}; raise it via the "
            f"guard argument or {GUARD_ENV_VAR} (expect long runtimes)"
        )


def class_size(rho: CycleType) -> int:
    """Size of the conjugacy class of cycle type ``rho``."""
    n = weight(rho)
    return factorial(n) // centralizer_order(rho)


def centralizer_order(rho: CycleType) -> int:
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    return prod(i**a * factorial(a) for i, a in mult.items())


_chi_cache: dict[tuple[Partition, CycleType], int] = {}


def chi_value(lam: Partition, rho: CycleType) -> int:
    """Irreducible character value by the border-strip recursion."""
    lam = as_partition(lam)
    rho = as_partition(rho)
    if weight(lam) != weight(rho):
        raise ValueError("incomparable weights")
    return _chi(lam, rho)


def _chi(lam: Partition, rho: CycleType) -> int:
    if not rho:
        return 1
    key = (lam, rho)
    cached = _chi_cache.get(key)
    if cached is not None:
        return cached
    r, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    present = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((nb if j == i else c for j, c in enumerate(beta)), reverse=True)
        new_lam = tuple(
            c - (ell - 1 - j) for j, c in enumerate(new_beta) if c - (ell - 1 - j) > 0
        )
        total += (-1) ** height * _chi(new_lam, rest)
    _chi_cache[key] = total
    return total


def dimension(lam: Partition) -> int:
    """Degree of the irreducible character, by the hook-length formula."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    hooks = prod(
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return factorial(weight(lam)) // hooks


def canonical_permutation(rho: CycleType) -> tuple[int, ...]:
    """A permutation of 0..N-1 with cycle type ``rho``, cycles consecutive."""
    n = weight(rho)
    g = list(range(n))
    start = 0
    for length in rho:
        for k in range(length):
            g[start + k] = start + (k + 1) % length
        start += length
    return tuple(g)


def typed_set_partitions(mu: Partition) -> Iterator[tuple[int, ...]]:
    """Every set partition of {0, ..., N-1} with block sizes ``mu``.

    Partitions are encoded as canonical label vectors: position p holds the
    block label of point p, labels numbered by first appearance.  Blocks are
    built by anchoring each on its smallest unassigned point, so every typed
    partition appears exactly once.
    """
    mu = as_partition(mu)
    n = weight(mu)
    labels = [-1] * n

    def fill(remaining: tuple[int, ...], free: tuple[int, ...], label: int):
        if not free:
            yield tuple(labels)
            return
        anchor = free[0]
        seen_sizes = set()
        for idx, size in enumerate(remaining):
            if size in seen_sizes:
                continue
            seen_sizes.add(size)
            rest_sizes = remaining[:idx] + remaining[idx + 1:]
            for others in combinations(free[1:], size - 1):
                labels[anchor] = label
                for p in others:
                    labels[p] = label
                chosen = {anchor, *others}
                yield from fill(
                    rest_sizes,
                    tuple(p for p in free if p not in chosen),
                    label + 1,
                )
        labels[anchor] = -1

    yield from fill(mu, tuple(range(n)), 0)


def _is_fixed(labels: tuple[int, ...], g: tuple[int, ...], scratch: list[int]) -> bool:
    n = len(labels)
    for p in range(n):
        scratch[g[p]] = labels[p]
    relabel: dict[int, int] = {}
    for p in range(n):
        v = scratch[p]
        c = relabel.get(v)
        if c is None:
            c = len(relabel)
            relabel[v] = c
        if c != labels[p]:
            return False
    return True


def _naive_foulkes(mu: Partition, rho: CycleType) -> int:
    g = canonical_permutation(rho)
    scratch = [0] * weight(mu)
    return sum(1 for labels in typed_set_partitions(mu) if _is_fixed(labels, g, scratch))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _multiset_remove(ms: tuple[int, ...], value: int, count: int) -> tuple[int, ...]:
    out = list(ms)
    for _ in range(count):
        out.remove(value)
    return tuple(out)


@lru_cache(maxsize=None)
def _assembled_count(cycles: tuple[int, ...], blocks: tuple[int, ...]) -> int:
    """Invariant typed set partitions, by assembling block orbits.

    The first cycle is anchored into some orbit of d blocks of size s.  The
    orbit's support is a sub-multiset of cycles whose lengths d divides and
    whose total is d*s; each cycle of length l then meets the orbit's base
    block in one of d ways (a coset of the index-d subgroup), giving
    d^(group size - 1) distinct orbits after discounting the choice of base
    block.  Cycles of equal length are interchangeable, so sub-multisets
    carry binomial weights.
    """
    if not cycles:
        return 1 if not blocks else 0
    if not blocks:
        return 0
    anchor, rest = cycles[0], cycles[1:]
    counts: dict[int, int] = {}
    for length in rest:
        counts[length] = counts.get(length, 0) + 1
    lengths = sorted(counts)

    total = 0

    def choose_group(
        li: int, group_lengths: list[int], ways: int, remaining: tuple[int, ...]
    ) -> None:
        nonlocal total
        if li == len(lengths):
            group = [anchor] + group_lengths
            group_total = sum(group)
            for d in _divisors(group[0]):
                if any(l % d for l in group):
                    continue
                s = group_total // d
                if blocks.count(s) < d:
                    continue
                total += (
                    ways
                    * d ** (len(group) - 1)
                    * _assembled_count(remaining, _multiset_remove(blocks, s, d))
                )
            return
        length = lengths[li]
        avail = counts[length]
        for take in range(avail + 1):
            choose_group(
                li + 1,
                group_lengths + [length] * take,
                ways * comb(avail, take),
                _multiset_remove(remaining, length, take) if take else remaining,
            )

    choose_group(0, [], 1, rest)
    return total


def foulkes_value(
    mu: Partition,
    rho: CycleType,
    method: str = "assembled",
    guard: int | None = None,
) -> int:
    """Number of block partitions of type ``mu`` fixed by a permutation of
    cycle type ``rho``; this is the permutation character value."""
    mu = as_partition(mu)
    rho = as_partition(rho)
    if weight(mu) != weight(rho):
        raise ValueError("incomparable weights")
    _check_degree(weight(mu), guard)
    if method == "assembled":
        return _assembled_count(rho, mu)
    if method == "naive":
        return _naive_foulkes(mu, rho)
    raise ValueError(f"unknown method {method!r}")


def inner_product(
    mu: Partition,
    lam: Partition,
    method: str = "assembled",
    guard: int | None = None,
) -> int:
    """Multiplicity of the irreducible labelled ``lam`` in the permutation
    character of type ``mu``; exact, non-negative."""
    mu = as_partition(mu)
    lam = as_partition(lam)
    if weight(mu) != weight(lam):
        raise ValueError("incomparable weights")
    n = weight(mu)
    _check_degree(n, guard)
    total = 0
    for rho in partitions_of(n, guard=None):
        total += class_size(rho) * foulkes_value(mu, rho, method, guard) * _chi(lam, rho)
    value, remainder = divmod(total, factorial(n))
    if remainder:
        raise ConsistencyError(
            f"character sum for mu={mu}, lam={lam} is not divisible by {n}!"
        )
    if value < 0:
        raise ConsistencyError(f"negative multiplicity for mu={mu}, lam={lam}")
    return value


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of every irreducible constituent of one permutation
    character; zero multiplicities are omitted."""

    mu: Partition
    mults: dict[Partition, int]

    @property
    def degree(self) -> int:
        return weight(self.mu)

    def to_json_obj(self) -> dict:
        return {
            "mu": list(self.mu),
            "constituents": [
                {"lambda": list(lam), "mult": self.mults[lam]}
                for lam in sorted(self.mults, reverse=True)
            ],
            "minimal": [
                list(lam) for lam in sorted(minimal_constituents(self), reverse=True)
            ],
        }


def decompose(
    mu: Partition, method: str = "assembled", guard: int | None = None
) -> Decomposition:
    """Full decomposition of the permutation character of type ``mu``.

    The total dimension of the constituents must equal the number of typed
    set partitions (the value at the identity); a mismatch is an internal
    error.
    """
    mu = as_partition(mu)
    n = weight(mu)
    _check_degree(n, guard)
    mults: dict[Partition, int] = {}
    for lam in partitions_of(n, guard=None):
        m = inner_product(mu, lam, method, guard)
        if m:
            mults[lam] = m
    total_dim = sum(m * dimension(lam) for lam, m in mults.items())
    identity_value = foulkes_value(mu, (1,) * n, method, guard)
    if total_dim != identity_value:
        raise ConsistencyError(
            f"dimension check failed for mu={mu}: {total_dim} != {identity_value}"
        )
    return Decomposition(mu=mu, mults=mults)


def minimal_constituents(dec: Decomposition) -> set[Partition]:
    """Constituent labels with no strictly dominated constituent below them."""
    labels = list(dec.mults)
    return {
        lam
        for lam in labels
        if not any(strictly_dominates(lam, other) for other in labels)
    }
