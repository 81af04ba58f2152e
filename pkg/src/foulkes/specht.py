"""Symbolic Specht-module machinery.

Work happens over the indexed alphabet of a partition ``lam``: the symbol
(i, j) exists for each column i with 1 <= j <= conjugate(lam)[i-1].  The
canonical tableau places column i's symbols top to bottom, so its column
group is the direct product of the index permutations of each column.

A set family with a well-defined type lifts to an *indexed set partition*
(each element occurrence receives the smallest unused index for its value);
the signed column-group sum of that basis element is the image of the
canonical polytabloid under the family's homomorphism.  ``garnir_check``
verifies the relations that make such a map well defined, and
``supports_disjoint`` checks the independence of several images.

Formal sums export as JSON lists of
``{"coeff": c, "blocks": [[["1", 1], ["2", 1], ["3", 1]], ...]}`` ordered by
canonical basis key.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

from .errors import GuardError
from .families import SetFamily, family_type, is_closed
from .partitions import Partition, conjugate

Symbol = tuple[int, int]  # (number, index)
Block = tuple[Symbol, ...]
IndexedSetPartition = tuple[Block, ...]

# Ceiling on the column-group order (product of column factorials) and on
# the symmetric-group sums formed during the Garnir check.
GROUP_GUARD = 10**6


def alphabet(lam: Partition) -> list[Symbol]:
    """All symbols of ``lam`` in (number, index) lexicographic order."""
    conj = conjugate(lam)
    return [(i, j) for i in range(1, len(conj) + 1) for j in range(1, conj[i - 1] + 1)]


def canonical(blocks: Iterable) -> IndexedSetPartition:
    """Canonical form: symbols sorted within blocks, blocks sorted."""
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def indexed_partition(f: SetFamily) -> IndexedSetPartition:
    """Lift a family to its indexed set partition.

    The sets are taken in lexicographic order and each occurrence of an
    element receives the smallest index not used by earlier sets, so the
    r-th set containing e yields the symbol (e, r).
    """
    family_type(f)  # raises "no well-defined type" on degenerate input
    next_index: dict[int, int] = {}
    blocks = []
    for s in f.sets:
        block = []
        for e in s:
            j = next_index.get(e, 0) + 1
            next_index[e] = j
            block.append((e, j))
        blocks.append(tuple(block))
    return canonical(blocks)


def strip_indices(u: IndexedSetPartition) -> tuple[tuple[int, ...], ...]:
    """Forget indices: the multiset of number-tuples of the blocks.

    The result is the member list of a genuine set family iff the blocks
    have pairwise distinct number sets and no block repeats a number.
    """
    return tuple(sorted(tuple(sorted(sym[0] for sym in b)) for b in u))


def strip_to_family(u: IndexedSetPartition) -> SetFamily | None:
    """The family ``u`` strips to, or None if the strip is degenerate."""
    stripped = strip_indices(u)
    for b in stripped:
        if len(set(b)) != len(b):
            return None
    if len(set(stripped)) != len(stripped):
        return None
    return SetFamily(len(stripped[0]), stripped)


def _perm_sign(images: Sequence) -> int:
    sign = 1
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] > images[j]:
                sign = -sign
    return sign


def column_group_order(lam: Partition) -> int:
    return prod(factorial(h) for h in conjugate(lam))


def column_group(
    lam: Partition, guard: int | None = GROUP_GUARD
) -> Iterator[tuple[tuple[tuple[int, ...], ...], int]]:
    """Iterate the column group of the canonical tableau with signs.

    Each element is given as one index permutation per column:
    ``cols[i-1][j-1]`` is the image of index j in column i.  The order is
    the lexicographic product order and is deterministic.
    """
    conj = conjugate(lam)
    order = column_group_order(lam)
    if guard is not None and order > guard:
        raise GuardError(
            f"column group order {order} exceeds guard {guard}"
        )
    per_column = [
        [(p, _perm_sign(p)) for p in permutations(range(1, h + 1))] for h in conj
    ]
    for choice in product(*per_column):
        sign = 1
        cols = []
        for p, s in choice:
            sign *= s
            cols.append(p)
        yield tuple(cols), sign


def apply_column_perm(
    u: IndexedSetPartition, cols: tuple[tuple[int, ...], ...]
) -> IndexedSetPartition:
    """Act on ``u`` by a column-group element (indices move, numbers stay)."""
    return canonical(
        tuple((num, cols[num - 1][idx - 1]) for num, idx in b) for b in u
    )


class FormalSum:
    """Integer combination of indexed set partitions, zero terms dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[IndexedSetPartition, int] | None = None):
        self._terms = {k: c for k, c in (terms or {}).items() if c != 0}

    def coeff(self, key: IndexedSetPartition) -> int:
        return self._terms.get(key, 0)

    def items(self) -> list[tuple[IndexedSetPartition, int]]:
        return sorted(self._terms.items())

    def support(self) -> tuple[IndexedSetPartition, ...]:
        return tuple(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __repr__(self) -> str:
        return f"FormalSum({len(self._terms)} terms)"

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "coeff": c,
                "blocks": [[[str(num), idx] for num, idx in b] for b in key],
            }
            for key, c in self.items()
        ]


def _signed_column_sum(
    u: IndexedSetPartition, lam: Partition, guard: int | None
) -> FormalSum:
    acc: dict[IndexedSetPartition, int] = {}
    for cols, sign in column_group(lam, guard=guard):
        key = apply_column_perm(u, cols)
        acc[key] = acc.get(key, 0) + sign
    return FormalSum(acc)


def hom_image(
    f: SetFamily, force: bool = False, guard: int | None = GROUP_GUARD
) -> FormalSum:
    """Image of the canonical polytabloid under the family's homomorphism.

    Requires a closed family: the map is only known to be well defined
    there.  Pass ``force=True`` to compute the signed column sum for a
    non-closed family anyway (the result is then unverified).
    """
    if not force and not is_closed(f):
        raise ValueError(
            "family is not closed; the homomorphism is unverified (use force=True)"
        )
    lam = family_type(f)
    return _signed_column_sum(indexed_partition(f), lam, guard)


class GarnirResult(NamedTuple):
    ok: bool
    # On failure: (column i, X symbols, Y symbols) of the broken relation.
    failure: tuple[int, tuple[Symbol, ...], tuple[Symbol, ...]] | None

    def __bool__(self) -> bool:
        return self.ok


def garnir_check(
    f: SetFamily, guard: int | None = GROUP_GUARD
) -> GarnirResult:
    """Verify the straightening relations for the family's image.

    For every adjacent column pair (i, i+1) and all X, Y drawn from those
    columns with |X| + |Y| = conj[i-1] + 1, the signed sum over the
    symmetric group on X union Y must annihilate the image.  Only these
    minimal pairs are checked; larger pairs contain a minimal one and
    follow from it by the usual coset argument.  The number of sets is odd
    by hypothesis.
    """
    if f.m % 2 == 0:
        raise ValueError("the check applies to families of odd-size sets only")
    lam = family_type(f)
    conj = conjugate(lam)
    w = _signed_column_sum(indexed_partition(f), lam, guard)
    terms = w.items()
    for i in range(1, len(conj)):
        hi, lo = conj[i - 1], conj[i]
        size = hi + 1
        if guard is not None and factorial(size) > guard:
            raise GuardError(
                f"symmetric-group sum of size {size}! exceeds guard {guard}"
            )
        col_i = [(i, j) for j in range(1, hi + 1)]
        col_next = [(i + 1, j) for j in range(1, lo + 1)]
        for nx in range(max(1, size - lo), hi + 1):
            for xs in combinations(col_i, nx):
                for ys in combinations(col_next, size - nx):
                    if not _garnir_pair_vanishes(terms, xs, ys):
                        return GarnirResult(False, (i, xs, ys))
    return GarnirResult(True, None)


def _garnir_pair_vanishes(
    terms: list[tuple[IndexedSetPartition, int]],
    xs: tuple[Symbol, ...],
    ys: tuple[Symbol, ...],
) -> bool:
    xset, yset = set(xs), set(ys)
    union = sorted(xset | yset)
    sigmas = [
        (dict(zip(union, images)), _perm_sign([union.index(s) for s in images]))
        for images in permutations(union)
    ]
    acc: dict[IndexedSetPartition, int] = {}
    for key, c in terms:
        # A block meeting both X and Y makes the term's whole signed orbit
        # cancel in transposition pairs; skip it.
        if any(xset & set(b) and yset & set(b) for b in key):
            continue
        for mapping, sign in sigmas:
            image = canonical(
                tuple(mapping.get(s, s) for s in b) for b in key
            )
            new = acc.get(image, 0) + c * sign
            if new:
                acc[image] = new
            else:
                acc.pop(image, None)
    return not acc


def supports_disjoint(fs: Sequence[SetFamily], guard: int | None = GROUP_GUARD) -> bool:
    """True iff the images of several same-type closed families never share
    a basis element (which makes the homomorphisms integrally independent)."""
    if not fs:
        raise ValueError("need at least one family")
    types = {family_type(f) for f in fs}
    if len(types) > 1:
        raise ValueError("mixed types")
    for f in fs:
        if not is_closed(f):
            raise ValueError("families must be closed")
    seen: set[IndexedSetPartition] = set()
    for f in fs:
        sup = set(hom_image(f, guard=guard).support())
        if seen & sup:
            return False
        seen |= sup
    return True
