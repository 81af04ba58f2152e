"""Set families of fixed shape: n distinct m-subsets.

A family is *closed* when it is downward closed in the majorization order.
The membership counts of a closed family are weakly decreasing, and their
conjugate partition is the family's *type*.  This module provides the
closedness test, the type computation, the move-based closure procedure,
enumeration of all closed families of a shape (order ideals), enumeration
of all families of a prescribed type, and the extraction of the
dominance-minimal types with their multiplicities.

File format (JSON): ``{"m": 3, "n": 4, "sets": [[1,2,3], [1,2,4], ...]}``.
Report format: ``{"type": [5,4,2,1], "conj_type": [4,3,2,2,1], "closed": true}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ConsistencyError, GuardError
from .partitions import (
    Composition,
    Partition,
    as_composition,
    conjugate,
    strictly_dominates,
    weight,
)
from .subsets import MSubset, as_msubset, downset_sets, level, lower_covers

# Largest m*n enumerate_closed accepts by default; beyond this the search is
# a batch job, not something to run inside a test or a quick CLI call.
ENUM_GUARD = 36


@dataclass(frozen=True)
class SetFamily:
    """A canonical (sorted) collection of n distinct m-subsets."""

    m: int
    sets: tuple[MSubset, ...]

    def __post_init__(self) -> None:
        sets = tuple(sorted(as_msubset(s) for s in self.sets))
        if not sets:
            raise ValueError("a set family must contain at least one set")
        for s in sets:
            if len(s) != self.m:
                raise ValueError(f"every set must have {self.m} elements: {s}")
        if len(set(sets)) != len(sets):
            raise ValueError("sets must be distinct")
        object.__setattr__(self, "sets", sets)

    @property
    def n(self) -> int:
        return len(self.sets)

    def __contains__(self, s: MSubset) -> bool:
        return s in set(self.sets)

    def __iter__(self):
        return iter(self.sets)


@dataclass(frozen=True)
class TypedFamilyReport:
    """Type information for a family; ``type`` is None when undefined."""

    family: SetFamily
    conj_type: Composition
    type: Partition | None
    closed: bool


def family_to_json(f: SetFamily) -> dict:
    return {"m": f.m, "n": f.n, "sets": [list(s) for s in f.sets]}


def family_from_json(obj: Mapping) -> SetFamily:
    try:
        m = int(obj["m"])
        sets = tuple(tuple(int(e) for e in s) for s in obj["sets"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed family object: {exc}") from exc
    f = SetFamily(m, sets)
    if "n" in obj and int(obj["n"]) != f.n:
        raise ValueError(f"declared n={obj['n']} but {f.n} sets given")
    return f


def downset(a: Sequence[int]) -> SetFamily:
    """The family of all subsets majorized by ``a``."""
    a = as_msubset(a)
    return SetFamily(len(a), downset_sets(a))


def downset_union(generators: Iterable[Sequence[int]]) -> SetFamily:
    """Union of the downsets of several generators (a closed family)."""
    gens = [as_msubset(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    m = len(gens[0])
    sets: set[MSubset] = set()
    for g in gens:
        if len(g) != m:
            raise ValueError("generators must have equal cardinality")
        sets.update(downset_sets(g))
    return SetFamily(m, tuple(sets))


def conj_type(f: SetFamily) -> Composition:
    """Entry i counts the member sets containing i, up to the largest element."""
    top = max(s[-1] for s in f.sets)
    counts = [0] * top
    for s in f.sets:
        for e in s:
            counts[e - 1] += 1
    return as_composition(counts)


def family_type(f: SetFamily) -> Partition:
    """The conjugate of the membership counts; defined iff those decrease."""
    ct = conj_type(f)
    if any(ct[i] < ct[i + 1] for i in range(len(ct) - 1)):
        raise ValueError("no well-defined type")
    return conjugate(ct)


def report(f: SetFamily) -> TypedFamilyReport:
    ct = conj_type(f)
    decreasing = all(ct[i] >= ct[i + 1] for i in range(len(ct) - 1))
    return TypedFamilyReport(
        family=f,
        conj_type=ct,
        type=conjugate(ct) if decreasing else None,
        closed=is_closed(f),
    )


def is_closed(f: SetFamily) -> bool:
    """True iff every lower cover of every member set is also a member.

    Equivalent to full downward closure, since majorization relations are
    chains of covers.
    """
    members = set(f.sets)
    return all(c in members for s in f.sets for c in lower_covers(s))


def close(f: SetFamily) -> SetFamily:
    """Repair ``f`` into a closed family of the same shape.

    Scans members in lexicographic order and replaces the first set A
    containing some element i+1 whose decrement B = A - {i+1} + {i} is a
    valid subset missing from the family; repeats until no move applies.
    Each move strictly raises the membership-count partial sums, so the
    procedure terminates; the output type (when the input had one) is
    strictly smaller in dominance unless the input was already closed.
    """
    sets = set(f.sets)
    while True:
        move = None
        for a in sorted(sets):
            for b in lower_covers(a):
                if b not in sets:
                    move = (a, b)
                    break
            if move:
                break
        if move is None:
            return SetFamily(f.m, tuple(sets))
        sets.remove(move[0])
        sets.add(move[1])


def enumerate_closed(
    m: int, n: int, guard: int | None = ENUM_GUARD
) -> list[SetFamily]:
    """All closed families of n distinct m-subsets, sorted.

    These are exactly the order ideals of cardinality n in the majorization
    poset.  Any member of such an ideal has level at most n-1 (its own
    downset already holds level+1 sets), hence entries at most m+n-1, so the
    candidate universe is finite.  The DFS adds sets in lexicographic order
    and only when all lower covers are already present, which generates each
    ideal exactly once because lexicographic order refines majorization.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if guard is not None and m * n > guard:
        raise GuardError(
            f"m*n = {m * n} exceeds enumeration guard {guard}; "
            "pass guard=None (CLI: --enum-guard 0) to run as a batch job"
        )
    max_entry = m + n - 1
    candidates = [
        x
        for x in combinations(range(1, max_entry + 1), m)
        if level(x) <= n - 1
    ]
    covers = [lower_covers(x) for x in candidates]

    results: list[SetFamily] = []
    chosen: list[MSubset] = []
    chosen_set: set[MSubset] = set()

    def dfs(start: int) -> None:
        if len(chosen) == n:
            results.append(SetFamily(m, tuple(chosen)))
            return
        if len(candidates) - start < n - len(chosen):
            return
        for idx in range(start, len(candidates)):
            if all(c in chosen_set for c in covers[idx]):
                x = candidates[idx]
                chosen.append(x)
                chosen_set.add(x)
                dfs(idx + 1)
                chosen.pop()
                chosen_set.remove(x)

    dfs(0)
    results.sort(key=lambda fam: fam.sets)
    return results


def enumerate_of_type(m: int, n: int, t: Sequence[int]) -> list[SetFamily]:
    """All families (closed or not) of n distinct m-subsets with type ``t``.

    Backtracks over candidate sets in lexicographic order, maintaining the
    remaining membership count for each element.  Every element of such a
    family appears in at least one set, so entries are bounded by the number
    of counts, i.e. by t[0].
    """
    from .partitions import as_partition

    t = as_partition(t)
    if weight(t) != m * n:
        raise ValueError(f"type must be a partition of m*n = {m * n}")
    counts = list(conjugate(t))
    top = len(counts)  # == t[0]
    if top < m:
        return []
    candidates = list(combinations(range(1, top + 1), m))

    results: list[SetFamily] = []
    chosen: list[MSubset] = []

    def dfs(start: int, slots: int) -> None:
        if slots == 0:
            if all(c == 0 for c in counts):
                results.append(SetFamily(m, tuple(chosen)))
            return
        if any(c > slots for c in counts):
            return
        for idx in range(start, len(candidates)):
            x = candidates[idx]
            if all(counts[e - 1] > 0 for e in x):
                for e in x:
                    counts[e - 1] -= 1
                chosen.append(x)
                dfs(idx + 1, slots - 1)
                chosen.pop()
                for e in x:
                    counts[e - 1] += 1

    dfs(0, n)
    results.sort(key=lambda fam: fam.sets)
    return results


@dataclass(frozen=True)
class MinimalTypeInfo:
    """One minimal type: its multiplicity d and every family carrying it."""

    multiplicity: int
    families: tuple[SetFamily, ...]


def minimal_types(
    m: int, n: int, guard: int | None = ENUM_GUARD
) -> dict[Partition, MinimalTypeInfo]:
    """Dominance-minimal types of shape-(m^n) families, with multiplicities.

    A type is minimal iff it is dominance-minimal among the types of closed
    families: any family of strictly smaller type would close to a closed
    family of a type at least as small.  For each minimal type the
    multiplicity d counts all families of that type; every one of them must
    itself be closed, and a violation is reported as an internal
    inconsistency rather than a value.
    """
    closed = enumerate_closed(m, n, guard=guard)
    types = {family_type(f) for f in closed}
    minimal = [
        t
        for t in types
        if not any(strictly_dominates(t, other) for other in types)
    ]
    out: dict[Partition, MinimalTypeInfo] = {}
    for t in sorted(minimal, reverse=True):
        fams = enumerate_of_type(m, n, t)
        for fam in fams:
            if not is_closed(fam):
                raise ConsistencyError(
                    f"family of minimal type {t} is not closed: {fam.sets}"
                )
        same_type_closed = sorted(
            (f for f in closed if family_type(f) == t), key=lambda f: f.sets
        )
        if same_type_closed != fams:
            raise ConsistencyError(
                f"closed families of type {t} disagree with the type enumeration"
            )
        out[t] = MinimalTypeInfo(multiplicity=len(fams), families=tuple(fams))
    return out
