"""Minimal constituents of block-partition permutation characters with
mixed block sizes.

Such a character factors over the distinct part sizes of ``mu``: it is
induced from the product of the single-size characters.  Minimal
constituent labels of the product are part-unions of factor labels, so the
candidate set is the set of all unions of factor minimal labels, and the
true minimal labels are its dominance-minimal elements.  The union of
incomparable factor labels can still be comparable to another union, which
is why the dominance filter is mandatory.

Factor labels come from the set-family search when the part size is odd
and are the single rectangle label when it is even.  Labels only: the
factor multiplicities do not determine the product multiplicities, so the
oracle attaches those when the degree is within its guard.

Report (JSON): ``{"mu": [...], "factors": [{"m": 5, "n": 5,
"labels": [...]}, ...], "minimal": [[...]], "oracle_checked": true}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .characters import Decomposition, decompose, minimal_constituents
from .errors import ConsistencyError
from .families import ENUM_GUARD, minimal_types
from .partitions import Partition, as_partition, strictly_dominates, union_parts


def rect_decompose(mu: Partition) -> tuple[tuple[int, int], ...]:
    """Group equal parts: ((part size, multiplicity), ...), sizes descending."""
    mu = as_partition(mu)
    out: list[tuple[int, int]] = []
    for part in mu:
        if out and out[-1][0] == part:
            out[-1] = (part, out[-1][1] + 1)
        else:
            out.append((part, 1))
    return tuple(out)


def factor_minimal_labels(
    m: int, n: int, enum_guard: int | None = ENUM_GUARD
) -> tuple[Partition, ...]:
    """Minimal constituent labels of the single-size character for (m, n)."""
    if m % 2 == 0:
        return ((m,) * n,)
    return tuple(sorted(minimal_types(m, n, guard=enum_guard), reverse=True))


def candidate_unions(
    mu: Partition, enum_guard: int | None = ENUM_GUARD
) -> set[Partition]:
    """All unions of factor minimal labels, before dominance filtering."""
    factors = rect_decompose(mu)
    label_sets = [factor_minimal_labels(m, n, enum_guard) for m, n in factors]
    out: set[Partition] = set()
    for combo in product(*label_sets):
        lam: Partition = ()
        for piece in combo:
            lam = union_parts(lam, piece)
        out.add(lam)
    return out


def minimal_candidates(
    mu: Partition, enum_guard: int | None = ENUM_GUARD
) -> set[Partition]:
    """The minimal constituent labels of the character of type ``mu``."""
    cands = candidate_unions(mu, enum_guard)
    return {
        lam
        for lam in cands
        if not any(strictly_dominates(lam, other) for other in cands)
    }


@dataclass(frozen=True)
class GeneralizedReport:
    mu: Partition
    factors: tuple[tuple[int, int, tuple[Partition, ...]], ...]
    minimal: tuple[Partition, ...]
    oracle_checked: bool
    oracle_decomposition: Decomposition | None = None

    def to_json_obj(self) -> dict:
        obj = {
            "mu": list(self.mu),
            "factors": [
                {"m": m, "n": n, "labels": [list(l) for l in labels]}
                for m, n, labels in self.factors
            ],
            "minimal": [list(l) for l in self.minimal],
            "oracle_checked": self.oracle_checked,
        }
        if self.oracle_decomposition is not None:
            mults = self.oracle_decomposition.mults
            obj["oracle_multiplicities"] = [
                {"lambda": list(l), "mult": mults[l]} for l in self.minimal
            ]
        return obj


def build_report(
    mu: Partition,
    oracle: bool = False,
    enum_guard: int | None = ENUM_GUARD,
    guard: int | None = None,
) -> GeneralizedReport:
    """Candidate construction, optionally cross-checked against the oracle.

    With ``oracle=True`` the full decomposition is computed and its minimal
    constituents must match the filtered candidates exactly; a mismatch
    would mean the candidate derivation is wrong and raises.
    """
    mu = as_partition(mu)
    factors = tuple(
        (m, n, factor_minimal_labels(m, n, enum_guard))
        for m, n in rect_decompose(mu)
    )
    minimal = tuple(sorted(minimal_candidates(mu, enum_guard), reverse=True))
    dec = None
    if oracle:
        dec = decompose(mu, guard=guard)
        oracle_minimal = tuple(sorted(minimal_constituents(dec), reverse=True))
        if oracle_minimal != minimal:
            raise ConsistencyError(
                f"candidate minimal labels {minimal} disagree with the "
                f"oracle's {oracle_minimal} for mu={mu}"
            )
    return GeneralizedReport(
        mu=mu,
        factors=factors,
        minimal=minimal,
        oracle_checked=oracle,
        oracle_decomposition=dec,
    )


def verify_against_oracle(
    mu: Partition,
    enum_guard: int | None = ENUM_GUARD,
    guard: int | None = None,
) -> GeneralizedReport:
    return build_report(mu, oracle=True, enum_guard=enum_guard, guard=guard)
