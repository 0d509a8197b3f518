"""Alternating sums over chain complexes and the identity verification suite.

Sums are valued in the free abelian group on parabolic types: each chain
contributes ``(-1)^length`` times the basis vector of its stabilizer type.
Any conjugation-invariant assignment of abelian-group values to parabolic
types factors through this universal one, so equality of these vectors
verifies the corresponding identity for every choice of values at once.

All arithmetic is exact (Python integers), so verdicts carry no tolerance.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from threading import Lock
from typing import Iterable, Mapping, Optional

from .chains import (
    ChainLimitExceeded,
    ComplexKind,
    chain_stabilizer_type,
    cp_to_cr,
    cr_to_cp,
    enumerate_chains,
    family_successors,
    iter_index_chains,
    parabolic_subsets,
    subset_successors,
    _family_ids,
    _precheck_limit,
)
from .ideals import IdealLattice, ParabolicType, ideal_lattice, normalizer_type
from .pairings import pair_nonabelian_ids, pair_nonradical_ids
from .root_system import RootSystem

DEFAULT_MAX_CHAINS = 10**8


class SumVector:
    """A finitely supported integer vector indexed by parabolic types."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Optional[Mapping[ParabolicType, int]] = None) -> None:
        self._entries = {
            frozenset(j): c for j, c in (entries or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "SumVector":
        return cls()

    def coefficient(self, subset: Iterable[int]) -> int:
        return self._entries.get(frozenset(subset), 0)

    def entries(self) -> dict[ParabolicType, int]:
        return dict(self._entries)

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SumVector):
            return NotImplemented
        return self._entries == other._entries

    def __add__(self, other: "SumVector") -> "SumVector":
        out = dict(self._entries)
        for j, c in other._entries.items():
            out[j] = out.get(j, 0) + c
        return SumVector(out)

    def __sub__(self, other: "SumVector") -> "SumVector":
        out = dict(self._entries)
        for j, c in other._entries.items():
            out[j] = out.get(j, 0) - c
        return SumVector(out)

    def to_pairs(self) -> list[tuple[list[int], int]]:
        """Entries as (sorted simple-index list, coefficient), canonically ordered."""
        keyed = sorted(self._entries.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        return [(sorted(j), c) for j, c in keyed]

    def __repr__(self) -> str:
        body = ", ".join(f"{{{','.join(map(str, j))}}}: {c:+d}" for j, c in self.to_pairs())
        return f"SumVector({body})"


@dataclass
class ComplexSummary:
    """Chain counts and the alternating sum of one complex."""

    kind: ComplexKind
    total: int
    by_length: dict[int, int]
    sum: SumVector


@dataclass
class VerificationReport:
    """Everything checked for one root system, with exact verdicts."""

    family: str
    rank: int
    complexes: dict[str, ComplexSummary]
    closed_form: SumVector
    verdicts: dict[str, bool]
    involution_checks: dict[str, int]
    elapsed_ms: float
    notes: str

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "type": self.family,
            "rank": self.rank,
            "complexes": [
                {
                    "complex": name,
                    "chain_counts": {
                        "total": summary.total,
                        "by_length": [
                            [length, count]
                            for length, count in sorted(summary.by_length.items())
                        ],
                    },
                    "sum": [[js, c] for js, c in summary.sum.to_pairs()],
                }
                for name, summary in self.complexes.items()
            ],
            "closed_form": [[js, c] for js, c in self.closed_form.to_pairs()],
            "verdicts": dict(self.verdicts),
            "involution_checks": dict(self.involution_checks),
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
        }


class _Accumulator:
    """Signed counts per stabilizer bitmask plus a length histogram."""

    __slots__ = ("sums", "by_length", "total")

    def __init__(self) -> None:
        self.sums: dict[int, int] = {}
        self.by_length: dict[int, int] = {}
        self.total = 0

    def add(self, stab_bits: int, length: int) -> None:
        sign = -1 if length % 2 else 1
        self.sums[stab_bits] = self.sums.get(stab_bits, 0) + sign
        self.by_length[length] = self.by_length.get(length, 0) + 1
        self.total += 1

    def merge(self, other: "_Accumulator") -> None:
        for k, v in other.sums.items():
            self.sums[k] = self.sums.get(k, 0) + v
        for k, v in other.by_length.items():
            self.by_length[k] = self.by_length.get(k, 0) + v
        self.total += other.total

    def to_sum_vector(self, rank: int) -> SumVector:
        return SumVector(
            {
                frozenset(i + 1 for i in range(rank) if (bits >> i) & 1): c
                for bits, c in self.sums.items()
            }
        )


class _SharedCounter:
    """Chain counter shared across fold workers; checks a cap in batches."""

    def __init__(self, limit: Optional[int]) -> None:
        self.limit = limit
        self.count = 0
        self._lock = Lock()

    def add(self, n: int) -> None:
        if self.limit is None:
            return
        with self._lock:
            self.count += n
            if self.count > self.limit:
                raise ChainLimitExceeded(self.limit, self.count)


def _fold_branch(
    start: int,
    succ: tuple[tuple[int, ...], ...],
    norm_bits: tuple[int, ...],
    full_bits: int,
    counter: _SharedCounter,
) -> _Accumulator:
    """Fold the subtree of chains beginning at ``start``."""
    acc = _Accumulator()
    add = acc.add
    pending = 0

    def walk(last: int, stab: int, depth: int) -> None:
        nonlocal pending
        add(stab, depth)
        pending += 1
        if pending >= 4096:
            counter.add(pending)
            pending = 0
        for nxt in succ[last]:
            walk(nxt, stab & norm_bits[nxt], depth + 1)

    walk(start, full_bits & norm_bits[start], 1)
    counter.add(pending)
    return acc


def _fold_family(
    ids: tuple[int, ...],
    succ: tuple[tuple[int, ...], ...],
    norm_bits: tuple[int, ...],
    full_bits: int,
    max_chains: Optional[int],
    threads: int,
) -> _Accumulator:
    _precheck_limit(ids, succ, max_chains)
    counter = _SharedCounter(max_chains)
    total = _Accumulator()
    total.add(full_bits, 0)  # the empty chain, stabilized by everything
    counter.add(1)
    if threads > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            branches = pool.map(
                lambda s: _fold_branch(s, succ, norm_bits, full_bits, counter), ids
            )
            for acc in branches:
                total.merge(acc)
    else:
        for start in ids:
            total.merge(_fold_branch(start, succ, norm_bits, full_bits, counter))
    return total


def _fold_ideal_complex(
    lat: IdealLattice,
    kind: ComplexKind,
    max_chains: Optional[int],
    threads: int,
) -> _Accumulator:
    ids = _family_ids(lat, kind)
    succ = family_successors(lat, ids)
    return _fold_family(
        ids, succ, lat.normalizer_bits, lat.full_simple_bits, max_chains, threads
    )


def _fold_parabolic_complex(rank: int, max_chains: Optional[int]) -> _Accumulator:
    subsets = parabolic_subsets(rank)
    norm_bits = tuple(sum(1 << (i - 1) for i in j) for j in subsets)
    succ = subset_successors(rank)
    ids = tuple(range(len(subsets)))
    acc = _Accumulator()
    acc.add((1 << rank) - 1, 0)
    emitted = 1
    for id_chain in iter_index_chains(ids, succ):
        if not id_chain:
            continue
        # The stabilizer of a parabolic chain is its smallest member.
        acc.add(norm_bits[id_chain[0]], len(id_chain))
        emitted += 1
        if max_chains is not None and emitted > max_chains:
            raise ChainLimitExceeded(max_chains, emitted)
    return acc


def alternating_sum(
    rs: RootSystem,
    kind: ComplexKind,
    *,
    max_chains: Optional[int] = None,
    threads: int = 1,
) -> SumVector:
    """Sum of ``(-1)^length * e(stabilizer type)`` over every chain of a complex."""
    if kind is ComplexKind.CP:
        return _fold_parabolic_complex(rs.rank, max_chains).to_sum_vector(rs.rank)
    lat = ideal_lattice(rs)
    return _fold_ideal_complex(lat, kind, max_chains, threads).to_sum_vector(rs.rank)


def closed_form_sum(rs: RootSystem) -> SumVector:
    """Sum of ``(-1)^corank(I) * e(I)`` over all subsets I of the simple indices."""
    rank = rs.rank
    entries: dict[ParabolicType, int] = {}
    for bits in range(1 << rank):
        subset = frozenset(i + 1 for i in range(rank) if (bits >> i) & 1)
        entries[subset] = -1 if (rank - len(subset)) % 2 else 1
    return SumVector(entries)


def boolean_interval_check(rs: RootSystem) -> bool:
    """Check the per-type refinement of the closed form over parabolic chains.

    For every proper subset I of the simple indices, the signed count of
    parabolic chains with smallest member I must equal ``(-1)^corank(I)``;
    the empty chain contributes ``+1`` at the full set.  Buckets are formed
    directly on smallest members, independently of stabilizer computations.
    """
    rank = rs.rank
    subsets = parabolic_subsets(rank)
    succ = subset_successors(rank)
    buckets: dict[int, int] = {}
    for id_chain in iter_index_chains(tuple(range(len(subsets))), succ):
        if not id_chain:
            continue
        first = id_chain[0]
        buckets[first] = buckets.get(first, 0) + (-1 if len(id_chain) % 2 else 1)
    for i, subset in enumerate(subsets):
        expected = -1 if (rank - len(subset)) % 2 else 1
        if buckets.get(i, 0) != expected:
            return False
    return True


@dataclass
class _InvolutionStats:
    checked: int = 0
    failed: int = 0
    complement_sum: _Accumulator = field(default_factory=_Accumulator)


def _check_involutions(
    lat: IdealLattice, max_chains: Optional[int]
) -> tuple[_InvolutionStats, _InvolutionStats]:
    """Walk every CI chain once; test both pairings on their domains.

    For each chain in a pairing's domain the laws verified are: the partner
    stays in the domain, has length one off, preserves the stabilizer type
    (and the top member, for the nonabelian pairing), and pairs back to the
    original chain.
    """
    nonab = _InvolutionStats()
    nonrad = _InvolutionStats()
    abelian = lat.abelian
    radical = lat.radical
    norm_bits = lat.normalizer_bits
    full = lat.full_simple_bits
    ids = lat.nonzero_ids
    succ = family_successors(lat, ids)

    def stab(chain: tuple[int, ...]) -> int:
        bits = full
        for i in chain:
            bits &= norm_bits[i]
        return bits

    for chain in iter_index_chains(ids, succ, max_chains):
        if not chain:
            continue
        if not abelian[chain[-1]]:
            partner = pair_nonabelian_ids(lat, chain)
            nonab.checked += 1
            ok = (
                abs(len(partner) - len(chain)) == 1
                and partner[-1] == chain[-1]
                and not abelian[partner[-1]]
                and stab(partner) == stab(chain)
                and pair_nonabelian_ids(lat, partner) == chain
            )
            if not ok:
                nonab.failed += 1
            nonab.complement_sum.add(stab(chain), len(chain))
        if not all(radical[i] for i in chain):
            partner = pair_nonradical_ids(lat, chain)
            nonrad.checked += 1
            ok = (
                abs(len(partner) - len(chain)) == 1
                and not all(radical[i] for i in partner)
                and stab(partner) == stab(chain)
                and pair_nonradical_ids(lat, partner) == chain
            )
            if not ok:
                nonrad.failed += 1
            nonrad.complement_sum.add(stab(chain), len(chain))
    return nonab, nonrad


def _check_cr_cp_bijection(rs: RootSystem) -> bool:
    """Round-trip, length, stabilizer, and order reversal on all CR and CP chains."""
    for chain in enumerate_chains(rs, ComplexKind.CR):
        image = cr_to_cp(chain)
        if cp_to_cr(image) != chain:
            return False
        if image.length != chain.length:
            return False
        if chain_stabilizer_type(image) != chain_stabilizer_type(chain):
            return False
        expected = tuple(normalizer_type(n) for n in reversed(chain.members))
        if image.members != expected:
            return False
    for pchain in enumerate_chains(rs, ComplexKind.CP):
        back = cp_to_cr(pchain)
        if cr_to_cp(back) != pchain or back.length != pchain.length:
            return False
        if chain_stabilizer_type(back) != chain_stabilizer_type(pchain):
            return False
    return True


def verify(
    rs: RootSystem,
    *,
    max_chains: Optional[int] = DEFAULT_MAX_CHAINS,
    threads: int = 1,
) -> VerificationReport:
    """Run the full identity suite for one root system.

    Computes the alternating sums of CI, CA, CR, and CP, compares each with
    the closed-form sum over subsets of simple indices, checks both pairing
    involutions over their whole domains, the CR/CP correspondence, and the
    boolean-interval refinement.  Failures are recorded in the report, never
    raised.
    """
    start = time.perf_counter()
    lat = ideal_lattice(rs)
    rank = rs.rank
    folds = {
        ComplexKind.CI: _fold_ideal_complex(lat, ComplexKind.CI, max_chains, threads),
        ComplexKind.CA: _fold_ideal_complex(lat, ComplexKind.CA, max_chains, threads),
        ComplexKind.CR: _fold_ideal_complex(lat, ComplexKind.CR, max_chains, threads),
        ComplexKind.CP: _fold_parabolic_complex(rank, max_chains),
    }
    sums = {kind: acc.to_sum_vector(rank) for kind, acc in folds.items()}
    closed = closed_form_sum(rs)
    nonab, nonrad = _check_involutions(lat, max_chains)
    nonab_complement = nonab.complement_sum.to_sum_vector(rank)
    nonrad_complement = nonrad.complement_sum.to_sum_vector(rank)
    nonab_cancels = (
        nonab_complement.is_zero
        and sums[ComplexKind.CI] - sums[ComplexKind.CA] == nonab_complement
    )
    nonrad_cancels = (
        nonrad_complement.is_zero
        and sums[ComplexKind.CI] - sums[ComplexKind.CR] == nonrad_complement
    )
    verdicts = {
        "sum_ci_matches_closed_form": sums[ComplexKind.CI] == closed,
        "sum_ca_matches_closed_form": sums[ComplexKind.CA] == closed,
        "sum_cr_matches_closed_form": sums[ComplexKind.CR] == closed,
        "sum_cp_matches_closed_form": sums[ComplexKind.CP] == closed,
        "nonabelian_involution": nonab.failed == 0,
        "nonradical_involution": nonrad.failed == 0,
        "nonabelian_complement_cancels": nonab_cancels,
        "nonradical_complement_cancels": nonrad_cancels,
        "cr_cp_bijection": _check_cr_cp_bijection(rs),
        "boolean_interval": boolean_interval_check(rs),
    }
    verdicts["five_way_identity"] = (
        verdicts["sum_ci_matches_closed_form"]
        and verdicts["sum_ca_matches_closed_form"]
        and verdicts["sum_cr_matches_closed_form"]
        and verdicts["sum_cp_matches_closed_form"]
    )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        family=rs.spec.family,
        rank=rank,
        complexes={
            kind.name: ComplexSummary(
                kind=kind,
                total=folds[kind].total,
                by_length=dict(folds[kind].by_length),
                sum=sums[kind],
            )
            for kind in (ComplexKind.CI, ComplexKind.CA, ComplexKind.CR, ComplexKind.CP)
        },
        closed_form=closed,
        verdicts=verdicts,
        involution_checks={
            "nonabelian": nonab.checked,
            "nonradical": nonrad.checked,
        },
        elapsed_ms=elapsed_ms,
        notes=(
            "All chains are taken with respect to one fixed Borel subalgebra; "
            "conjugacy classes of CI/CA chains under the full group are not "
            "enumerated, so those two sums are chain-level, not class-level. "
            "CR and CP members have unique standard representatives, so their "
            "sums agree with the class-level ones."
        ),
    )
