"""Chains of ideals and of parabolic types, and their complexes.

Four simplicial complexes are enumerated over a fixed Borel subalgebra:

* ``CI``: chains of nonzero ideals,
* ``CA``: chains of nonzero abelian ideals,
* ``CR``: chains of nonzero ideals each equal to the nilradical of its
  normalizer parabolic,
* ``CP``: chains of proper subsets of the simple indices (standard proper
  parabolics; the full group is the implicit top and never a member).

Chains never store the zero ideal, so a chain's length is its member count
and the empty chain is the (-1)-simplex of every complex.  Enumeration is a
depth-first walk of the containment order emitting chains in lexicographic
order of member index sequences; it streams with constant memory per path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Union

from .ideals import (
    Ideal,
    IdealLattice,
    ParabolicType,
    _check_parabolic_type,
    full_parabolic_type,
    ideal_lattice,
    is_abelian,
    is_radical_member,
    nilradical_of_parabolic,
    normalizer_type,
)
from .root_system import RootSystem


class ComplexKind(enum.Enum):
    CI = "ci"
    CA = "ca"
    CR = "cr"
    CP = "cp"


class ChainLimitExceeded(RuntimeError):
    """Raised when an enumeration would emit more chains than allowed."""

    def __init__(self, limit: int, count: int) -> None:
        super().__init__(
            f"enumeration exceeds the chain guard: {count} > {limit} chains; "
            "raise --max-chains (or NILCHAIN_MAX_CHAINS) to proceed"
        )
        self.limit = limit
        self.count = count


@dataclass(frozen=True)
class Chain:
    """A strictly increasing sequence of nonzero ideals of one root system."""

    rs: RootSystem
    members: tuple[Ideal, ...]

    def __post_init__(self) -> None:
        for n in self.members:
            if n.rs.spec != self.rs.spec:
                raise ValueError(f"chain member from {n.rs.spec} in a {self.rs.spec} chain")
            if n.is_zero:
                raise ValueError("the zero ideal is never a chain member")
        for a, b in zip(self.members, self.members[1:]):
            if not a < b:
                raise ValueError(f"chain members must strictly increase: {a} !< {b}")

    @property
    def length(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sign(self) -> int:
        return -1 if len(self.members) % 2 else 1

    def __str__(self) -> str:
        return "[" + " < ".join(str(n) for n in self.members) + "]"


@dataclass(frozen=True)
class ParabolicChain:
    """A strictly increasing sequence of proper parabolic types."""

    rs: RootSystem
    members: tuple[ParabolicType, ...]

    def __post_init__(self) -> None:
        full = full_parabolic_type(self.rs)
        for j in self.members:
            _check_parabolic_type(self.rs, j)
            if j == full:
                raise ValueError("the full simple set is never a parabolic chain member")
        for a, b in zip(self.members, self.members[1:]):
            if not a < b:
                raise ValueError("parabolic chain members must strictly increase")

    @property
    def length(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sign(self) -> int:
        return -1 if len(self.members) % 2 else 1

    def __str__(self) -> str:
        return "[" + " < ".join("{" + ", ".join(map(str, sorted(j))) + "}" for j in self.members) + "]"


def corank(subset: ParabolicType, rs: RootSystem) -> int:
    """Number of simple indices missing from the parabolic type."""
    j = _check_parabolic_type(rs, subset)
    return rs.rank - len(j)


def membership(kind: ComplexKind, chain: Chain) -> bool:
    """Whether an ideal chain belongs to the given complex."""
    if kind is ComplexKind.CP:
        raise ValueError("membership in CP is for parabolic chains, not ideal chains")
    if kind is ComplexKind.CI:
        return True
    if kind is ComplexKind.CA:
        return all(is_abelian(n) for n in chain.members)
    return all(is_radical_member(n) for n in chain.members)


def chain_stabilizer_type(chain: Union[Chain, ParabolicChain]) -> ParabolicType:
    """Type of the parabolic stabilizing every member of the chain.

    For ideal chains this is the intersection of the members' normalizer
    types; for parabolic chains it is the smallest member.  The empty chain
    is stabilized by the full group in both cases.
    """
    if isinstance(chain, ParabolicChain):
        return chain.members[0] if chain.members else full_parabolic_type(chain.rs)
    out = full_parabolic_type(chain.rs)
    for n in chain.members:
        out &= normalizer_type(n)
    return out


def cr_to_cp(chain: Chain) -> ParabolicChain:
    """Normalizer types of a CR chain's members, in reversed order."""
    if not membership(ComplexKind.CR, chain):
        raise ValueError("chain is not in CR: some member is not the nilradical of its normalizer")
    return ParabolicChain(
        chain.rs, tuple(normalizer_type(n) for n in reversed(chain.members))
    )


def cp_to_cr(pchain: ParabolicChain) -> Chain:
    """Nilradicals of a parabolic chain's members, in reversed order."""
    return Chain(
        pchain.rs,
        tuple(nilradical_of_parabolic(pchain.rs, j) for j in reversed(pchain.members)),
    )


def parabolic_subsets(rank: int) -> tuple[ParabolicType, ...]:
    """Proper subsets of {1..rank} in canonical order (size, then elements)."""
    out: list[ParabolicType] = []
    for size in range(rank):
        for combo in combinations(range(1, rank + 1), size):
            out.append(frozenset(combo))
    return tuple(out)


def iter_index_chains(
    family_ids: tuple[int, ...],
    succ_within: tuple[tuple[int, ...], ...],
    max_chains: Optional[int] = None,
) -> Iterator[tuple[int, ...]]:
    """All strictly increasing index chains over a family, lexicographically.

    ``succ_within[i]`` lists, in increasing order, the family members that
    strictly contain member ``i``.  The empty chain comes first.  A
    ``max_chains`` cap aborts the walk once exceeded.
    """
    emitted = 0

    def bump() -> None:
        nonlocal emitted
        emitted += 1
        if max_chains is not None and emitted > max_chains:
            raise ChainLimitExceeded(max_chains, emitted)

    bump()
    yield ()
    stack: list[int] = []

    def walk(last: int) -> Iterator[tuple[int, ...]]:
        bump()
        yield tuple(stack)
        for nxt in succ_within[last]:
            stack.append(nxt)
            yield from walk(nxt)
            stack.pop()

    for start in family_ids:
        stack.append(start)
        yield from walk(start)
        stack.pop()


def family_successors(
    lat: IdealLattice, family_ids: tuple[int, ...]
) -> tuple[tuple[int, ...], ...]:
    """Restriction of the lattice successor lists to a family of ideal ids."""
    allowed = set(family_ids)
    table: list[tuple[int, ...]] = [()] * len(lat.masks)
    for i in family_ids:
        table[i] = tuple(j for j in lat.succ[i] if j in allowed)
    return tuple(table)


def count_index_chains(
    family_ids: tuple[int, ...], succ_within: tuple[tuple[int, ...], ...]
) -> int:
    """Exact number of chains (including the empty one), by downward recursion."""
    starting: dict[int, int] = {}
    for i in reversed(family_ids):
        starting[i] = 1 + sum(starting[j] for j in succ_within[i])
    return 1 + sum(starting.values())


def subset_successors(rank: int) -> tuple[tuple[int, ...], ...]:
    """Successor lists for proper subsets of {1..rank} under strict inclusion."""
    subsets = parabolic_subsets(rank)
    return tuple(
        tuple(j for j in range(i + 1, len(subsets)) if subsets[i] < subsets[j])
        for i in range(len(subsets))
    )


def _family_ids(lat: IdealLattice, kind: ComplexKind) -> tuple[int, ...]:
    if kind is ComplexKind.CI:
        return lat.nonzero_ids
    if kind is ComplexKind.CA:
        return lat.abelian_ids
    if kind is ComplexKind.CR:
        return lat.radical_ids
    raise ValueError("CP has no ideal family")


def enumerate_chains(
    rs: RootSystem, kind: ComplexKind, *, max_chains: Optional[int] = None
) -> Union[Iterator[Chain], Iterator[ParabolicChain]]:
    """Stream every chain of the given complex, the empty chain first.

    Emission order is deterministic: lexicographic in member index sequences
    under the canonical ordering of ideals (or of proper subsets for CP).
    If ``max_chains`` is given and the exact total (computed cheaply up
    front) exceeds it, ``ChainLimitExceeded`` is raised before any chain is
    emitted.
    """
    if kind is ComplexKind.CP:
        subsets = parabolic_subsets(rs.rank)
        ids = tuple(range(len(subsets)))
        succ = subset_successors(rs.rank)
        _precheck_limit(ids, succ, max_chains)
        return _enumerate_parabolic_chains(rs, subsets, ids, succ, max_chains)
    lat = ideal_lattice(rs)
    ids = _family_ids(lat, kind)
    succ = family_successors(lat, ids)
    _precheck_limit(ids, succ, max_chains)
    return _enumerate_ideal_chains(rs, lat, ids, succ, max_chains)


def _precheck_limit(
    ids: tuple[int, ...],
    succ: tuple[tuple[int, ...], ...],
    max_chains: Optional[int],
    precheck_size: int = 2000,
) -> None:
    if max_chains is not None and len(ids) <= precheck_size:
        total = count_index_chains(ids, succ)
        if total > max_chains:
            raise ChainLimitExceeded(max_chains, total)


def _enumerate_ideal_chains(
    rs: RootSystem,
    lat: IdealLattice,
    ids: tuple[int, ...],
    succ: tuple[tuple[int, ...], ...],
    max_chains: Optional[int],
) -> Iterator[Chain]:
    for id_chain in iter_index_chains(ids, succ, max_chains):
        yield Chain(rs, tuple(lat.ideal(i) for i in id_chain))


def _enumerate_parabolic_chains(
    rs: RootSystem,
    subsets: tuple[ParabolicType, ...],
    ids: tuple[int, ...],
    succ: tuple[tuple[int, ...], ...],
    max_chains: Optional[int],
) -> Iterator[ParabolicChain]:
    for id_chain in iter_index_chains(ids, succ, max_chains):
        yield ParabolicChain(rs, tuple(subsets[i] for i in id_chain))
