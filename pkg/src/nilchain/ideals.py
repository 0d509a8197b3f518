"""Ad-nilpotent ideals of the fixed Borel subalgebra, as sets of positive roots.

An ideal is an upper-closed set of positive roots: whenever it contains a
root ``b`` and ``b + alpha_i`` is again a positive root, it contains
``b + alpha_i``.  By height induction this is equivalent to closure under
adding any positive root.  The empty set is the zero ideal; the full
positive system is the nilradical of the Borel.

Commutators follow the generic structure-constant convention: the bracket
of the root spaces for ``b`` and ``g`` is nonzero exactly when ``b + g`` is
a root.  Parabolic types are subsets of ``{1..rank}``, naming which negative
simple root spaces the parabolic contains.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .root_system import RootSystem

ParabolicType = frozenset[int]


def full_parabolic_type(rs: RootSystem) -> ParabolicType:
    """The type of the full group: all simple indices 1..rank."""
    return frozenset(range(1, rs.rank + 1))


def _check_parabolic_type(rs: RootSystem, subset: Iterable[int]) -> ParabolicType:
    j = frozenset(subset)
    if not j <= full_parabolic_type(rs):
        bad = sorted(j - full_parabolic_type(rs))
        raise ValueError(f"parabolic type {bad} not within simple indices 1..{rs.rank}")
    return j


class Ideal:
    """An upper-closed set of positive roots of a fixed root system.

    Stored as a bitmask over canonical root indices.  Instances are immutable
    values; equality compares the owning system's spec and the root set.
    """

    __slots__ = ("rs", "mask")

    def __init__(self, rs: RootSystem, root_indices: Iterable[int] = ()) -> None:
        mask = 0
        for r in root_indices:
            if not 0 <= r < rs.num_positive_roots:
                raise IndexError(f"root index {r} out of range for {rs.spec}")
            mask |= 1 << r
        _validate_upper_closed(rs, mask)
        self.rs = rs
        self.mask = mask

    @classmethod
    def from_mask(cls, rs: RootSystem, mask: int) -> "Ideal":
        if mask < 0 or mask >> rs.num_positive_roots:
            raise ValueError(f"mask {mask:#x} out of range for {rs.spec}")
        _validate_upper_closed(rs, mask)
        return cls._unchecked(rs, mask)

    @classmethod
    def _unchecked(cls, rs: RootSystem, mask: int) -> "Ideal":
        self = object.__new__(cls)
        self.rs = rs
        self.mask = mask
        return self

    def root_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rs.num_positive_roots) if (self.mask >> i) & 1)

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, root_index: int) -> bool:
        return 0 <= root_index < self.rs.num_positive_roots and (self.mask >> root_index) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.root_indices())

    def __le__(self, other: "Ideal") -> bool:
        _check_same_system(self, other)
        return self.mask | other.mask == other.mask

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.rs.spec == other.rs.spec and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.rs.spec, self.mask))

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self.root_indices()) + "}"

    def __repr__(self) -> str:
        return f"Ideal({self.rs.spec}, {self})"


def _validate_upper_closed(rs: RootSystem, mask: int) -> None:
    steps = rs.simple_step_table
    for r in range(rs.num_positive_roots):
        if not (mask >> r) & 1:
            continue
        for i in range(1, rs.rank + 1):
            up = steps.get((r, i))
            if up is not None and not (mask >> up) & 1:
                raise ValueError(
                    f"root set is not upper-closed: contains root {r} but not root {up} "
                    f"(= root {r} + alpha_{i})"
                )


def _check_same_system(a: Ideal, b: Ideal) -> None:
    if a.rs.spec != b.rs.spec:
        raise ValueError(f"ideals belong to different root systems: {a.rs.spec} vs {b.rs.spec}")


def enumerate_ideals(rs: RootSystem) -> tuple[Ideal, ...]:
    """All ideals of the Borel, in canonical order (ascending size, then mask).

    Depth-first search over the root poset: roots are visited from high to
    low height, and a root may only be included once all of its upward simple
    steps are in.  The zero ideal and the full nilradical are both present.
    """
    return tuple(Ideal._unchecked(rs, m) for m in _ideal_masks(rs))


def _ideal_masks(rs: RootSystem) -> tuple[int, ...]:
    m = rs.num_positive_roots
    ups: list[tuple[int, ...]] = []
    for r in range(m):
        ups.append(
            tuple(
                rs.simple_step_table[(r, i)]
                for i in range(1, rs.rank + 1)
                if (r, i) in rs.simple_step_table
            )
        )
    order = sorted(range(m), key=lambda r: -rs.positive_roots[r].height)
    found: list[int] = []

    def walk(pos: int, mask: int) -> None:
        if pos == m:
            found.append(mask)
            return
        r = order[pos]
        walk(pos + 1, mask)
        if all((mask >> u) & 1 for u in ups[r]):
            walk(pos + 1, mask | (1 << r))

    walk(0, 0)
    found.sort(key=lambda mk: (mk.bit_count(), mk))
    return tuple(found)


def is_abelian(n: Ideal) -> bool:
    """Whether no two members (repeats allowed) sum to a root."""
    members = n.root_indices()
    table = n.rs.addition_table
    for x, a in enumerate(members):
        for b in members[x:]:
            if (a, b) in table:
                return False
    return True


def derived_ideal(n: Ideal) -> Ideal:
    """The commutator ideal: all pairwise sums of members that are roots."""
    members = n.root_indices()
    table = n.rs.addition_table
    mask = 0
    for x, a in enumerate(members):
        for b in members[x:]:
            s = table.get((a, b))
            if s is not None:
                mask |= 1 << s
    return Ideal.from_mask(n.rs, mask)


def sum_ideals(a: Ideal, b: Ideal) -> Ideal:
    """Union of two ideals of the same system (again an ideal)."""
    _check_same_system(a, b)
    return Ideal.from_mask(a.rs, a.mask | b.mask)


def normalizer_type(n: Ideal) -> ParabolicType:
    """Type of the parabolic normalizing ``n``.

    A simple index ``i`` belongs to the type exactly when ``alpha_i`` is not
    in ``n`` and stepping any member of ``n`` down by ``alpha_i`` stays in
    ``n`` whenever the step lands on a positive root; those are the
    conditions for the negative simple root space to preserve ``n`` under
    generic structure constants.
    """
    rs = n.rs
    out = []
    for i in range(1, rs.rank + 1):
        if rs.simple_root_index(i) in n:
            continue
        if all(
            down in n
            for b in n
            if (down := rs.subtract_simple(b, i)) is not None
        ):
            out.append(i)
    return frozenset(out)


def nilradical_of_parabolic(rs: RootSystem, subset: Iterable[int]) -> Ideal:
    """Roots whose support is not contained in the given set of simple indices."""
    j = _check_parabolic_type(rs, subset)
    mask = 0
    for r, root in enumerate(rs.positive_roots):
        support = {i + 1 for i, c in enumerate(root.coeffs) if c}
        if not support <= j:
            mask |= 1 << r
    return Ideal.from_mask(rs, mask)


def is_radical_member(n: Ideal) -> bool:
    """Whether ``n`` equals the nilradical of its own normalizer parabolic."""
    return nilradical_of_parabolic(n.rs, normalizer_type(n)).mask == n.mask


class IdealLattice:
    """Per-ideal tables over the full family of ideals of one root system.

    Everything chain enumeration and pairing needs, keyed by canonical ideal
    index: abelian and radical flags, the derived ideal, the nilradical of
    the normalizer, normalizer types as bitmasks over simple positions, the
    containment relation, and covers-by-index successor lists.  Index 0 is
    always the zero ideal.
    """

    __slots__ = (
        "rs",
        "masks",
        "index",
        "abelian",
        "radical",
        "derived",
        "radical_closure",
        "normalizer_bits",
        "containers",
        "succ",
        "nonzero_ids",
        "abelian_ids",
        "radical_ids",
        "full_simple_bits",
    )

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self.masks = _ideal_masks(rs)
        self.index = {mk: i for i, mk in enumerate(self.masks)}
        ideals = [Ideal._unchecked(rs, mk) for mk in self.masks]
        self.abelian = tuple(is_abelian(n) for n in ideals)
        self.radical = tuple(is_radical_member(n) for n in ideals)
        self.derived = tuple(self.index[derived_ideal(n).mask] for n in ideals)
        norm_types = [normalizer_type(n) for n in ideals]
        self.radical_closure = tuple(
            self.index[nilradical_of_parabolic(rs, j).mask] for j in norm_types
        )
        self.normalizer_bits = tuple(
            sum(1 << (i - 1) for i in j) for j in norm_types
        )
        count = len(self.masks)
        containers = []
        for i in range(count):
            bits = 0
            for j in range(count):
                if self.masks[i] | self.masks[j] == self.masks[j]:
                    bits |= 1 << j
            containers.append(bits)
        self.containers = tuple(containers)
        self.succ = tuple(
            tuple(
                j
                for j in range(i + 1, count)
                if self.masks[i] != self.masks[j]
                and self.masks[i] | self.masks[j] == self.masks[j]
            )
            for i in range(count)
        )
        self.nonzero_ids = tuple(range(1, count))
        self.abelian_ids = tuple(i for i in self.nonzero_ids if self.abelian[i])
        self.radical_ids = tuple(i for i in self.nonzero_ids if self.radical[i])
        self.full_simple_bits = (1 << rs.rank) - 1

    def __len__(self) -> int:
        return len(self.masks)

    def ideal(self, ideal_id: int) -> Ideal:
        return Ideal._unchecked(self.rs, self.masks[ideal_id])

    def id_of(self, n: Ideal) -> int:
        return self.index[n.mask]

    def union_id(self, a: int, b: int) -> int:
        return self.index[self.masks[a] | self.masks[b]]

    def normalizer_type_of(self, ideal_id: int) -> ParabolicType:
        bits = self.normalizer_bits[ideal_id]
        return frozenset(i + 1 for i in range(self.rs.rank) if (bits >> i) & 1)


_LATTICE_CACHE: dict[object, IdealLattice] = {}


def ideal_lattice(rs: RootSystem) -> IdealLattice:
    """The (cached) precomputed lattice for ``rs``; construction is deterministic."""
    lat = _LATTICE_CACHE.get(rs.spec)
    if lat is None:
        lat = IdealLattice(rs)
        _LATTICE_CACHE[rs.spec] = lat
    return lat
