"""Bitset-backed subsets of a finite carrier {0, ..., size-1}."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def to_bits(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


@dataclass(frozen=True)
class ElementSet:
    """A subset of element indices of a ring or module of the given size.

    Used for ideals, submodules, annihilators and rejects alike.  Two sets
    compare equal iff they have the same parent size and the same members.
    """

    size: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"members out of range for size {self.size}")

    @classmethod
    def of(cls, size: int, indices: Iterable[int]) -> "ElementSet":
        return cls(size, to_bits(indices))

    @classmethod
    def full(cls, size: int) -> "ElementSet":
        return cls(size, (1 << size) - 1)

    @classmethod
    def zero(cls, size: int) -> "ElementSet":
        return cls(size, 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, i):
        return 0 <= i < self.size and (self.bits >> i) & 1 == 1

    def _same_parent(self, other):
        if self.size != other.size:
            raise ValueError("element sets over different carriers")

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._same_parent(other)
        return ElementSet(self.size, self.bits & other.bits)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._same_parent(other)
        return ElementSet(self.size, self.bits | other.bits)

    def issubset(self, other: "ElementSet") -> bool:
        self._same_parent(other)
        return self.bits & ~other.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.size) - 1

    def is_zero(self) -> bool:
        """True for the set {0}."""
        return self.bits == 1

    def sort_key(self):
        return (len(self), self.members)

    def __repr__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def additive_closure(add, seeds: Iterable[int]) -> int:
    """Bits of the subgroup of a finite abelian group generated by ``seeds``."""
    closed = 1
    for s in seeds:
        closed = subgroup_sum(add, closed, _cyclic_bits(add, s))
    return closed


def _cyclic_bits(add, s):
    bits, x = 1, s
    while not (bits >> x) & 1:
        bits |= 1 << x
        x = add[x][s]
    return bits


def subgroup_sum(add, a_bits: int, b_bits: int) -> int:
    """Bits of A + B for subgroups A, B given as bitsets.

    Built as a union of cosets of A; an element of B already covered lies
    in a coset that is already present.
    """
    result = a_bits
    members = list(iter_bits(a_bits))
    for y in iter_bits(b_bits):
        if (result >> y) & 1:
            continue
        row = add[y]
        for x in members:
            result |= 1 << row[x]
    return result


def sum_lattice(add, cyclic: Iterable[int], cap: int, what: str) -> list[int]:
    """All sums of subsets of the given subgroups, {0} included.

    When ``cyclic`` lists every cyclic submodule (or principal left ideal)
    this is the complete submodule (left ideal) lattice.
    """
    from .errors import BudgetExceeded

    lattice = {1}
    for c in dict.fromkeys(cyclic):
        fresh = set()
        for piece in lattice:
            if c & ~piece:
                fresh.add(subgroup_sum(add, piece, c))
        lattice |= fresh
        if len(lattice) > cap:
            raise BudgetExceeded(what, len(lattice), cap)
    return sorted(lattice, key=lambda b: (b.bit_count(), tuple(iter_bits(b))))


def maximal_among(lattice: list[int], full: int) -> list[int]:
    proper = [b for b in lattice if b != full]
    return [b for b in proper if not any(o != b and b & ~o == 0 for o in proper)]


def minimal_among(lattice: list[int]) -> list[int]:
    nonzero = [b for b in lattice if b != 1]
    return [b for b in nonzero if not any(o != b and o & ~b == 0 for o in nonzero)]
