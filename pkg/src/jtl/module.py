"""Finite left modules over a FiniteRing, given by action tables.

Submodules are :class:`ElementSet` values over the module's element indices.
A module class is an ordered tuple of modules over one ring.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from .elements import (
    ElementSet,
    iter_bits,
    maximal_among,
    minimal_among,
    subgroup_sum,
    sum_lattice,
)
from .errors import AxiomViolation, BudgetExceeded, NotSubmodule, ShapeError
from .limits import LIMITS
from .ring import FiniteRing, Table, _as_table, check_abelian_group, maximal_left_ideals


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """Left module over ``ring``: ``act[r][x]`` is the index of r.x."""

    name: str
    ring: FiniteRing
    size: int
    add: Table
    act: Table
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self):
        return self.size

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.add)

    def full(self) -> ElementSet:
        return ElementSet.full(self.size)

    def zero_set(self) -> ElementSet:
        return ElementSet.zero(self.size)

    def same_tables(self, other: "FiniteModule") -> bool:
        return self.ring is other.ring and (self.size, self.add, self.act) == (
            other.size, other.add, other.act)

    def __repr__(self):
        return f"FiniteModule({self.name!r}, size={self.size}, ring={self.ring.name!r})"


ModuleClass = tuple  # ordered tuple of FiniteModule over a common ring


def check_module_axioms(R: FiniteRing, add: Table, act: Table) -> None:
    m = len(add)
    check_abelian_group(add)
    for x in range(m):
        if act[R.one][x] != x:
            raise AxiomViolation("unitality", (x,))
    for r in range(R.size):
        row = act[r]
        for x in range(m):
            for y in range(m):
                if row[add[x][y]] != add[row[x]][row[y]]:
                    raise AxiomViolation("left_distributivity", (r, x, y))
    for r in range(R.size):
        for s in range(R.size):
            rs, r_plus_s = R.mul[r][s], R.add[r][s]
            for x in range(m):
                if act[r_plus_s][x] != add[act[r][x]][act[s][x]]:
                    raise AxiomViolation("right_distributivity", (r, s, x))
                if act[rs][x] != act[r][act[s][x]]:
                    raise AxiomViolation("compatibility", (r, s, x))


def validate_module(R: FiniteRing, doc) -> FiniteModule:
    """Check a raw module document against ``R`` and build the module."""
    try:
        m = int(doc["size"])
        name = str(doc.get("name", "M"))
        raw_add, raw_act = doc["add"], doc["act"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"malformed module document: {exc}") from exc
    if m < 1:
        raise ShapeError("module size must be positive")
    if m > LIMITS.max_module_size:
        raise BudgetExceeded("module size", m, LIMITS.max_module_size)
    add = _as_table(raw_add, m, m, "add")
    act = _as_table(raw_act, R.size, m, "act")
    for label, table in (("add", add), ("act", act)):
        if any(not 0 <= v < m for row in table for v in row):
            raise ShapeError(f"{label}: index out of range")
    check_module_axioms(R, add, act)
    return FiniteModule(name, R, m, add, act)


def module_to_doc(M: FiniteModule) -> dict:
    return {"kind": "module", "name": M.name, "ring": M.ring.name, "size": M.size,
            "add": [list(r) for r in M.add], "act": [list(r) for r in M.act]}


def _tabulate(name, R, add, act) -> FiniteModule:
    # constructions from valid inputs; the test suite re-validates them
    return FiniteModule(name, R, len(add), tuple(map(tuple, add)), tuple(map(tuple, act)))


# -- constructions --------------------------------------------------------------

def regular_module(R: FiniteRing) -> FiniteModule:
    """The ring as a left module over itself."""
    if "RR" not in R.cache:
        R.cache["RR"] = FiniteModule(f"{R.name}:RR", R, R.size, R.add, R.mul)
    return R.cache["RR"]


def zero_module(R: FiniteRing) -> FiniteModule:
    if "zero_module" not in R.cache:
        R.cache["zero_module"] = _tabulate(f"{R.name}:0", R, [[0]], [[0]] * R.size)
    return R.cache["zero_module"]


def is_submodule(M: FiniteModule, N: ElementSet) -> bool:
    if N.size != M.size or 0 not in N:
        return False
    members = N.members
    return all(M.add[a][b] in N for a in members for b in members) and all(
        M.act[r][a] in N for r in range(M.ring.size) for a in members)


def _quotient(M: FiniteModule, N: ElementSet):
    key = ("quotient", N.bits)
    if key not in M.cache:
        if not is_submodule(M, N):
            raise NotSubmodule(f"{N!r} is not a submodule of {M.name}")
        members = N.members
        rep = [min(M.add[x][n] for n in members) for x in range(M.size)]
        reps = sorted(set(rep))
        index = {r: i for i, r in enumerate(reps)}
        add = [[index[rep[M.add[a][b]]] for b in reps] for a in reps]
        act = [[index[rep[M.act[r][a]]] for a in reps] for r in range(M.ring.size)]
        Q = _tabulate(f"{M.name}/{N!r}", M.ring, add, act)
        M.cache[key] = (Q, tuple(index[r] for r in rep))
    return M.cache[key]


def module_quotient(M: FiniteModule, N: ElementSet) -> FiniteModule:
    """M/N with cosets indexed by their least-index representatives, in order."""
    return _quotient(M, N)[0]


def quotient_projection(M: FiniteModule, N: ElementSet) -> tuple[int, ...]:
    """Index in ``module_quotient(M, N)`` of x + N, for each element x."""
    return _quotient(M, N)[1]


def direct_sum_encode(sizes: Sequence[int], parts: Sequence[int]) -> int:
    index, scale = 0, 1
    for x, s in zip(parts, sizes):
        index += x * scale
        scale *= s
    return index


def direct_sum_decode(sizes: Sequence[int], index: int) -> tuple[int, ...]:
    parts = []
    for s in sizes:
        index, x = divmod(index, s)
        parts.append(x)
    return tuple(parts)


def direct_sum(modules: Sequence[FiniteModule], name: Optional[str] = None) -> FiniteModule:
    """External direct sum.

    The tuple (x_1, ..., x_k) has index x_1 + |M_1| (x_2 + |M_2| (x_3 + ...)),
    so the first summand is the least significant digit.
    """
    modules = tuple(modules)
    if not modules:
        raise ValueError("direct sum of an empty family")
    R = modules[0].ring
    if any(M.ring is not R for M in modules):
        raise ValueError("direct sum over different rings")
    sizes = [M.size for M in modules]
    total = 1
    for s in sizes:
        total *= s
    if total > LIMITS.max_module_size:
        raise BudgetExceeded("module size", total, LIMITS.max_module_size)
    tuples = [direct_sum_decode(sizes, i) for i in range(total)]

    def enc(parts):
        return direct_sum_encode(sizes, parts)

    add = [[enc([M.add[a][b] for M, a, b in zip(modules, x, y)]) for y in tuples]
           for x in tuples]
    act = [[enc([M.act[r][a] for M, a in zip(modules, x)]) for x in tuples]
           for r in range(R.size)]
    label = name or "(" + " + ".join(M.name for M in modules) + ")"
    D = _tabulate(label, R, add, act)
    D.cache["summands"] = modules
    return D


def submodule_as_module(M: FiniteModule, N: ElementSet) -> FiniteModule:
    """N as a module in its own right; local index j is the j-th member of N."""
    key = ("sub", N.bits)
    if key not in M.cache:
        if not is_submodule(M, N):
            raise NotSubmodule(f"{N!r} is not a submodule of {M.name}")
        members = N.members
        local = {x: j for j, x in enumerate(members)}
        add = [[local[M.add[a][b]] for b in members] for a in members]
        act = [[local[M.act[r][a]] for a in members] for r in range(M.ring.size)]
        S = _tabulate(f"{M.name}<{N!r}>", M.ring, add, act)
        S.cache["embedding"] = members
        M.cache[key] = S
    return M.cache[key]


# -- submodules -----------------------------------------------------------------

def _cyclic_bits(M: FiniteModule, m: int) -> int:
    bits = 0
    for r in range(M.ring.size):
        bits |= 1 << M.act[r][m]
    return bits


def cyclic_submodule(M: FiniteModule, m: int) -> ElementSet:
    """Rm = {r.m : r in R}."""
    return ElementSet(M.size, _cyclic_bits(M, m))


def submodule_generated(M: FiniteModule, gens: Iterable[int]) -> ElementSet:
    bits = 1
    for g in gens:
        bits = subgroup_sum(M.add, bits, _cyclic_bits(M, g))
    return ElementSet(M.size, bits)


def submodule_sum(M: FiniteModule, A: ElementSet, B: ElementSet) -> ElementSet:
    return ElementSet(M.size, subgroup_sum(M.add, A.bits, B.bits))


def all_submodules(M: FiniteModule) -> list[ElementSet]:
    """Every submodule, ordered by (cardinality, members)."""
    if "submodules" not in M.cache:
        if M.size > LIMITS.max_module_size:
            raise BudgetExceeded("module size", M.size, LIMITS.max_module_size)
        cyclic = [_cyclic_bits(M, m) for m in range(M.size)]
        lattice = sum_lattice(M.add, cyclic, LIMITS.max_submodules, "submodules")
        M.cache["submodules"] = [ElementSet(M.size, b) for b in lattice]
    return M.cache["submodules"]


def maximal_submodules(M: FiniteModule) -> list[ElementSet]:
    full = (1 << M.size) - 1
    return [ElementSet(M.size, b)
            for b in maximal_among([N.bits for N in all_submodules(M)], full)]


def minimal_submodules(M: FiniteModule) -> list[ElementSet]:
    return [ElementSet(M.size, b)
            for b in minimal_among([N.bits for N in all_submodules(M)])]


def radical(M: FiniteModule) -> ElementSet:
    """Intersection of the maximal submodules; all of M if there are none."""
    if "radical" not in M.cache:
        bits = (1 << M.size) - 1
        for N in maximal_submodules(M):
            bits &= N.bits
        M.cache["radical"] = ElementSet(M.size, bits)
    return M.cache["radical"]


def simple_modules(R: FiniteRing) -> ModuleClass:
    """One representative R/mu per isomorphism class of simple modules."""
    if "simples" not in R.cache:
        from .hom import is_isomorphic

        RR = regular_module(R)
        found = []
        for mu in maximal_left_ideals(R):
            S = module_quotient(RR, mu)
            if not any(is_isomorphic(S, T) for T in found):
                found.append(S)
        R.cache["simples"] = tuple(found)
    return R.cache["simples"]


def left_annihilator_of(M: FiniteModule, S: Optional[Iterable[int]] = None) -> ElementSet:
    """{r : r.s = 0 for all s in S}; S defaults to all of M."""
    S = range(M.size) if S is None else tuple(S)
    R = M.ring
    return ElementSet.of(R.size, (r for r in range(R.size)
                                  if all(M.act[r][s] == 0 for s in S)))


def is_faithful(M: FiniteModule) -> bool:
    """l_R(M) = 0, the intersection of the element annihilators."""
    return left_annihilator_of(M).is_zero()


def is_torsionfree_elementwise(M: FiniteModule) -> bool:
    """l_R(m) = 0 for every nonzero m (the literal elementwise reading)."""
    return all(left_annihilator_of(M, [m]).is_zero() for m in range(1, M.size))


def minimal_generators(M: FiniteModule) -> tuple[int, ...]:
    """Greedy generators: keep adding the least element outside the span."""
    if "generators" not in M.cache:
        gens, span = [], 1
        for x in range(M.size):
            if not (span >> x) & 1:
                gens.append(x)
                span = subgroup_sum(M.add, span, _cyclic_bits(M, x))
        M.cache["generators"] = tuple(gens)
    return M.cache["generators"]


def classify_module_basic(M: FiniteModule) -> dict:
    subs = all_submodules(M)
    socle = 1
    for K in minimal_submodules(M):
        socle = subgroup_sum(M.add, socle, K.bits)
    return {
        "simple": len(subs) == 2,
        "semisimple": socle == (1 << M.size) - 1,
        "cyclic": any(_cyclic_bits(M, m) == (1 << M.size) - 1 for m in range(M.size)),
        "finitely_generated": True,
    }


def is_direct_summand(M: FiniteModule, N: ElementSet) -> tuple[bool, Optional[ElementSet]]:
    """Whether N has a complement C (N & C = 0, N + C = M); returns the least C."""
    if not is_submodule(M, N):
        raise NotSubmodule(f"{N!r} is not a submodule of {M.name}")
    full = (1 << M.size) - 1
    for C in all_submodules(M):
        if N.bits & C.bits == 1 and len(N) * len(C) == M.size:
            if subgroup_sum(M.add, N.bits, C.bits) == full:
                return True, C
    return False, None


def element_label(M: FiniteModule, x: int):
    """Tuple form of x for direct sums, the bare index otherwise."""
    summands = M.cache.get("summands")
    if summands is None:
        return x
    return direct_sum_decode([S.size for S in summands], x)
