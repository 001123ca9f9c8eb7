"""Finite unital rings given by addition and multiplication tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import NamedTuple, Optional

from .elements import (
    ElementSet,
    additive_closure,
    iter_bits,
    maximal_among,
    minimal_among,
    subgroup_sum,
    sum_lattice,
    to_bits,
)
from .errors import AxiomViolation, BudgetExceeded, ShapeError
from .limits import LIMITS

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """Cayley-table presentation of a finite unital associative ring.

    Index 0 is the zero element.  Instances compare by identity; use
    :meth:`same_tables` for structural equality.  Build them through
    :func:`validate_ring` or the constructors, never directly from
    unchecked tables.
    """

    name: str
    size: int
    add: Table
    mul: Table
    one: int
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self):
        return self.size

    def same_tables(self, other: "FiniteRing") -> bool:
        return (self.size, self.one, self.add, self.mul) == (
            other.size, other.one, other.add, other.mul)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.add)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    @cached_property
    def additive_generators(self) -> tuple[int, ...]:
        """Greedy least-index generators of (R, +)."""
        gens, span = [], 1
        for x in range(self.size):
            if not (span >> x) & 1:
                gens.append(x)
                span = additive_closure(self.add, gens)
        return tuple(gens)

    def full(self) -> ElementSet:
        return ElementSet.full(self.size)

    def zero_set(self) -> ElementSet:
        return ElementSet.zero(self.size)

    def __repr__(self):
        return f"FiniteRing({self.name!r}, size={self.size})"


def _as_table(raw, rows, cols, label) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in raw)
    except (TypeError, ValueError) as exc:
        raise ShapeError(f"{label}: not a table of integers") from exc
    if len(table) != rows or any(len(row) != cols for row in table):
        raise ShapeError(f"{label}: expected {rows}x{cols} table")
    return table


def check_abelian_group(add: Table, label: str = "add") -> None:
    """Exhaustive abelian-group check with identity at index 0."""
    n = len(add)
    for i in range(n):
        if add[0][i] != i or add[i][0] != i:
            raise AxiomViolation(f"{label}_identity", (0, i))
        if 0 not in add[i]:
            raise AxiomViolation(f"{label}_inverse", (i,))
    for i in range(n):
        for j in range(i + 1, n):
            if add[i][j] != add[j][i]:
                raise AxiomViolation(f"{label}_commutativity", (i, j))
    for i, j, k in product(range(n), repeat=3):
        if add[add[i][j]][k] != add[i][add[j][k]]:
            raise AxiomViolation(f"{label}_associativity", (i, j, k))


def validate_ring(doc) -> FiniteRing:
    """Check a raw ring document (the JSON ring-file schema) and build the ring.

    Every axiom is checked over all element pairs and triples.
    """
    try:
        n = int(doc["size"])
        one = int(doc["one"])
        name = str(doc.get("name", "R"))
        raw_add, raw_mul = doc["add"], doc["mul"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"malformed ring document: {exc}") from exc
    if n < 1:
        raise ShapeError("ring size must be positive")
    if n > LIMITS.max_ring_size:
        raise BudgetExceeded("ring size", n, LIMITS.max_ring_size)
    add = _as_table(raw_add, n, n, "add")
    mul = _as_table(raw_mul, n, n, "mul")
    for label, table in (("add", add), ("mul", mul)):
        if any(not 0 <= v < n for row in table for v in row):
            raise ShapeError(f"{label}: index out of range")
    if not 0 <= one < n:
        raise ShapeError("one: index out of range")

    check_abelian_group(add)
    for i in range(n):
        if mul[one][i] != i or mul[i][one] != i:
            raise AxiomViolation("unit", (one, i))
    for a, b, c in product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise AxiomViolation("mul_associativity", (a, b, c))
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            raise AxiomViolation("left_distributivity", (a, b, c))
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            raise AxiomViolation("right_distributivity", (a, b, c))
    return FiniteRing(name, n, add, mul, one)


def ring_to_doc(R: FiniteRing) -> dict:
    return {"kind": "ring", "name": R.name, "size": R.size, "one": R.one,
            "add": [list(r) for r in R.add], "mul": [list(r) for r in R.mul]}


# -- element classes ---------------------------------------------------------

class ElementClasses(NamedTuple):
    units: ElementSet
    idempotents: ElementSet
    nilpotents: ElementSet


def element_classes(R: FiniteRing) -> ElementClasses:
    if "classes" not in R.cache:
        n, mul = R.size, R.mul
        # one-sided inverses are two-sided in a finite ring
        units = [u for u in range(n) if R.one in mul[u]]
        idem = [e for e in range(n) if mul[e][e] == e]
        nil = []
        for a in range(n):
            x = a
            for _ in range(n):
                if x == 0:
                    nil.append(a)
                    break
                x = mul[x][a]
        R.cache["classes"] = ElementClasses(
            ElementSet.of(n, units), ElementSet.of(n, idem), ElementSet.of(n, nil))
    return R.cache["classes"]


def is_left_ideal(R: FiniteRing, S: ElementSet) -> bool:
    if 0 not in S:
        return False
    members = S.members
    return all(R.add[a][b] in S for a in members for b in members) and all(
        R.mul[r][a] in S for r in range(R.size) for a in members)


def is_right_ideal(R: FiniteRing, S: ElementSet) -> bool:
    if 0 not in S:
        return False
    members = S.members
    return all(R.add[a][b] in S for a in members for b in members) and all(
        R.mul[a][r] in S for r in range(R.size) for a in members)


def is_two_sided_ideal(R: FiniteRing, S: ElementSet) -> bool:
    return is_left_ideal(R, S) and is_right_ideal(R, S)


def jacobson_radical(R: FiniteRing) -> ElementSet:
    """{x : 1 - rx is a unit for every r}."""
    if "J" not in R.cache:
        units = element_classes(R).units
        one_minus = R.add[R.one]
        J = ElementSet.of(R.size, (
            x for x in range(R.size)
            if all(one_minus[R.neg[R.mul[r][x]]] in units for r in range(R.size))))
        assert is_two_sided_ideal(R, J), "Jacobson radical is not a two-sided ideal"
        R.cache["J"] = J
    return R.cache["J"]


# -- ideals and annihilators -------------------------------------------------

def principal_left_ideal(R: FiniteRing, a: int) -> ElementSet:
    return ElementSet.of(R.size, (R.mul[r][a] for r in range(R.size)))


def left_ideals(R: FiniteRing) -> list[ElementSet]:
    """All left ideals, sorted by (cardinality, members)."""
    if "left_ideals" not in R.cache:
        if R.size > LIMITS.max_ring_size:
            raise BudgetExceeded("ring size", R.size, LIMITS.max_ring_size)
        cyclic = [principal_left_ideal(R, a).bits for a in range(R.size)]
        lattice = sum_lattice(R.add, cyclic, LIMITS.max_ideals, "left ideals")
        R.cache["left_ideals"] = [ElementSet(R.size, b) for b in lattice]
    return R.cache["left_ideals"]


def maximal_left_ideals(R: FiniteRing) -> list[ElementSet]:
    full = (1 << R.size) - 1
    return [ElementSet(R.size, b)
            for b in maximal_among([I.bits for I in left_ideals(R)], full)]


def minimal_left_ideals(R: FiniteRing) -> list[ElementSet]:
    return [ElementSet(R.size, b)
            for b in minimal_among([I.bits for I in left_ideals(R)])]


def two_sided_ideals(R: FiniteRing) -> list[ElementSet]:
    return [I for I in left_ideals(R) if is_right_ideal(R, I)]


def right_annihilator(R: FiniteRing, S) -> ElementSet:
    """{x : sx = 0 for all s in S}."""
    S = tuple(S)
    return ElementSet.of(R.size, (
        x for x in range(R.size) if all(R.mul[s][x] == 0 for s in S)))


def left_annihilator(R: FiniteRing, S) -> ElementSet:
    """{x : xs = 0 for all s in S}."""
    S = tuple(S)
    return ElementSet.of(R.size, (
        x for x in range(R.size) if all(R.mul[x][s] == 0 for s in S)))


def left_quotient_set(R: FiniteRing, A: ElementSet, B) -> ElementSet:
    """(A : B)_l = {t : tb in A for all b in B}.

    The defining condition is inclusion tB in A, not proper inclusion.
    """
    B = tuple(B)
    return ElementSet.of(R.size, (
        t for t in range(R.size) if all(R.mul[t][b] in A for b in B)))


def additive_span(R: FiniteRing, seeds) -> ElementSet:
    return ElementSet(R.size, additive_closure(R.add, seeds))


def products_span(R: FiniteRing, A: ElementSet, B: ElementSet) -> ElementSet:
    """Additive closure of {ab : a in A, b in B}."""
    return additive_span(R, {R.mul[a][b] for a in A for b in B})


def central_idempotents(R: FiniteRing) -> list[int]:
    idem = element_classes(R).idempotents
    return [e for e in idem
            if all(R.mul[e][x] == R.mul[x][e] for x in range(R.size))]


def division_ring_decomposition(R: FiniteRing) -> Optional[list[int]]:
    """Central idempotents e_1..e_k summing to 1 with each e_i R a division ring.

    Returns the list (ascending) or None when R is no such product.  The
    zero ring is the empty product.
    """
    if R.size == 1:
        return []
    central = [e for e in central_idempotents(R) if e != 0]
    # primitive central idempotents: no nonzero central idempotent strictly below
    primitive = [e for e in central if not any(
        f != e and R.mul[e][f] == f for f in central)]
    total = 0
    for e in primitive:
        total = R.add[total][e]
    if total != R.one:
        return None
    for e in primitive:
        block = [x for x in range(R.size) if R.mul[e][x] == x]
        for x in block:
            if x != 0 and not any(R.mul[x][y] == e for y in block):
                return None
    return sorted(primitive)


# -- ring profile -------------------------------------------------------------

RING_FLAGS = ("semiprimitive", "semiprime", "reduced", "domain", "division",
              "von_neumann_regular", "fully_idempotent", "LA", "self_injective",
              "semisimple")


@dataclass
class RingProfile:
    flags: dict
    witnesses: dict

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def as_dict(self) -> dict:
        return {"flags": dict(self.flags), "witnesses": dict(self.witnesses)}


def _set(S: ElementSet) -> list[int]:
    return list(S.members)


def classify_ring(R: FiniteRing) -> RingProfile:
    """Evaluate every ring-level flag; each false flag gets a witness."""
    if "profile" in R.cache:
        return R.cache["profile"]
    n, mul = R.size, R.mul
    flags, wit = {}, {}
    classes = element_classes(R)
    J = jacobson_radical(R)

    flags["semiprimitive"] = J.is_zero()
    if not J.is_zero():
        wit["semiprimitive"] = {"a": min(x for x in J if x != 0)}

    bad = next((a for a in range(1, n)
                if all(mul[mul[a][r]][a] == 0 for r in range(n))), None)
    flags["semiprime"] = bad is None
    if bad is not None:
        wit["semiprime"] = {"a": bad}

    flags["reduced"] = classes.nilpotents.is_zero()
    if not flags["reduced"]:
        wit["reduced"] = {"a": min(x for x in classes.nilpotents if x != 0)}

    if n == 1:
        flags["domain"] = flags["division"] = False
        wit["domain"] = wit["division"] = {"reason": "zero ring"}
    else:
        zd = next(((a, b) for a in range(1, n) for b in range(1, n)
                   if mul[a][b] == 0), None)
        flags["domain"] = zd is None
        if zd is not None:
            wit["domain"] = {"a": zd[0], "b": zd[1]}
        nonunit = next((a for a in range(1, n) if a not in classes.units), None)
        flags["division"] = nonunit is None
        if nonunit is not None:
            wit["division"] = {"a": nonunit}

    bad = next((a for a in range(n)
                if not any(mul[mul[a][x]][a] == a for x in range(n))), None)
    flags["von_neumann_regular"] = bad is None
    if bad is not None:
        wit["von_neumann_regular"] = {"a": bad}

    bad = None
    for a in range(n):
        Ra = principal_left_ideal(R, a)
        if products_span(R, Ra, Ra) != Ra:
            bad = a
            break
    flags["fully_idempotent"] = bad is None
    if bad is not None:
        wit["fully_idempotent"] = {"a": bad}

    bad = None
    for I in left_ideals(R):
        closure = left_annihilator(R, right_annihilator(R, I))
        if closure != I:
            bad = {"ideal": _set(I), "l_r": _set(closure)}
            break
    flags["LA"] = bad is None
    if bad is not None:
        wit["LA"] = bad

    bad = baer_counterexample(R)
    flags["self_injective"] = bad is None
    if bad is not None:
        wit["self_injective"] = bad

    socle_bits = 1
    for K in minimal_left_ideals(R):
        socle_bits = subgroup_sum(R.add, socle_bits, K.bits)
    socle = ElementSet(n, socle_bits)
    flags["semisimple"] = socle.is_full()
    if not flags["semisimple"]:
        wit["semisimple"] = {"socle": _set(socle)}

    profile = RingProfile(flags, wit)
    assert not flags["division"] or flags["domain"]
    assert not flags["semisimple"] or flags["semiprimitive"]
    assert not flags["von_neumann_regular"] or flags["fully_idempotent"]
    R.cache["profile"] = profile
    return profile


def baer_counterexample(R: FiniteRing) -> Optional[dict]:
    """A left ideal and a map I -> R that is not right multiplication, if any."""
    from .hom import baer_extension_exists, hom_set
    from .module import regular_module, submodule_as_module

    RR = regular_module(R)
    for I in left_ideals(R):
        sub = submodule_as_module(RR, I)
        for f in hom_set(sub, RR):
            if baer_extension_exists(R, I, f) is None:
                return {"ideal": _set(I), "map": list(f.image)}
    return None


__all__ = [
    "FiniteRing", "validate_ring", "ring_to_doc", "element_classes",
    "jacobson_radical", "left_ideals", "maximal_left_ideals",
    "minimal_left_ideals", "two_sided_ideals", "right_annihilator",
    "left_annihilator", "left_quotient_set", "classify_ring", "RingProfile",
    "RING_FLAGS", "is_left_ideal", "is_right_ideal", "is_two_sided_ideal",
    "principal_left_ideal", "products_span", "additive_span",
    "central_idempotents", "division_ring_decomposition", "to_bits",
    "iter_bits",
]
