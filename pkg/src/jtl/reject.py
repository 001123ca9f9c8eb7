"""Rej, JRej and NilRej, torsionless tests, and cogeneration."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .elements import ElementSet
from .hom import ModuleHom, dual, hom_set, kernel, preimage
from .module import (
    FiniteModule,
    ModuleClass,
    all_submodules,
    is_submodule,
    module_quotient,
    radical,
    regular_module,
)
from .constructors import quotient_projection, ring_quotient
from .ring import element_classes, jacobson_radical


@dataclass(frozen=True)
class RejectResult:
    module: FiniteModule
    class_used: Union[ModuleClass, str]
    members: ElementSet
    kind: str
    is_submodule: bool = True

    def to_dict(self) -> dict:
        used = self.class_used
        return {
            "kind": self.kind,
            "module": self.module.name,
            "class": used if isinstance(used, str) else [U.name for U in used],
            "members": list(self.members.members),
        }


def _check_class(M: FiniteModule, U) -> ModuleClass:
    U = tuple(U)
    if any(V.ring is not M.ring for V in U):
        raise ValueError("class and module over different rings")
    return U


def _cached(M, key, compute):
    store = M.cache.setdefault("rejects", {})
    hit = store.get(key)
    if hit is None:
        hit = store[key] = compute()
    return hit


def rej(M: FiniteModule, U) -> RejectResult:
    """Intersection of the kernels of all maps from M into members of U.

    With no nonzero map the intersection is over an empty family and the
    result is M itself.
    """
    U = _check_class(M, U)

    def compute():
        bits = (1 << M.size) - 1
        for V in U:
            for f in hom_set(M, V):
                bits &= kernel(f).bits
        return ElementSet(M.size, bits)

    members = _cached(M, ("rej", U), compute)
    return RejectResult(M, U, members, "rej")


def jrej(M: FiniteModule, U) -> RejectResult:
    """{m : mf lies in Rad(V) for every V in U and every f: M -> V}."""
    U = _check_class(M, U)

    def compute():
        bits = (1 << M.size) - 1
        for V in U:
            rad = radical(V)
            for f in hom_set(M, V):
                bits &= preimage(f, rad).bits
        result = ElementSet(M.size, bits)
        assert is_submodule(M, result)
        return result

    members = _cached(M, ("jrej", U), compute)
    assert rej(M, U).members.issubset(members)
    return RejectResult(M, U, members, "jrej")


def dual_images(M: FiniteModule, m: int) -> ElementSet:
    """mM* = {mq : q in M*} as a subset of R."""
    return ElementSet.of(M.ring.size, (q.image[m] for q in dual(M)))


def jrej_ring(M: FiniteModule) -> RejectResult:
    """{m : mM* is contained in J(R)}."""
    J = jacobson_radical(M.ring)

    def compute():
        D = dual(M)
        return ElementSet.of(M.size, (
            m for m in range(M.size) if all(q.image[m] in J for q in D)))

    members = _cached(M, ("jrej_ring",), compute)
    return RejectResult(M, "ring", members, "jrej")


def nilrej(M: FiniteModule) -> RejectResult:
    """{m : every mq is nilpotent}.

    Whether this is a submodule is reported, not assumed; when it is, the
    inclusion in ``jrej_ring`` is asserted.
    """
    nil = element_classes(M.ring).nilpotents
    D = dual(M)
    members = ElementSet.of(M.size, (
        m for m in range(M.size) if all(q.image[m] in nil for q in D)))
    sub = is_submodule(M, members)
    if sub:
        assert members.issubset(jrej_ring(M).members)
    return RejectResult(M, "ring", members, "nilrej", sub)


def _least_nonzero(S: ElementSet) -> Optional[int]:
    return next((x for x in S if x != 0), None)


def torsion_profile(M: FiniteModule) -> dict:
    """Torsionless iff Rej_M(R) = 0; J-torsionless iff JRej_M(R) = 0."""
    RR = regular_module(M.ring)
    r = rej(M, (RR,)).members
    j = jrej_ring(M).members
    torsionless, j_torsionless = r.is_zero(), j.is_zero()
    assert not j_torsionless or torsionless
    witness = _least_nonzero(j) if not j_torsionless else None
    return {"torsionless": torsionless, "j_torsionless": j_torsionless,
            "witness": witness, "rej_witness": _least_nonzero(r)}


def radical_quotient_class(U) -> ModuleClass:
    """(U/Rad(U) for U in the class), in order."""
    return tuple(radical_quotient(V) for V in U)


def radical_quotient(V: FiniteModule) -> FiniteModule:
    return module_quotient(V, radical(V))


def cogenerates(U, M: FiniteModule) -> bool:
    """M embeds in a product of members of U, i.e. Rej_M(U) = 0."""
    return rej(M, U).members.is_zero()


def cogenerating_embedding(U, M: FiniteModule) -> Optional[list[ModuleHom]]:
    """Maps f_1..f_k into members of U with jointly trivial kernel, if any.

    These are the components of a monomorphism M -> prod U_{alpha}.
    """
    U = _check_class(M, U)
    chosen, bits = [], (1 << M.size) - 1
    for V in U:
        for f in hom_set(M, V):
            new = bits & kernel(f).bits
            if new != bits:
                chosen.append(f)
                bits = new
    return chosen if bits == 1 else None


@dataclass
class CogenComparison:
    cogenerating: list            # every L with M/L cogenerated by U'
    minimum: Optional[ElementSet]  # least element under inclusion, if any
    jrej: ElementSet
    holds: bool                   # jrej is a member and lies in every member

    def to_dict(self) -> dict:
        return {
            "cogenerating": [list(L.members) for L in self.cogenerating],
            "minimum": None if self.minimum is None else list(self.minimum.members),
            "jrej": list(self.jrej.members),
            "holds": self.holds,
        }


def smallest_cogen_submodule(M: FiniteModule, U) -> CogenComparison:
    """Scan the submodule lattice for L with M/L cogenerated by U/Rad(U).

    Compares the least such L with JRej_M(U).  The comparison is a verdict,
    not an assumption: ``holds`` is False on a counterexample.
    """
    U = _check_class(M, U)
    primes = radical_quotient_class(U)
    found = [L for L in all_submodules(M)
             if cogenerates(primes, module_quotient(M, L))]
    minimum = None
    for L in found:
        if all(L.issubset(other) for other in found):
            minimum = L
            break
    j = jrej(M, U).members
    holds = j in found and all(j.issubset(L) for L in found)
    return CogenComparison(found, minimum, j, holds)


@dataclass
class ProductEmbedding:
    """m -> (m theta + J(R)) over theta in M*, valued in (R/J(R))^|M*|."""

    quotient_ring_name: str
    components: list      # the dual elements theta, in hom_set order
    table: tuple          # table[m] = tuple of R/J(R) indices
    injective: bool

    def to_dict(self) -> dict:
        return {"ring": self.quotient_ring_name,
                "components": [list(q.image) for q in self.components],
                "table": [list(t) for t in self.table],
                "injective": self.injective}


def product_map(M: FiniteModule) -> ProductEmbedding:
    R = M.ring
    J = jacobson_radical(R)
    if "R/J" not in R.cache:
        R.cache["R/J"] = (ring_quotient(R, J), quotient_projection(R, J))
    RJ, proj = R.cache["R/J"]
    D = dual(M)
    table = tuple(tuple(proj[q.image[m]] for q in D) for m in range(M.size))
    injective = len(set(table)) == M.size
    return ProductEmbedding(RJ.name, list(D), table, injective)


def embedding_into_product(M: FiniteModule) -> Optional[ProductEmbedding]:
    """The map into copies of R/J(R) when it is injective, else None."""
    phi = product_map(M)
    assert phi.injective == torsion_profile(M)["j_torsionless"]
    return phi if phi.injective else None
